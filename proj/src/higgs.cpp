#include "quadpair/higgs.hpp"

#include <cstdlib>

namespace quadpair {

Pi1Tables pi1Tables(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidModel, "n must be >= 1");
  Pi1Tables t;
  t.n = n;
  t.euFreeRank = 2;
  t.quotientFreeRank = 1;
  t.quotientHasTorsion = n % 2 == 0;
  t.euDescription = "Z x Z";
  t.quotientDescription = t.quotientHasTorsion ? "Z x Z/2" : "Z";
  return t;
}

ProjectedInvariants projectInvariants(long long d1, long long d2, int n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "projected invariants require even n");
  ProjectedInvariants p;
  p.a = d1 - static_cast<long long>(n) * d2 / 2;
  p.b = static_cast<int>(((d2 % 2) + 2) % 2);
  return p;
}

MilnorWood milnorWood(long long d1, long long d2, int n, int g) {
  if (g < 2) throw Error(ErrorCode::InvalidModel, "Milnor-Wood bound requires g >= 2");
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "the invariant a = d1 - n d2/2 requires even n");
  MilnorWood m;
  m.bound = static_cast<long long>(n) * (g - 1);
  m.degreeFormHolds = -m.bound + d2 <= d1 && d1 <= m.bound + d2;
  m.a = projectInvariants(d1, d2, n).a;
  m.toledoFormHolds = std::llabs(m.a) <= m.bound;
  m.formsAgree = m.degreeFormHolds == m.toledoFormHolds;
  return m;
}

std::pair<long long, long long> dualize(long long d1, long long d2, int n) {
  return {static_cast<long long>(n) * d2 - d1, d2};
}

Normalized normalize(long long d1, long long d2, int n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "normalization requires even n");
  Normalized r;
  r.twist = -Rational(d2, 2).floor();
  r.d1 = d1 + static_cast<long long>(n) * r.twist;
  r.d2 = d2 + 2 * r.twist;
  return r;
}

bool liftToSp(long long d2) { return d2 % 2 == 0; }

int so23WFromB(long long a, int b) { return static_cast<int>((((a + b) % 2) + 2) % 2); }
int so23BFromW(long long a, int w) { return static_cast<int>((((a + w) % 2) + 2) % 2); }

SO23Bundle so23Bundle(const PicClass& L1, const PicClass& L2, const PicClass& Lcls) {
  SO23Bundle b;
  b.F = picSub(picAdd(L1, L2), Lcls);
  b.wRank = 3;
  b.wDegree = 0;  // S^2 V tensor Lambda^2 V^{-1} has degree 3 d1 - 3 d1
  b.toledo = b.F.degree;
  return b;
}

PicClass EspQuadruple::betaTarget(GammaEntry e) const {
  PicClass K = curve.canonicalClass();
  PicClass tw = picSub(K, Lcls);
  switch (e) {
    case GammaEntry::G11: return picAdd(picScale(2, L1), tw);
    case GammaEntry::G12: return picAdd(picAdd(L1, L2), tw);
    case GammaEntry::G22: return picAdd(picScale(2, L2), tw);
  }
  throw Error(ErrorCode::InvalidModel, "bad entry");
}

PicClass EspQuadruple::gammaTarget(GammaEntry e) const {
  PicClass K = curve.canonicalClass();
  PicClass tw = picAdd(Lcls, K);
  switch (e) {
    case GammaEntry::G11: return picSub(tw, picScale(2, L1));
    case GammaEntry::G12: return picSub(tw, picAdd(L1, L2));
    case GammaEntry::G22: return picSub(tw, picScale(2, L2));
  }
  throw Error(ErrorCode::InvalidModel, "bad entry");
}

void EspQuadruple::validate() const {
  curve.validate();
  if (degreeOnlyD1) {
    if (b11 || b12 || b22 || g11 || g12 || g22)
      throw Error(ErrorCode::InvalidModel, "degree-only V admits no entry divisors");
    return;
  }
  auto check = [&](const std::optional<Divisor>& div, const PicClass& target,
                   const char* name) {
    if (!div) return;
    div->validate();
    if (div->degree() != target.degree || classOfDivisor(*div, curve) != target)
      throw Error(ErrorCode::InvalidModel,
                  std::string(name) + " divisor does not match its target class");
  };
  check(b11, betaTarget(GammaEntry::G11), "b11");
  check(b12, betaTarget(GammaEntry::G12), "b12");
  check(b22, betaTarget(GammaEntry::G22), "b22");
  check(g11, gammaTarget(GammaEntry::G11), "g11");
  check(g12, gammaTarget(GammaEntry::G12), "g12");
  check(g22, gammaTarget(GammaEntry::G22), "g22");
  if (betaZero() && !g11 && !g12 && !g22)
    throw Error(ErrorCode::InvalidModel, "(beta, gamma) must not both vanish");
}

DecomposablePair EspQuadruple::toQuadraticPair() const {
  DecomposablePair p;
  p.curve = curve;
  p.U = picAdd(Lcls, curve.canonicalClass());
  p.L1 = L1;
  p.L2 = L2;
  p.g11 = g11;
  p.g12 = g12;
  p.g22 = g22;
  return p;
}

namespace {

// Filtration 0 <= V1 <= V2 <= V over candidates {0, Factor1, Factor2, V}.
// Entries allowed in the beta condition for (V1, V2), with L1 <-> index 1.
struct Filtration {
  int v1;  // 0 = zero, 1 = Factor1, 2 = Factor2, 3 = V
  int v2;
};

long long subDegree(const EspQuadruple& q, int v) {
  switch (v) {
    case 0: return 0;
    case 1: return q.L1.degree;
    case 2: return q.L2.degree;
    default: return q.d1();
  }
}

// beta must lie in S^2 V2 + V1 (x)_S V; entrywise conditions on b11/b12/b22.
bool betaAllowed(const EspQuadruple& q, const Filtration& f) {
  auto forbidden = [&](GammaEntry e) -> bool {
    const std::optional<Divisor>& div = e == GammaEntry::G11   ? q.b11
                                        : e == GammaEntry::G12 ? q.b12
                                                               : q.b22;
    if (!div) return false;  // zero entry lies in every subsheaf
    if (f.v2 == 3) return false;
    if (f.v1 == 3) return false;
    // S^2 V2 spans: entries within factor v2; V1 (x) V spans: entries touching v1.
    auto touches = [&](GammaEntry entry, int factor) {
      if (factor == 0) return false;
      if (entry == GammaEntry::G11) return factor == 1;
      if (entry == GammaEntry::G22) return factor == 2;
      return factor == 1 || factor == 2;  // mixed entry touches both factors
    };
    auto within = [&](GammaEntry entry, int factor) {
      if (factor == 0 || factor == 3) return factor == 3;
      if (entry == GammaEntry::G11) return factor == 1;
      if (entry == GammaEntry::G22) return factor == 2;
      return false;  // mixed entry is not in S^2(factor)
    };
    return !(within(e, f.v2) || touches(e, f.v1));
  };
  return !forbidden(GammaEntry::G11) && !forbidden(GammaEntry::G12) &&
         !forbidden(GammaEntry::G22);
}

// gamma must lie in S^2 V1-perp + V2-perp (x)_S V*; for factors,
// Factor1-perp = L2^{-1} component and vice versa.
bool gammaAllowed(const EspQuadruple& q, const Filtration& f) {
  auto forbidden = [&](GammaEntry e) -> bool {
    const std::optional<Divisor>& div = e == GammaEntry::G11   ? q.g11
                                        : e == GammaEntry::G12 ? q.g12
                                                               : q.g22;
    if (!div) return false;
    if (f.v1 == 0) return false;  // S^2 V* is everything
    int perp1 = f.v1 == 3 ? 0 : (f.v1 == 1 ? 2 : 1);  // annihilator as a factor index
    int perp2 = f.v2 == 3 ? 0 : (f.v2 == 1 ? 2 : 1);
    auto within = [&](GammaEntry entry, int factor) {
      if (factor == 0) return false;
      if (entry == GammaEntry::G11) return factor == 1;
      if (entry == GammaEntry::G22) return factor == 2;
      return false;
    };
    auto touches = [&](GammaEntry entry, int factor) {
      if (factor == 0) return false;
      if (entry == GammaEntry::G11) return factor == 1;
      if (entry == GammaEntry::G22) return factor == 2;
      return true;
    };
    bool inS2Perp1 = f.v1 == 0 ? true : within(e, perp1);
    bool inPerp2TensorV = f.v2 == 3 ? false : (f.v2 == 0 ? true : touches(e, perp2));
    return !(inS2Perp1 || inPerp2TensorV);
  };
  return !forbidden(GammaEntry::G11) && !forbidden(GammaEntry::G12) &&
         !forbidden(GammaEntry::G22);
}

}  // namespace

EspVerdict espSemistable(const EspQuadruple& q) {
  if (q.degreeOnlyD1)
    throw Error(ErrorCode::UnsupportedModel,
                q.betaZero()
                    ? "degree-only V carries no gamma data to evaluate semistability"
                    : "degree-only V with beta != 0 admits no filtration evaluation");
  q.validate();
  EspVerdict out;
  long long d = q.d1();
  bool ss = true;
  bool strict = false;
  for (int v1 : {0, 1, 2, 3}) {
    for (int v2 : {0, 1, 2, 3}) {
      if (v1 != 0 && v1 != v2 && v2 != 3) continue;  // need V1 <= V2
      if (v1 == 3 && v2 != 3) continue;
      Filtration f{v1, v2};
      if (!betaAllowed(q, f) || !gammaAllowed(q, f)) continue;
      long long lhs = subDegree(q, v1) + subDegree(q, v2);
      if (lhs > d) ss = false;
      bool proper = (v1 != 0 && v1 != 3) || (v2 != 0 && v2 != 3);
      if (proper && lhs == d) strict = true;
    }
  }
  out.filtrationSemistable = ss;
  if (q.betaZero()) {
    out.viaQuadraticPairs = true;
    DecomposablePair pair = q.toQuadraticPair();
    out.verdict = alphaVerdict(pair, Rational(0));
    bool pairSS = out.verdict.status == VerdictStatus::Stable ||
                  out.verdict.status == VerdictStatus::StrictlySemistable;
    // EmptyRegime (d > dU) has no filtration counterpart: gamma itself
    // cannot exist; the comparison is between the condition systems.
    if (out.verdict.status != VerdictStatus::EmptyRegime && pairSS != ss)
      throw Error(ErrorCode::InvalidModel,
                  "filtration semistability disagrees with the quadratic-pair verdict");
  } else {
    out.verdict.status = ss ? (strict ? VerdictStatus::StrictlySemistable
                                      : VerdictStatus::Stable)
                            : VerdictStatus::Unstable;
    out.verdict.exactness = Exactness::CandidateRelative;
  }
  return out;
}

ComponentVerdict componentCount(int g, long long a, int w) {
  if (g < 2) throw Error(ErrorCode::InvalidModel, "component counts require g >= 2");
  if (w != 0 && w != 1) throw Error(ErrorCode::InvalidModel, "w must be 0 or 1");
  ComponentVerdict v{};
  long long bound = 2 * g - 2;
  long long absA = a < 0 ? -a : a;
  if (absA > bound) {
    v.kind = ComponentVerdict::Kind::Empty;
  } else if (absA == 0 || absA == bound) {
    v.kind = ComponentVerdict::Kind::OutOfScope;
  } else {
    v.kind = ComponentVerdict::Kind::Connected;
    v.count = 1;
  }
  return v;
}

ComponentTable componentTable(int g) {
  if (g < 2) throw Error(ErrorCode::InvalidModel, "component counts require g >= 2");
  ComponentTable t;
  long long bound = 2 * g - 2;
  for (long long a = -bound; a <= bound; ++a) {
    for (int w : {0, 1}) {
      ComponentRow row;
      row.a = a;
      row.w = w;
      row.verdict = componentCount(g, a, w);
      if (row.verdict.kind == ComponentVerdict::Kind::Connected)
        t.inRangeConnected += row.verdict.count;
      t.rows.push_back(row);
    }
  }
  return t;
}

}  // namespace quadpair
