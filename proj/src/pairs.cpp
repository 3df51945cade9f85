#include "quadpair/pairs.hpp"

#include <algorithm>
#include <sstream>

#include "quadpair/chambers.hpp"

namespace quadpair {

const char* conditionClassName(ConditionClass c) {
  switch (c) {
    case ConditionClass::A: return "A";
    case ConditionClass::B: return "B";
    case ConditionClass::C: return "C";
    case ConditionClass::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* verdictStatusName(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Stable: return "Stable";
    case VerdictStatus::StrictlySemistable: return "StrictlySemistable";
    case VerdictStatus::Unstable: return "Unstable";
    case VerdictStatus::EmptyRegime: return "EmptyRegime";
  }
  return "?";
}

PicClass DecomposablePair::entryTarget(GammaEntry e) const {
  switch (e) {
    case GammaEntry::G11: return picSub(U, picScale(2, L1));
    case GammaEntry::G12: return picSub(U, picAdd(L1, L2));
    case GammaEntry::G22: return picSub(U, picScale(2, L2));
  }
  throw Error(ErrorCode::InvalidModel, "bad entry");
}

const std::optional<Divisor>& DecomposablePair::entry(GammaEntry e) const {
  switch (e) {
    case GammaEntry::G11: return g11;
    case GammaEntry::G12: return g12;
    case GammaEntry::G22: return g22;
  }
  throw Error(ErrorCode::InvalidModel, "bad entry");
}

void DecomposablePair::validate() const {
  curve.validate();
  if (!g11 && !g12 && !g22)
    throw Error(ErrorCode::InvalidModel, "gamma must be non-zero: all entries are zero");
  for (GammaEntry e : {GammaEntry::G11, GammaEntry::G12, GammaEntry::G22}) {
    const auto& div = entry(e);
    if (!div) continue;
    div->validate();
    PicClass target = entryTarget(e);
    if (div->degree() != target.degree)
      throw Error(ErrorCode::InvalidModel, "entry divisor degree does not match target degree");
    if (classOfDivisor(*div, curve) != target)
      throw Error(ErrorCode::InvalidModel, "entry divisor class does not match target class");
  }
  if (jets) {
    for (const auto& [p, entries] : jets->perPoint) {
      curve.aj(p);  // registered
      for (const auto& [e, coeffs] : entries) {
        const auto& div = entry(e);
        long long mult = 0;
        if (div) {
          auto it = div->support.find(p);
          mult = it == div->support.end() ? 0 : it->second;
        }
        if (!div) {
          for (const auto& c : coeffs)
            if (!c.isZero())
              throw Error(ErrorCode::InvalidModel, "jet of a zero section must vanish");
        } else {
          for (size_t i = 0; i < coeffs.size() && i < static_cast<size_t>(mult); ++i)
            if (!coeffs[i].isZero())
              throw Error(ErrorCode::InvalidModel,
                          "jet does not vanish to the divisor multiplicity at " + p);
          if (coeffs.size() > static_cast<size_t>(mult) && coeffs[mult].isZero())
            throw Error(ErrorCode::InvalidModel,
                        "jet order exceeds the divisor multiplicity at " + p);
        }
      }
    }
  }
}

void ExtensionPair::validate() const {
  curve.validate();
  if (!gammaQuot)
    throw Error(ErrorCode::InvalidModel, "extension pair requires a non-zero gamma on the quotient");
  gammaQuot->validate();
  PicClass target = picSub(U, picScale(2, quot));
  if (gammaQuot->degree() != target.degree)
    throw Error(ErrorCode::InvalidModel, "gammaQuot degree does not match quot^{-2} U");
  if (classOfDivisor(*gammaQuot, curve) != target)
    throw Error(ErrorCode::InvalidModel, "gammaQuot class does not match quot^{-2} U");
}

SubbundleCandidate SubbundleCandidate::factor2() {
  SubbundleCandidate c;
  c.kind = Kind::Factor2;
  return c;
}
SubbundleCandidate SubbundleCandidate::genericGraph(int from) {
  SubbundleCandidate c;
  c.kind = Kind::Graph;
  c.graphFrom = from;
  return c;
}
SubbundleCandidate SubbundleCandidate::graph(int from, Divisor f) {
  SubbundleCandidate c;
  c.kind = Kind::Graph;
  c.graphFrom = from;
  c.graphF = std::move(f);
  return c;
}
SubbundleCandidate SubbundleCandidate::declared(long long degree, char cls) {
  SubbundleCandidate c;
  c.kind = Kind::Declared;
  c.declaredDegree = degree;
  c.declaredClass = cls;
  return c;
}

std::string SubbundleCandidate::describe() const {
  switch (kind) {
    case Kind::Factor1: return "Factor1";
    case Kind::Factor2: return "Factor2";
    case Kind::Graph:
      return std::string("Graph(") + std::to_string(graphFrom) +
             (graphF ? ",explicit)" : ",generic)");
    case Kind::Declared:
      return std::string("Declared(deg ") + std::to_string(declaredDegree) + "," +
             declaredClass + ")";
  }
  return "?";
}

namespace {

// One summand of a section-valued sum: an explicit divisor plus a power of
// the generic graph section. Power distinguishes summands of the same sum.
struct Term {
  Divisor base;
  int genericPower = 0;
  bool operator==(const Term& o) const {
    return genericPower == o.genericPower && base.support == o.base.support;
  }
};

// Tri-state value of a sum of non-zero sections in the divisor model:
// one summand is non-zero; two with distinct divisors cannot cancel for any
// scalars; beyond that the model cannot decide. A sum involving the generic
// section is non-zero for generic choices whenever it has a summand.
Tri triSum(const std::vector<Term>& terms, bool genericF) {
  if (terms.empty()) return Tri::Zero;
  if (genericF) return Tri::Nonzero;
  if (terms.size() == 1) return Tri::Nonzero;
  if (terms.size() == 2) return terms[0] == terms[1] ? Tri::Unknown : Tri::Nonzero;
  return Tri::Unknown;
}

struct GraphEntryView {
  const std::optional<Divisor>* source;  // g_ii
  const std::optional<Divisor>* mixed;   // g_ij
  const std::optional<Divisor>* target;  // g_jj
  long long sourceDeg;
  long long targetDeg;
};

GraphEntryView graphView(const DecomposablePair& pair, int from) {
  if (from == 1) return {&pair.g11, &pair.g12, &pair.g22, pair.L1.degree, pair.L2.degree};
  if (from == 2) return {&pair.g22, &pair.g12, &pair.g11, pair.L2.degree, pair.L1.degree};
  throw Error(ErrorCode::InvalidCandidate, "graph direction must be 1 or 2");
}

void pushTerm(std::vector<Term>& terms, const std::optional<Divisor>& section, int power,
              const std::optional<Divisor>& f) {
  if (!section) return;
  Term t;
  t.base = *section;
  if (f) {
    for (int i = 0; i < power; ++i) t.base = divisorAdd(t.base, *f);
    t.genericPower = 0;
  } else {
    t.genericPower = power;
  }
  terms.push_back(std::move(t));
}

}  // namespace

ConditionReport conditionClass(const DecomposablePair& pair, const SubbundleCandidate& cand) {
  ConditionReport r;
  switch (cand.kind) {
    case SubbundleCandidate::Kind::Factor1:
    case SubbundleCandidate::Kind::Factor2: {
      bool one = cand.kind == SubbundleCandidate::Kind::Factor1;
      const auto& diag = one ? pair.g11 : pair.g22;
      r.degree = one ? pair.L1.degree : pair.L2.degree;
      if (!diag && !pair.g12) r.cls = ConditionClass::A;
      else if (!diag) r.cls = ConditionClass::B;
      else r.cls = ConditionClass::C;
      return r;
    }
    case SubbundleCandidate::Kind::Graph: {
      GraphEntryView v = graphView(pair, cand.graphFrom);
      r.degree = v.sourceDeg;
      bool genericF = !cand.graphF.has_value();
      if (cand.graphF) {
        cand.graphF->validate();
        PicClass fTarget = (cand.graphFrom == 1) ? picSub(pair.L2, pair.L1)
                                                 : picSub(pair.L1, pair.L2);
        if (cand.graphF->degree() != fTarget.degree ||
            classOfDivisor(*cand.graphF, pair.curve) != fTarget)
          throw Error(ErrorCode::InvalidCandidate,
                      "graph section class does not match Hom(L_from, L_to)");
      } else if (v.targetDeg <= v.sourceDeg) {
        throw Error(ErrorCode::InvalidCandidate,
                    "generic graph requires deg(L_to) > deg(L_from)");
      }
      // Restricted form q = g_ii + 2 f g_ij + f^2 g_jj; image components
      // c1 = g_ii + f g_ij and c2 = g_ij + f g_jj.
      std::vector<Term> q, c1, c2;
      pushTerm(q, *v.source, 0, cand.graphF);
      pushTerm(q, *v.mixed, 1, cand.graphF);
      pushTerm(q, *v.target, 2, cand.graphF);
      pushTerm(c1, *v.source, 0, cand.graphF);
      pushTerm(c1, *v.mixed, 1, cand.graphF);
      pushTerm(c2, *v.mixed, 0, cand.graphF);
      pushTerm(c2, *v.target, 1, cand.graphF);
      Tri tq = triSum(q, genericF);
      Tri t1 = triSum(c1, genericF);
      Tri t2 = triSum(c2, genericF);
      if (tq == Tri::Nonzero) {
        r.cls = ConditionClass::C;
      } else if (tq == Tri::Zero) {
        if (t1 == Tri::Zero && t2 == Tri::Zero) r.cls = ConditionClass::A;
        else if (t1 == Tri::Nonzero || t2 == Tri::Nonzero) r.cls = ConditionClass::B;
        else {
          r.cls = ConditionClass::Indeterminate;
          r.mayBeA = r.mayBeB = true;
        }
      } else {
        r.cls = ConditionClass::Indeterminate;
        r.mayBeB = r.mayBeC = true;
        r.mayBeA = t1 != Tri::Nonzero && t2 != Tri::Nonzero;
      }
      return r;
    }
    case SubbundleCandidate::Kind::Declared: {
      r.degree = cand.declaredDegree;
      switch (cand.declaredClass) {
        case 'A': r.cls = ConditionClass::A; break;
        case 'B': r.cls = ConditionClass::B; break;
        case 'C': r.cls = ConditionClass::C; break;
        default: throw Error(ErrorCode::InvalidCandidate, "declared class must be A, B or C");
      }
      return r;
    }
  }
  throw Error(ErrorCode::InvalidCandidate, "unknown candidate kind");
}

namespace {

std::vector<SubbundleCandidate> autoCandidates(const DecomposablePair& pair) {
  std::vector<SubbundleCandidate> cs;
  cs.push_back(SubbundleCandidate::factor1());
  cs.push_back(SubbundleCandidate::factor2());
  long long e12 = pair.L2.degree - pair.L1.degree;
  if (e12 > 0 && h0(e12, pair.curve.genus) > 0)
    cs.push_back(SubbundleCandidate::genericGraph(1));
  if (-e12 > 0 && h0(-e12, pair.curve.genus) > 0)
    cs.push_back(SubbundleCandidate::genericGraph(2));
  return cs;
}

Rational classBound(ConditionClass c, const Rational& alpha, long long d) {
  switch (c) {
    case ConditionClass::A: return alpha;
    case ConditionClass::B: return Rational(d, 2);
    case ConditionClass::C: return Rational(d) - alpha;
    default: throw Error(ErrorCode::InvalidCandidate, "no bound for indeterminate class");
  }
}

bool canonicalForm(const DecomposablePair& pair) {
  return !pair.g12 || (!pair.g11 && !pair.g22);
}

// gamma = diag(0, gamma') / anti-diag / diag(gamma', *) patterns of the
// polystable split forms, checked per equality witness.
bool polystablePattern(const DecomposablePair& pair, const Witness& w) {
  bool f1 = w.candidate.kind == SubbundleCandidate::Kind::Factor1;
  bool f2 = w.candidate.kind == SubbundleCandidate::Kind::Factor2;
  if (!f1 && !f2) return false;
  const auto& other = f1 ? pair.g22 : pair.g11;
  switch (w.cls) {
    case ConditionClass::A: return other.has_value();  // diag(0, gamma'), gamma' != 0
    case ConditionClass::B: return !other.has_value();  // anti-diagonal
    case ConditionClass::C: return !pair.g12.has_value();  // block-diagonal split
    default: return false;
  }
}

StabilityVerdict conditionVerdict(const DecomposablePair& pair, const Rational& alpha,
                                  const std::vector<SubbundleCandidate>& extra) {
  StabilityVerdict v;
  long long d = pair.d();
  v.exactness = (canonicalForm(pair) && pair.L1 != pair.L2) ? Exactness::Exact
                                                            : Exactness::CandidateRelative;
  std::vector<SubbundleCandidate> cands = autoCandidates(pair);
  for (const auto& c : extra) {
    cands.push_back(c);
    if (c.kind == SubbundleCandidate::Kind::Declared) v.exactness = Exactness::CandidateRelative;
  }
  std::ostringstream notes;
  for (const auto& c : cands) {
    ConditionReport rep = conditionClass(pair, c);
    Rational deg(rep.degree);
    if (rep.cls != ConditionClass::Indeterminate) {
      Rational bound = classBound(rep.cls, alpha, d);
      if (deg > bound) {
        if (v.status != VerdictStatus::Unstable) {
          v.status = VerdictStatus::Unstable;
          v.witness = Witness{c, rep.cls, rep.degree};
        }
      } else if (deg == bound) {
        v.equalities.push_back(Witness{c, rep.cls, rep.degree});
        if (rep.cls == ConditionClass::A) v.typeA = true;
        if (rep.cls == ConditionClass::B) v.typeB = true;
        if (rep.cls == ConditionClass::C) v.typeC = true;
      }
    } else {
      v.exactness = Exactness::CandidateRelative;
      std::vector<Rational> bounds;
      if (rep.mayBeA) bounds.push_back(classBound(ConditionClass::A, alpha, d));
      if (rep.mayBeB) bounds.push_back(classBound(ConditionClass::B, alpha, d));
      if (rep.mayBeC) bounds.push_back(classBound(ConditionClass::C, alpha, d));
      Rational best = *std::max_element(bounds.begin(), bounds.end());
      Rational worst = *std::min_element(bounds.begin(), bounds.end());
      if (deg > best) {
        if (v.status != VerdictStatus::Unstable) {
          v.status = VerdictStatus::Unstable;
          v.witness = Witness{c, ConditionClass::Indeterminate, rep.degree};
        }
      } else if (deg >= worst) {
        notes << c.describe() << " has undecided condition class near its bound; ";
      }
    }
  }
  if (v.status != VerdictStatus::Unstable)
    v.status = v.equalities.empty() ? VerdictStatus::Stable : VerdictStatus::StrictlySemistable;
  switch (v.status) {
    case VerdictStatus::Stable: v.polystable = true; break;
    case VerdictStatus::StrictlySemistable: {
      v.polystable = true;
      for (const auto& w : v.equalities)
        if (!polystablePattern(pair, w)) {
          v.polystable = false;
          notes << "no canonical split form for " << w.candidate.describe()
                << "; pair is S-equivalent to its polystable form; ";
          break;
        }
      break;
    }
    default: v.polystable = false;
  }
  v.note = notes.str();
  return v;
}

}  // namespace

StabilityVerdict alphaVerdict(const DecomposablePair& pair, const Rational& alpha,
                              const std::vector<SubbundleCandidate>& extra) {
  pair.validate();
  long long d = pair.d(), dU = pair.dU();
  if (d > dU || alpha > Rational(d, 2)) {
    StabilityVerdict v;
    v.status = VerdictStatus::EmptyRegime;
    v.note = d > dU ? "d > dU: the moduli space is empty for every alpha"
                    : "alpha > d/2: the moduli space is empty";
    return v;
  }
  return conditionVerdict(pair, alpha, extra);
}

std::vector<DestabViolation> destabAudit(const DecomposablePair& pair, const Rational& alpha,
                                         const std::vector<SubbundleCandidate>& extra) {
  pair.validate();
  long long d = pair.d();
  if (!(alpha < Rational(d, 2)))
    throw Error(ErrorCode::OutOfRange, "destabilizer audit requires alpha < d/2");
  std::vector<SubbundleCandidate> cands = autoCandidates(pair);
  cands.insert(cands.end(), extra.begin(), extra.end());
  long long nA = 0, nB = 0, nC = 0;
  for (const auto& c : cands) {
    ConditionReport rep = conditionClass(pair, c);
    if (rep.cls == ConditionClass::Indeterminate) continue;
    Rational deg(rep.degree);
    switch (rep.cls) {
      case ConditionClass::A: if (deg >= alpha) ++nA; break;
      case ConditionClass::B: if (deg >= Rational(d, 2)) ++nB; break;
      case ConditionClass::C: if (deg >= Rational(d) - alpha) ++nC; break;
      default: break;
    }
  }
  std::vector<DestabViolation> out;
  if (nA > 1) out.push_back({"more than one type-A destabilizer (" + std::to_string(nA) + ")"});
  if (nC > 1) out.push_back({"more than one type-C destabilizer (" + std::to_string(nC) + ")"});
  if (nB > 2) out.push_back({"more than two type-B destabilizers (" + std::to_string(nB) + ")"});
  if (nA > 0 && nB > 0) out.push_back({"type A and type B destabilizers coexist"});
  if (nC > 0 && nB > 0) out.push_back({"type C and type B destabilizers coexist"});
  return out;
}

std::pair<bool, bool> bundleSemistabilityBridge(const DecomposablePair& pair) {
  pair.validate();
  long long d = pair.d();
  StabilityVerdict v = conditionVerdict(pair, Rational(d, 2), {});
  bool pairSS =
      v.status == VerdictStatus::Stable || v.status == VerdictStatus::StrictlySemistable;
  bool bundleSS = pair.L1.degree == pair.L2.degree;
  return {pairSS, bundleSS};
}

namespace {

bool isSemistable(const StabilityVerdict& v) {
  return v.status == VerdictStatus::Stable || v.status == VerdictStatus::StrictlySemistable;
}

struct WallNeighbourhood {
  Rational plus, minus;
};

WallNeighbourhood wallNeighbourhood(long long d, long long dU, const Rational& alphaK) {
  auto cs = criticalValues(d, dU);
  auto it = std::find(cs.begin(), cs.end(), alphaK);
  if (it == cs.end())
    throw Error(ErrorCode::NotCritical, "alpha_k = " + alphaK.str() + " is not a critical value");
  WallNeighbourhood n;
  auto next = it + 1;
  if (next == cs.end())
    throw Error(ErrorCode::NotCritical, "no chamber above the max wall");
  n.plus = (alphaK + *next) / Rational(2);
  n.minus = it == cs.begin() ? alphaK - Rational(1) : (*(it - 1) + alphaK) / Rational(2);
  return n;
}

}  // namespace

WallSide wallSide(const DecomposablePair& pair, const Rational& alphaK) {
  pair.validate();
  long long d = pair.d(), dU = pair.dU();
  if (d >= dU) throw Error(ErrorCode::NotCritical, "walls are defined only for d < dU");
  if (alphaK == Rational(d, 2)) return {WallSide::Kind::MaxWall, WallSide::Sub::None};
  WallNeighbourhood n = wallNeighbourhood(d, dU, alphaK);
  StabilityVerdict atWall = alphaVerdict(pair, alphaK);
  if (!isSemistable(atWall)) return {WallSide::Kind::NotSemistableAtWall, WallSide::Sub::None};
  bool ssPlus = isSemistable(alphaVerdict(pair, n.plus));
  bool ssMinus = isSemistable(alphaVerdict(pair, n.minus));
  if (ssPlus == ssMinus) return {WallSide::Kind::NotInFlip, WallSide::Sub::None};
  if (ssPlus) return {WallSide::Kind::SPlus, WallSide::Sub::None};
  bool theta0 = thetaVanishes(pair, alphaK);
  return {WallSide::Kind::SMinus, theta0 ? WallSide::Sub::S0 : WallSide::Sub::S1};
}

WallSide wallSide(const ExtensionPair& pair, const Rational& alphaK) {
  pair.validate();
  long long d = pair.d(), dU = pair.dU();
  if (d >= dU) throw Error(ErrorCode::NotCritical, "walls are defined only for d < dU");
  if (alphaK == Rational(d, 2)) return {WallSide::Kind::MaxWall, WallSide::Sub::None};
  WallNeighbourhood n = wallNeighbourhood(d, dU, alphaK);
  StabilityVerdict atWall = extensionAlphaVerdict(pair, alphaK);
  if (!isSemistable(atWall)) return {WallSide::Kind::NotSemistableAtWall, WallSide::Sub::None};
  bool ssPlus = isSemistable(extensionAlphaVerdict(pair, n.plus));
  bool ssMinus = isSemistable(extensionAlphaVerdict(pair, n.minus));
  if (ssPlus == ssMinus) return {WallSide::Kind::NotInFlip, WallSide::Sub::None};
  if (ssPlus) return {WallSide::Kind::SPlus, WallSide::Sub::None};
  // gamma pulled back from the quotient has theta = 0 only for the trivial
  // extension; a non-trivial extension pair on the minus side is S1.
  return {WallSide::Kind::SMinus,
          pair.extNontrivial ? WallSide::Sub::S1 : WallSide::Sub::S0};
}

bool thetaVanishes(const DecomposablePair& pair, const Rational& alphaK) {
  pair.validate();
  long long d = pair.d();
  Rational wantDeg = Rational(d) - alphaK;
  const std::optional<Divisor>* witnessDiag = nullptr;
  for (int i = 1; i <= 2; ++i) {
    auto cand = i == 1 ? SubbundleCandidate::factor1() : SubbundleCandidate::factor2();
    ConditionReport rep = conditionClass(pair, cand);
    if (rep.cls == ConditionClass::C && Rational(rep.degree) == wantDeg) {
      witnessDiag = i == 1 ? &pair.g11 : &pair.g22;
      break;
    }
  }
  if (!witnessDiag)
    throw Error(ErrorCode::MissingWitness,
                "no type-C factor witness of degree d - alpha_k = " + wantDeg.str());
  const Divisor& D = **witnessDiag;
  bool vanish = !pair.g12 || divisorDominates(*pair.g12, D);
  // Cross-check against attached jet data when available for all of supp(D).
  if (pair.jets) {
    LocalizedPair lp;
    lp.D = D;
    bool complete = true;
    for (const auto& entry : D.support) {
      const PointId& pt = entry.first;
      size_t mult = static_cast<size_t>(entry.second);
      auto it = pair.jets->perPoint.find(pt);
      if (it == pair.jets->perPoint.end()) { complete = false; break; }
      auto need = [&](GammaEntry e, std::map<PointId, std::vector<Scalar>>& dst) {
        auto jt = it->second.find(e);
        if (jt == it->second.end() || jt->second.size() < mult) return false;
        dst[pt] = jt->second;
        return true;
      };
      bool sourceIsG11 = witnessDiag == &pair.g11;
      if (!need(sourceIsG11 ? GammaEntry::G11 : GammaEntry::G22, lp.g11) ||
          !need(GammaEntry::G12, lp.g12)) {
        complete = false;
        break;
      }
    }
    if (complete) {
      JetOnDivisor theta = thetaGamma(lp);
      if (theta.isZero() != vanish)
        throw Error(ErrorCode::InvalidModel,
                    "jet data disagrees with the divisor-level theta vanishing");
    }
  }
  return vanish;
}

StabilityVerdict extensionAlphaVerdict(const ExtensionPair& ep, const Rational& alpha) {
  ep.validate();
  if (!ep.extNontrivial)
    throw Error(ErrorCode::DegenerateExtension,
                "trivial extension: model the pair as a DecomposablePair instead");
  long long d = ep.d(), dU = ep.dU();
  StabilityVerdict v;
  if (d > dU || alpha > Rational(d, 2)) {
    v.status = VerdictStatus::EmptyRegime;
    return v;
  }
  Rational a0(ep.sub.degree);
  if (alpha < a0) {
    v.status = VerdictStatus::Unstable;
    v.witness = Witness{SubbundleCandidate::declared(ep.sub.degree, 'A'), ConditionClass::A,
                        ep.sub.degree};
  } else if (alpha == a0) {
    v.status = VerdictStatus::StrictlySemistable;
    v.typeA = true;
    v.equalities.push_back(Witness{SubbundleCandidate::declared(ep.sub.degree, 'A'),
                                   ConditionClass::A, ep.sub.degree});
    v.polystable = false;
    v.note = "non-trivial extension: S-equivalent to the split polystable form";
  } else {
    v.status = VerdictStatus::Stable;
    v.polystable = true;
  }
  return v;
}

ExtensionVerdict extensionPairVerdict(const ExtensionPair& ep, const Rational& alpha) {
  ExtensionVerdict out;
  out.verdict = extensionAlphaVerdict(ep, alpha);
  long long d = ep.d();
  int g = ep.curve.genus;
  out.ext1Dim = d - 2 * ep.sub.degree + g - 1;
  out.splusFibreDim = d - 2 * ep.sub.degree + g - 2;
  return out;
}

DetInfo detGamma(const DecomposablePair& pair) {
  DetInfo info;
  bool d1 = pair.g11.has_value(), d2 = pair.g22.has_value(), off = pair.g12.has_value();
  if (!off) {
    if (d1 && d2) {
      info.state = Tri::Nonzero;
      info.divisor = divisorAdd(*pair.g11, *pair.g22);
    } else {
      info.state = Tri::Zero;  // rank-1 gamma
    }
    return info;
  }
  if (!d1 || !d2) {
    info.state = Tri::Nonzero;
    info.divisor = divisorScale(2, *pair.g12);
    return info;
  }
  Divisor diag = divisorAdd(*pair.g11, *pair.g22);
  Divisor offSq = divisorScale(2, *pair.g12);
  info.state = diag.support == offSq.support ? Tri::Unknown : Tri::Nonzero;
  return info;
}

}  // namespace quadpair
