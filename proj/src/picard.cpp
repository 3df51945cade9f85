#include "quadpair/picard.hpp"

#include <algorithm>

namespace quadpair {

const char* errorCodeName(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::DegreeParity: return "DegreeParity";
    case ErrorCode::InvalidOverride: return "InvalidOverride";
    case ErrorCode::CriticalsUndefined: return "CriticalsUndefined";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
    case ErrorCode::SpecialDEqualsDU: return "SpecialDEqualsDU";
    case ErrorCode::DegreeTooBig: return "DegreeTooBig";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::DivisorMismatch: return "DivisorMismatch";
    case ErrorCode::MissingWitness: return "MissingWitness";
    case ErrorCode::InvalidCandidate: return "InvalidCandidate";
    case ErrorCode::DegenerateExtension: return "DegenerateExtension";
    case ErrorCode::DegenerateGamma: return "DegenerateGamma";
    case ErrorCode::NotInPX: return "NotInPX";
    case ErrorCode::WrongChamber: return "WrongChamber";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

bool operator<(const PicClass& a, const PicClass& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (size_t i = 0; i < std::min(a.jac.size(), b.jac.size()); ++i) {
    if (a.jac[i] != b.jac[i]) return a.jac[i] < b.jac[i];
  }
  return a.jac.size() < b.jac.size();
}

PicClass picZero(int genus) {
  PicClass c;
  c.jac.assign(2 * static_cast<size_t>(genus), Rational(0));
  return c;
}

static void checkSameSize(const PicClass& a, const PicClass& b) {
  if (a.jac.size() != b.jac.size())
    throw Error(ErrorCode::InvalidModel, "PicClass coordinate lengths differ");
}

PicClass picAdd(const PicClass& a, const PicClass& b) {
  checkSameSize(a, b);
  PicClass r;
  r.degree = a.degree + b.degree;
  r.jac.reserve(a.jac.size());
  for (size_t i = 0; i < a.jac.size(); ++i) r.jac.push_back((a.jac[i] + b.jac[i]).mod1());
  return r;
}

PicClass picNeg(const PicClass& a) {
  PicClass r;
  r.degree = -a.degree;
  r.jac.reserve(a.jac.size());
  for (const auto& x : a.jac) r.jac.push_back((-x).mod1());
  return r;
}

PicClass picSub(const PicClass& a, const PicClass& b) { return picAdd(a, picNeg(b)); }

PicClass picScale(long long k, const PicClass& a) {
  PicClass r;
  r.degree = k * a.degree;
  r.jac.reserve(a.jac.size());
  for (const auto& x : a.jac) r.jac.push_back((Rational(k) * x).mod1());
  return r;
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& [p, m] : support) d += m;
  return d;
}

bool Divisor::isEffective() const {
  for (const auto& [p, m] : support)
    if (m <= 0) return false;
  return true;
}

void Divisor::validate() const {
  if (effective && !isEffective())
    throw Error(ErrorCode::InvalidModel, "effective divisor with non-positive multiplicity");
}

Divisor divisorAdd(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  r.effective = a.effective && b.effective;
  for (const auto& [p, m] : b.support) {
    r.support[p] += m;
    if (r.support[p] == 0) r.support.erase(p);
  }
  return r;
}

Divisor divisorScale(long long k, const Divisor& a) {
  Divisor r;
  r.effective = a.effective && k > 0;
  if (k == 0) return r;
  for (const auto& [p, m] : a.support) r.support[p] = k * m;
  return r;
}

bool divisorDominates(const Divisor& a, const Divisor& b) {
  for (const auto& [p, m] : b.support) {
    auto it = a.support.find(p);
    long long am = it == a.support.end() ? 0 : it->second;
    if (am < m) return false;
  }
  return true;
}

bool divisorHalve(const Divisor& d, Divisor& half) {
  half = Divisor{};
  for (const auto& [p, m] : d.support) {
    if (m % 2 != 0) return false;
    half.support[p] = m / 2;
  }
  return true;
}

CurveModel::CurveModel(int g) : genus(g) {
  if (g < 1) throw Error(ErrorCode::InvalidModel, "genus must be >= 1");
  canonicalClassJac.assign(2 * static_cast<size_t>(g), Rational(0));
}

void CurveModel::registerPoint(const PointId& id, AJVector aj) {
  if (aj.size() != 2 * static_cast<size_t>(genus))
    throw Error(ErrorCode::InvalidModel, "Abel-Jacobi vector length must be 2g");
  for (auto& x : aj) x = x.mod1();
  points[id] = std::move(aj);
}

const AJVector& CurveModel::aj(const PointId& id) const {
  auto it = points.find(id);
  if (it == points.end()) throw Error(ErrorCode::UnknownPoint, "unregistered point: " + id);
  return it->second;
}

PicClass CurveModel::canonicalClass() const {
  PicClass c;
  c.degree = 2 * genus - 2;
  c.jac = canonicalClassJac;
  return c;
}

void CurveModel::validate() const {
  if (genus < 1) throw Error(ErrorCode::InvalidModel, "genus must be >= 1");
  if (canonicalClassJac.size() != 2 * static_cast<size_t>(genus))
    throw Error(ErrorCode::InvalidModel, "canonical class coordinate length must be 2g");
  for (const auto& [id, aj] : points) {
    if (aj.size() != 2 * static_cast<size_t>(genus))
      throw Error(ErrorCode::InvalidModel, "point " + id + " has wrong coordinate length");
    for (const auto& x : aj)
      if (x != x.mod1())
        throw Error(ErrorCode::InvalidModel, "point " + id + " coordinates not reduced mod 1");
  }
}

SectionModel SectionModel::zero(PicClass t) {
  SectionModel s;
  s.target = std::move(t);
  return s;
}

SectionModel SectionModel::fromDivisor(Divisor d, PicClass target, const CurveModel& curve) {
  d.validate();
  if (classOfDivisor(d, curve) != target)
    throw Error(ErrorCode::InvalidModel, "section divisor class does not match target class");
  SectionModel s;
  s.divisor = std::move(d);
  s.target = std::move(target);
  return s;
}

PicClass classOfDivisor(const Divisor& d, const CurveModel& curve) {
  PicClass c = picZero(curve.genus);
  for (const auto& [p, m] : d.support) {
    const AJVector& v = curve.aj(p);
    c.degree += m;
    for (size_t i = 0; i < v.size(); ++i) c.jac[i] = (c.jac[i] + Rational(m) * v[i]).mod1();
  }
  return c;
}

std::vector<PicClass> squareRoots(const PicClass& c, const CurveModel& curve) {
  std::vector<PicClass> roots;
  if (c.degree % 2 != 0) return roots;
  size_t n = 2 * static_cast<size_t>(curve.genus);
  if (c.jac.size() != n)
    throw Error(ErrorCode::InvalidModel, "class coordinate length does not match curve genus");
  PicClass base;
  base.degree = c.degree / 2;
  base.jac.reserve(n);
  for (const auto& x : c.jac) base.jac.push_back((x / Rational(2)).mod1());
  Rational half(1, 2);
  roots.reserve(1ULL << n);
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    PicClass r = base;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) r.jac[i] = (r.jac[i] + half).mod1();
    roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

long long h0(long long e, int g, std::optional<long long> specialOverride) {
  if (g < 1) throw Error(ErrorCode::InvalidModel, "genus must be >= 1");
  if (e < 0) {
    if (specialOverride && *specialOverride != 0)
      throw Error(ErrorCode::InvalidOverride, "negative degree forces h0 = 0");
    return 0;
  }
  if (e > 2 * g - 2) {
    long long exact = e - g + 1;
    if (specialOverride && *specialOverride != exact)
      throw Error(ErrorCode::InvalidOverride, "degree > 2g-2 forces h0 = e-g+1");
    return exact;
  }
  long long generic = std::max<long long>(0, e - g + 1);
  if (specialOverride) {
    if (*specialOverride < generic)
      throw Error(ErrorCode::InvalidOverride, "override below the Riemann-Roch bound");
    return *specialOverride;
  }
  return generic;
}

Rank1Verdict rank1Verdict(long long dPrime, const Rational& alpha, const PicClass& U,
                          const CurveModel& curve) {
  Rank1Verdict v{};
  v.modelOnly = curve.modelOnly();
  if (alpha > Rational(dPrime)) {
    v.kind = Rank1Verdict::Kind::Empty;
    v.reason = Rank1Verdict::EmptyReason::AlphaExceedsDegree;
    return v;
  }
  if (2 * dPrime > U.degree) {
    v.kind = Rank1Verdict::Kind::Empty;
    v.reason = Rank1Verdict::EmptyReason::NoNonzeroSection;
    return v;
  }
  if (2 * dPrime == U.degree) {
    v.kind = Rank1Verdict::Kind::SquareRootSet;
    v.count = 1LL << (2 * curve.genus);
    return v;
  }
  v.kind = Rank1Verdict::Kind::Cover;
  v.dimension = U.degree - 2 * dPrime;
  return v;
}

std::vector<PicClass> rank1Fibre(const Divisor& D, const PicClass& U, const CurveModel& curve) {
  D.validate();
  if ((U.degree - D.degree()) % 2 != 0)
    throw Error(ErrorCode::DegreeParity, "deg U - deg D must be even");
  return squareRoots(picSub(U, classOfDivisor(D, curve)), curve);
}

}  // namespace quadpair
