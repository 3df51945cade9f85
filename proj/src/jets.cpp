#include "quadpair/jets.hpp"

#include <algorithm>

namespace quadpair {

bool Jet::isZero() const {
  for (const auto& c : coeffs)
    if (!c.isZero()) return false;
  return true;
}

size_t Jet::order() const {
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].isZero()) return i;
  return coeffs.size();
}

static void checkSameLength(const Jet& a, const Jet& b) {
  if (a.length() != b.length())
    throw Error(ErrorCode::InvalidModel, "jet arithmetic requires equal lengths");
}

Jet jetAdd(const Jet& a, const Jet& b) {
  checkSameLength(a, b);
  Jet r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
  return r;
}

Jet jetNeg(const Jet& a) {
  Jet r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

Jet jetMul(const Jet& a, const Jet& b) {
  checkSameLength(a, b);
  Jet r = Jet::zeros(a.length());
  for (size_t i = 0; i < a.length(); ++i) {
    if (a.coeffs[i].isZero()) continue;
    for (size_t j = 0; i + j < b.length(); ++j)
      r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

Jet jetScale(const Scalar& s, const Jet& a) {
  Jet r = a;
  for (auto& c : r.coeffs) c = s * c;
  return r;
}

Jet jetTruncate(const Jet& a, size_t n) {
  Jet r = a;
  r.coeffs.resize(n);
  return r;
}

bool JetOnDivisor::isZero() const {
  for (const auto& [p, j] : perPoint)
    if (!j.isZero()) return false;
  return true;
}

void JetOnDivisor::validate() const {
  divisor.validate();
  if (perPoint.size() != divisor.support.size())
    throw Error(ErrorCode::InvalidModel, "jet data must cover exactly the divisor support");
  for (const auto& [p, m] : divisor.support) {
    auto it = perPoint.find(p);
    if (it == perPoint.end())
      throw Error(ErrorCode::InvalidModel, "missing jet at point " + p);
    if (it->second.length() != static_cast<size_t>(m))
      throw Error(ErrorCode::InvalidModel, "jet length at " + p + " must equal multiplicity");
  }
}

JetOnDivisor jetOnDivisorNeg(const JetOnDivisor& a) {
  JetOnDivisor r = a;
  for (auto& [p, j] : r.perPoint) j = jetNeg(j);
  return r;
}

bool jetOnDivisorEqual(const JetOnDivisor& a, const JetOnDivisor& b) {
  return a.divisor.support == b.divisor.support && a.perPoint == b.perPoint;
}

JetOnDivisor restrict(const std::map<PointId, std::vector<Scalar>>& series, const Divisor& D) {
  D.validate();
  JetOnDivisor out;
  out.divisor = D;
  for (const auto& [p, m] : D.support) {
    auto it = series.find(p);
    if (it == series.end() || it->second.size() < static_cast<size_t>(m))
      throw Error(ErrorCode::InsufficientCoefficients,
                  "need at least " + std::to_string(m) + " coefficients at " + p);
    Jet j;
    j.coeffs.assign(it->second.begin(), it->second.begin() + m);
    out.perPoint[p] = std::move(j);
  }
  return out;
}

JetSqrtResult jetSqrt(const Jet& c) {
  JetSqrtResult res;
  size_t n = c.length();
  if (n == 0) throw Error(ErrorCode::InvalidModel, "jet of length zero");
  size_t ord = c.order();
  if (ord == n) {
    // q^2 = 0 mod z^n: canonical representative is the zero jet.
    res.roots.push_back(Jet::zeros(n));
    return res;
  }
  if (ord % 2 != 0) return res;  // a^2 has even order
  size_t m = ord / 2;
  size_t len = n - ord;  // unit part u with c = z^{2m} u
  Jet u;
  u.coeffs.assign(c.coeffs.begin() + static_cast<std::ptrdiff_t>(ord), c.coeffs.end());
  auto s0 = u.coeffs[0].sqrtInField();
  if (!s0) {
    res.fieldExtensionNeeded = true;
    return res;
  }
  // Hensel lift: v_j = (u_j - sum_{0<i<j} v_i v_{j-i}) / (2 v_0).
  std::vector<Scalar> v(len);
  v[0] = *s0;
  Scalar twoV0 = Scalar(2) * v[0];
  for (size_t j = 1; j < len; ++j) {
    Scalar acc = u.coeffs[j];
    for (size_t i = 1; i < j; ++i) acc = acc - v[i] * v[j - i];
    v[j] = acc / twoV0;
  }
  Jet q = Jet::zeros(n);
  for (size_t i = 0; i < len && m + i < n; ++i) q.coeffs[m + i] = v[i];
  Jet check = jetMul(q, q);
  if (check != c) throw Error(ErrorCode::InvalidModel, "internal: sqrt verification failed");
  res.roots.push_back(q);
  res.roots.push_back(jetNeg(q));
  return res;
}

SolveQResult solveQ(const JetOnDivisor& etaD) {
  etaD.validate();
  SolveQResult res;
  std::vector<PointId> pts;
  std::vector<std::vector<Jet>> perPointRoots;
  for (const auto& [p, j] : etaD.perPoint) {
    auto r = jetSqrt(jetNeg(j));
    res.fieldExtensionNeeded = res.fieldExtensionNeeded || r.fieldExtensionNeeded;
    if (r.roots.empty()) return res;  // no solutions at this point
    pts.push_back(p);
    perPointRoots.push_back(std::move(r.roots));
  }
  // Cartesian product over points.
  std::vector<size_t> idx(pts.size(), 0);
  while (true) {
    JetOnDivisor sol;
    sol.divisor = etaD.divisor;
    for (size_t i = 0; i < pts.size(); ++i) sol.perPoint[pts[i]] = perPointRoots[i][idx[i]];
    res.solutions.push_back(std::move(sol));
    size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < perPointRoots[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
    if (pts.empty()) break;
  }
  if (pts.empty()) res.solutions.resize(1);  // empty divisor: the unique empty solution
  return res;
}

static JetOnDivisor restrictEntry(const std::map<PointId, std::vector<Scalar>>& entry,
                                  const Divisor& D) {
  return restrict(entry, D);
}

JetOnDivisor thetaGamma(const LocalizedPair& lp) {
  JetOnDivisor g11 = restrictEntry(lp.g11, lp.D);
  if (!g11.isZero())
    throw Error(ErrorCode::DivisorMismatch,
                "g11 must vanish to full length along D = div(gamma')");
  return restrictEntry(lp.g12, lp.D);
}

bool detIdentityCheck(const LocalizedPair& lp) {
  JetOnDivisor g11 = restrictEntry(lp.g11, lp.D);
  JetOnDivisor g12 = restrictEntry(lp.g12, lp.D);
  JetOnDivisor g22 = restrictEntry(lp.g22, lp.D);
  if (!g11.isZero())
    throw Error(ErrorCode::DivisorMismatch,
                "g11 must vanish to full length along D = div(gamma')");
  for (const auto& [p, m] : lp.D.support) {
    Jet det = jetAdd(jetMul(g11.perPoint[p], g22.perPoint[p]),
                     jetNeg(jetMul(g12.perPoint[p], g12.perPoint[p])));
    Jet rhs = jetNeg(jetMul(g12.perPoint[p], g12.perPoint[p]));
    if (det != rhs) return false;
  }
  return true;
}

bool reconstructionBlockRegular(const JetOnDivisor& q, const JetOnDivisor& etaD) {
  q.validate();
  etaD.validate();
  if (q.divisor != etaD.divisor)
    throw Error(ErrorCode::DivisorMismatch, "q and eta must live over the same divisor");
  for (const auto& [p, qp] : q.perPoint) {
    if (!jetAdd(jetMul(qp, qp), etaD.perPoint.at(p)).isZero()) return false;
  }
  return true;
}

std::pair<long long, long long> dimC(int g, long long d, long long dU) {
  if (dU - d <= g - 1)
    throw Error(ErrorCode::HypothesisFails, "dim C formula requires dU - d > g - 1");
  return {2 * (dU - d) + 1 - g, 2 * (dU - d) - g};
}

}  // namespace quadpair
