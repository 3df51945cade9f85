#pragma once

#include <map>
#include <vector>

#include "quadpair/picard.hpp"

namespace quadpair {

/// Truncated power series mod z^n, n = coeffs.size() >= 1.
struct Jet {
  std::vector<Scalar> coeffs;

  Jet() = default;
  explicit Jet(std::vector<Scalar> c) : coeffs(std::move(c)) {}
  static Jet zeros(size_t n) { return Jet(std::vector<Scalar>(n)); }

  size_t length() const { return coeffs.size(); }
  bool isZero() const;
  bool isUnit() const { return !coeffs.empty() && !coeffs[0].isZero(); }
  /// Order of vanishing; length() when the jet is zero.
  size_t order() const;

  friend bool operator==(const Jet& a, const Jet& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
};

Jet jetAdd(const Jet& a, const Jet& b);
Jet jetNeg(const Jet& a);
Jet jetMul(const Jet& a, const Jet& b);
Jet jetScale(const Scalar& s, const Jet& a);
Jet jetTruncate(const Jet& a, size_t n);

/// Jet data over the support of an effective divisor; one jet per point,
/// of length equal to the multiplicity.
struct JetOnDivisor {
  Divisor divisor;
  std::map<PointId, Jet> perPoint;

  bool isZero() const;
  void validate() const;  // lengths must match multiplicities
};

JetOnDivisor jetOnDivisorNeg(const JetOnDivisor& a);
bool jetOnDivisorEqual(const JetOnDivisor& a, const JetOnDivisor& b);

/// Coefficientwise truncation r(D): expansions at each point of supp(D),
/// cut to length D(p).
JetOnDivisor restrict(const std::map<PointId, std::vector<Scalar>>& series, const Divisor& D);

struct JetSqrtResult {
  std::vector<Jet> roots;        // 0, 1 (zero jet input) or 2 canonical roots
  bool fieldExtensionNeeded = false;  // scalar root exists only beyond Q(i)
};

/// All q with q^2 = c mod z^n, up to the top coefficients that q^2 cannot
/// see; canonical representatives have those set to zero.
JetSqrtResult jetSqrt(const Jet& c);

struct SolveQResult {
  std::vector<JetOnDivisor> solutions;
  bool fieldExtensionNeeded = false;
};

/// All q on supp(D) with q^2 = -etaD, as the product of per-point solution
/// sets; 2^{#supp D} solutions when every point value is a unit square.
SolveQResult solveQ(const JetOnDivisor& etaD);

/// Local data of a quadratic pair along a divisor: expansions of the three
/// entries of gamma at each point of supp(D).
struct LocalizedPair {
  Divisor D;
  std::map<PointId, std::vector<Scalar>> g11, g12, g22;
};

/// theta = r(D)(g12); requires the g11 expansions to vanish to full length
/// (D is the divisor of gamma').
JetOnDivisor thetaGamma(const LocalizedPair& lp);

/// Checks r(D)(g11*g22 - g12^2) = -theta^2 exactly; an algebraic identity,
/// returned for test harnesses.
bool detIdentityCheck(const LocalizedPair& lp);

/// Local verification behind the reconstruction of a pair from (q, eta):
/// the diagonal block (q^2 + eta)/gamma' is regular along D exactly when
/// q^2 + eta|_D = 0 holds at the jet level.
bool reconstructionBlockRegular(const JetOnDivisor& q, const JetOnDivisor& etaD);

/// (dim C, dim Q) = (2(dU-d)+1-g, 2(dU-d)-g) under dU-d > g-1.
std::pair<long long, long long> dimC(int g, long long d, long long dU);

}  // namespace quadpair
