#pragma once

#include "quadpair/pairs.hpp"

namespace quadpair {

/// Fundamental-group data of EU(n) and U(n)/(Z/2).
struct Pi1Tables {
  int n = 2;
  int euFreeRank = 2;          // pi_1 EU(n) = Z x Z
  int quotientFreeRank = 1;    // pi_1 (U(n)/(Z/2)): Z factor
  bool quotientHasTorsion = false;  // extra Z/2 factor iff n even
  std::string euDescription;
  std::string quotientDescription;
};

Pi1Tables pi1Tables(int n);

/// Projected invariants (a, b) = (d1 - n d2/2, d2 mod 2) for even n.
struct ProjectedInvariants {
  long long a = 0;
  int b = 0;  // in {0, 1}
};

ProjectedInvariants projectInvariants(long long d1, long long d2, int n);

struct MilnorWood {
  bool degreeFormHolds = false;  // n(1-g)+d2 <= d1 <= n(g-1)+d2
  bool toledoFormHolds = false;  // |a| <= n(g-1)
  long long a = 0;
  long long bound = 0;  // n(g-1)
  bool formsAgree = false;
};

MilnorWood milnorWood(long long d1, long long d2, int n, int g);

/// Duality (V,L,beta,gamma) -> (V* tensor L, L, gamma^t, beta^t):
/// (d1,d2) -> (n d2 - d1, d2), inducing (a,b) -> (-a,b).
std::pair<long long, long long> dualize(long long d1, long long d2, int n);

struct Normalized {
  long long d1 = 0;
  long long d2 = 0;  // in {0, 1}
  long long twist = 0;  // m with (d1,d2) -> (d1+n m, d2+2m)
};

Normalized normalize(long long d1, long long d2, int n);

/// Lifts to Sp(2n,R) iff deg(L) is even.
bool liftToSp(long long d2);

/// (a,b) <-> (a,w) with b = a + w mod 2.
int so23WFromB(long long a, int b);
int so23BFromW(long long a, int w);

/// Underlying SO(2,3) bundle data of an ESp(4,R)-Higgs bundle for
/// decomposable V: W = S^2 V tensor Lambda^2 V^{-1}, F = Lambda^2 V tensor L^{-1}.
struct SO23Bundle {
  PicClass F;       // degree = d1 - d2 = Toledo invariant a
  int wRank = 3;
  long long wDegree = 0;
  long long toledo = 0;
};

SO23Bundle so23Bundle(const PicClass& L1, const PicClass& L2, const PicClass& Lcls);

/// ESp(4,R)-Higgs bundle with decomposable V, entrywise beta and gamma.
/// A degree-only V (no bundle-level data) is admitted for invariant
/// arithmetic but carries no semistability verdict.
struct EspQuadruple {
  CurveModel curve;
  PicClass L1, L2;   // V = L1 + L2
  PicClass Lcls;     // the auxiliary line bundle L (degree d2)
  std::optional<long long> degreeOnlyD1;  // set = V known by degree only
  // Entry divisors; targets L_i L_j L^{-1} K for beta, L_i^{-1} L_j^{-1} L K for gamma.
  std::optional<Divisor> b11, b12, b22;
  std::optional<Divisor> g11, g12, g22;

  long long d1() const { return degreeOnlyD1 ? *degreeOnlyD1 : L1.degree + L2.degree; }
  long long d2() const { return Lcls.degree; }
  bool betaZero() const { return !b11 && !b12 && !b22; }
  PicClass betaTarget(GammaEntry e) const;
  PicClass gammaTarget(GammaEntry e) const;
  void validate() const;
  /// The L K-quadratic pair (V, gamma) underlying a beta = 0 quadruple.
  DecomposablePair toQuadraticPair() const;
};

struct EspVerdict {
  StabilityVerdict verdict;
  bool viaQuadraticPairs = false;  // beta = 0 route through the pairs engine
  bool filtrationSemistable = false;  // native filtration evaluation
};

/// Semistability at parameter 0. For beta = 0 the verdict is delegated to the
/// quadratic-pair engine with U = L K and checked against the native
/// filtration inequalities; for beta != 0 only the filtration route runs.
EspVerdict espSemistable(const EspQuadruple& q);

struct ComponentVerdict {
  enum class Kind { Connected, Empty, OutOfScope } kind;
  long long count = 0;  // 1 for Connected
  bool modelOnly = false;
};

/// Connected components of R_{a,w}(SO_0(2,3)): connected for 0 < |a| < 2g-2,
/// empty beyond Milnor-Wood, out of scope at |a| in {0, 2g-2}.
ComponentVerdict componentCount(int g, long long a, int w);

struct ComponentRow {
  long long a = 0;
  int w = 0;
  ComponentVerdict verdict;
};

struct ComponentTable {
  std::vector<ComponentRow> rows;  // all |a| <= 2g-2, w in {0,1}
  long long inRangeConnected = 0;  // = 4(2g-3)
};

ComponentTable componentTable(int g);

}  // namespace quadpair
