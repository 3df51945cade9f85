#include "quadpair/dimensions.hpp"

#include <algorithm>

namespace quadpair {

ExpectedDim expectedDim(int g, long long d, long long dU) {
  ExpectedDim e;
  e.chiS2 = 3 * (dU - d) + 3LL * (1 - g);
  e.chiEnd = 4LL * (1 - g);
  e.dim = e.chiS2 - e.chiEnd;
  return e;
}

static bool isCriticalBelowMax(long long d, long long dU, const Rational& alphaK) {
  if (d >= dU) return false;
  if (alphaK >= Rational(d, 2)) return false;
  auto cs = criticalValues(d, dU);
  return std::find(cs.begin(), cs.end(), alphaK) != cs.end();
}

DimensionReport flipDimensions(int g, long long d, long long dU, const Rational& alphaK) {
  if (d >= dU) throw Error(ErrorCode::CriticalsUndefined, "flip loci require d < dU");
  if (alphaK == Rational(d, 2))
    throw Error(ErrorCode::NotCritical,
                "alpha_M = d/2 is the max wall; its flip locus is the whole moduli space");
  if (!isCriticalBelowMax(d, dU, alphaK))
    throw Error(ErrorCode::NotCritical, "alpha_k = " + alphaK.str() + " is not a critical value");
  long long ak = alphaK.floor();  // criticals below d/2 are integers

  DimensionReport r;
  r.expectedDimN = expectedDim(g, d, dU).dim;
  r.dimSplus = dU - d + 2LL * g - 2;
  r.splusFibreDim = d - 2 * ak + g - 2;
  r.dimSminus0 = 2 * dU - 2 * d;
  r.dimPX = 2 * dU - 2 * d;
  r.dimHitchinFibre = dU - d + g - 1;
  r.codimSplus = 2 * (dU - d) - g + 1;
  r.codimSminusLowerBound = d + g - 1 - 2 * ak;
  r.isAlphaMin = alphaK == Rational(d - Rational(dU, 2).floor());
  r.sminus1Empty = r.isAlphaMin && dU % 2 == 0;
  if (dU - d > g - 1) {
    r.dimRank1Base = 2 * ak - 2 * d + dU + g;
    r.dimQ = 2 * (dU - d) - g;
    r.dimSminus1 = 3 * dU - 4 * d + 2 * ak;
  }
  return r;
}

CodimCheck codimCheck(int g, long long d, long long dU, const Rational& alphaK) {
  if (dU - d <= g - 1)
    throw Error(ErrorCode::HypothesisFails, "codimension bounds require dU - d > g - 1");
  if (!isCriticalBelowMax(d, dU, alphaK))
    throw Error(ErrorCode::NotCritical, "alpha_k = " + alphaK.str() + " is not a critical value");
  long long ak = alphaK.floor();
  CodimCheck c;
  c.codimSplus = 2 * (dU - d) - g + 1;
  c.codimSminusLB = d + g - 1 - 2 * ak;
  c.splusPositive = c.codimSplus > g - 1;
  c.sminusPositive = c.codimSminusLB > g - 1;
  return c;
}

ConnectednessVerdict connectedness(int g, long long d, long long dU, const Rational& alpha) {
  ConnectednessVerdict v{};
  v.modelOnly = g < 2;
  RegionTag tag = region(alpha, d, dU);
  if (tag == RegionTag::EmptyDegreeTooBig || tag == RegionTag::EmptyAlphaTooBig) {
    v.kind = ConnectednessVerdict::Kind::Empty;
    v.emptyReason = tag;
    return v;
  }
  if (tag == RegionTag::SpecialDEqualsDU) {
    v.kind = ConnectednessVerdict::Kind::SpecialDEqualsDU;
    v.note = "d = dU corresponds to orthogonal-bundle moduli; no verdict emitted";
    return v;
  }
  Rational alphaMin(d - Rational(dU, 2).floor());
  if (alpha < alphaMin && d < dU) {
    v.kind = ConnectednessVerdict::Kind::ConnectedExtremal;
    v.componentCount = 1;
    return v;
  }
  if (dU - d > g - 1) {
    v.kind = ConnectednessVerdict::Kind::ConnectedByCodimension;
    v.componentCount = 1;
    return v;
  }
  v.kind = ConnectednessVerdict::Kind::HypothesisFails;
  v.note = "dU - d <= g - 1: no connectedness claim in this regime";
  return v;
}

std::pair<long long, long long> hitchinDims(int g, long long d, long long dU) {
  if (d == dU)
    throw Error(ErrorCode::SpecialDEqualsDU, "d = dU is the special orthogonal-bundle region");
  if (d > dU) throw Error(ErrorCode::DegreeTooBig, "hitchin dims require d < dU");
  return {2 * (dU - d), dU - d + g - 1};
}

DhalfFibre dhalfFibreChi(int g, long long d, long long dU) {
  if (dU - d <= g - 1)
    throw Error(ErrorCode::HypothesisFails, "generic fibre formula requires dU - d > g - 1");
  DhalfFibre f;
  f.chi = 3 * (dU - d) + 3LL * (1 - g);
  f.genericFibreDim = f.chi - 1;
  f.h1VanishesGenerically = true;
  return f;
}

}  // namespace quadpair
