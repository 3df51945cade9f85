#pragma once

#include <optional>

#include "quadpair/chambers.hpp"

namespace quadpair {

struct ExpectedDim {
  long long dim = 0;     // 3(dU-d)+g-1
  long long chiS2 = 0;   // chi(S^2 V* tensor U) = 3(dU-d)+3(1-g)
  long long chiEnd = 0;  // chi(End V) = 4(1-g)
};

ExpectedDim expectedDim(int g, long long d, long long dU);

/// Closed-form dimensions of the flip loci at a critical value alpha_k < d/2.
struct DimensionReport {
  long long expectedDimN = 0;
  long long dimSplus = 0;                      // dU-d+2g-2
  long long splusFibreDim = 0;                 // d-2ak+g-2
  long long dimSminus0 = 0;                    // 2dU-2d
  std::optional<long long> dimSminus1;         // 3dU-4d+2ak, needs dU-d>g-1
  std::optional<long long> dimQ;               // 2(dU-d)-g, needs dU-d>g-1
  std::optional<long long> dimRank1Base;       // 2ak-2d+dU+g
  long long dimPX = 0;                         // 2dU-2d
  long long dimHitchinFibre = 0;               // dU-d+g-1; sums with dimPX to expectedDimN
  long long codimSplus = 0;                    // 2(dU-d)-g+1
  long long codimSminusLowerBound = 0;         // d+g-1-2ak
  bool isAlphaMin = false;                     // alpha_k = alpha_m
  bool sminus1Empty = false;                   // alpha_m wall with even dU: theta = 0 forces S^1 empty
};

DimensionReport flipDimensions(int g, long long d, long long dU, const Rational& alphaK);

struct CodimCheck {
  long long codimSplus = 0;
  long long codimSminusLB = 0;
  bool splusPositive = false;   // codimSplus > g-1
  bool sminusPositive = false;  // codimSminusLB > g-1
};

CodimCheck codimCheck(int g, long long d, long long dU, const Rational& alphaK);

struct ConnectednessVerdict {
  enum class Kind {
    Empty,
    ConnectedExtremal,
    ConnectedByCodimension,
    SpecialDEqualsDU,
    HypothesisFails,
  } kind;
  RegionTag emptyReason = RegionTag::WallZone;  // set for Empty
  std::optional<long long> componentCount;      // 1 for the Connected kinds
  std::string note;
  bool modelOnly = false;
};

ConnectednessVerdict connectedness(int g, long long d, long long dU, const Rational& alpha);

/// (dim P_X, generic Hitchin-fibre dimension); the two sum to expectedDim.
std::pair<long long, long long> hitchinDims(int g, long long d, long long dU);

struct DhalfFibre {
  long long chi = 0;             // chi(S^2 V* tensor U)
  long long genericFibreDim = 0; // chi - 1
  bool h1VanishesGenerically = true;
};

DhalfFibre dhalfFibreChi(int g, long long d, long long dU);

}  // namespace quadpair
