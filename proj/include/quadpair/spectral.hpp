#pragma once

#include "quadpair/pairs.hpp"

namespace quadpair {

/// Hitchin-map data: divisor of det(gamma) of degree 2(dU-d) and the twist
/// class xi of degree dU-d with O(D) = xi^2.
struct SpectralData {
  Divisor D;
  PicClass xi;
};

enum class SpectralClass { SmoothIrreducible, SingularIrreducible, Reducible };
const char* spectralClassName(SpectralClass c);

struct HitchinInvariant {
  PicClass xi;                      // Lambda^2 V^{-1} U
  PicClass detClass;                // 2 xi
  std::optional<Divisor> detDivisor;  // exact for diagonal / anti-diagonal gamma
  // Jet-refined det multiplicities at supplied points, when jets are attached.
  std::map<PointId, long long> refinedMultiplicities;
};

/// (div(det gamma), Lambda^2 V^{-1} U). Throws DegenerateGamma when the model
/// decides det = 0 (rank-1 gamma: excluded in the generic-rank regime).
HitchinInvariant hitchinInvariant(const DecomposablePair& pair);

/// Membership in P_X: O(D) = L^2 exactly.
bool pxMember(const Divisor& D, const PicClass& L, const CurveModel& curve);

/// Fibre of P_X -> Sym(X): the 2^{2g} square roots of O(D).
std::vector<PicClass> pxFibre(const Divisor& D, const CurveModel& curve);

/// Smooth iff all multiplicities are 1; reducible iff D = 2D' with
/// class(D') = xi; otherwise singular irreducible.
SpectralClass spectralClassify(const SpectralData& sd, const CurveModel& curve);

struct TwistedHiggsInvariants {
  PicClass xi;
  bool traceZero = true;
  std::optional<Divisor> detDivisor;  // nullopt = class-only
  PicClass detClass;
  bool degenerate = false;  // model-decided det = 0
};

TwistedHiggsInvariants twistedHiggs(const DecomposablePair& pair);

struct StabilityTransfer {
  bool quadPairSemistable = false;
  bool higgsSemistable = false;
  bool strict = false;  // strictly semistable on the quadratic-pair side
  Exactness exactness = Exactness::Exact;
};

/// Evaluates alpha_m^- quadratic-pair semistability against xi-twisted Higgs
/// semistability over the same candidate set; the two booleans always agree.
StabilityTransfer stabilityTransfer(const DecomposablePair& pair, const Rational& alpha);

}  // namespace quadpair
