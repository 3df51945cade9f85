#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadpair/picard.hpp"

namespace quadpair {

/// Stability-parameter data for type-(2,d) pairs twisted by a degree-d_U
/// line bundle on a genus-g curve.
struct ParamSpec {
  int g = 2;
  long long dU = 0;
  long long d = 0;
};

enum class RegionTag {
  EmptyDegreeTooBig,
  EmptyAlphaTooBig,
  SpecialDEqualsDU,
  StableZone,
  WallZone,
};

const char* regionTagName(RegionTag t);

struct ChamberInterval {
  std::optional<Rational> lo;  // nullopt = unbounded below
  Rational hi;
};

struct ChamberDecomposition {
  std::vector<Rational> criticals;        // sorted ascending
  Rational alphaMin;                      // d - floor(dU/2)
  Rational alphaMax;                      // d/2
  std::vector<ChamberInterval> chambers;  // (-inf, alpha_m) then the open gaps
  bool modelOnly = false;                 // dU <= 0: formulas still computed
};

/// Exactly {d/2} union {floor(d/2)+k : k in {d-floor(d/2)-floor(dU/2),...,0}}.
std::vector<Rational> criticalValues(long long d, long long dU);

std::pair<Rational, Rational> alphaBounds(long long d, long long dU);

ChamberDecomposition chamberDecomposition(long long d, long long dU);

struct ChamberLocation {
  enum class Kind { Chamber, Critical, CriticalMax, EmptyAlphaTooBig } kind;
  long long index = 0;  // Chamber: count of criticals below alpha; Critical: k with alpha_k=[d/2]+k
};

ChamberLocation chamberIndex(const Rational& alpha, const ParamSpec& spec);

RegionTag region(const Rational& alpha, long long d, long long dU);

enum class GenericRank { Two, PossiblyOne };
GenericRank genericRank(const Rational& alpha, long long d, long long dU);

/// Qualitative region diagram over an integer d-range and a half-integer
/// alpha grid. ASCII or SVG, deterministic output.
struct DiagramWindow {
  long long dLo = 0, dHi = 0;
  Rational alphaLo, alphaHi;
  long long dU = 0;
};

std::string regionDiagramAscii(const DiagramWindow& w);
std::string regionDiagramSvg(const DiagramWindow& w);

}  // namespace quadpair
