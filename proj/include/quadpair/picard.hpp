#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadpair/rational.hpp"

namespace quadpair {

enum class ErrorCode {
  UnknownPoint,
  DegreeParity,
  InvalidOverride,
  CriticalsUndefined,
  OutOfRange,
  NotCritical,
  HypothesisFails,
  SpecialDEqualsDU,
  DegreeTooBig,
  InsufficientCoefficients,
  DivisorMismatch,
  MissingWitness,
  InvalidCandidate,
  DegenerateExtension,
  DegenerateGamma,
  NotInPX,
  WrongChamber,
  EmptyWindow,
  OddN,
  InvalidModel,
  UnsupportedModel,
  UsageError,
};

/// Domain error carrying a stable error code for CLI reporting.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* errorCodeName(ErrorCode c);

using PointId = std::string;
using AJVector = std::vector<Rational>;  // length 2g, entries reduced mod 1

/// Line-bundle class: integer degree plus Jacobian coordinate in (Q/Z)^{2g}.
struct PicClass {
  long long degree = 0;
  AJVector jac;

  friend bool operator==(const PicClass& a, const PicClass& b) {
    return a.degree == b.degree && a.jac == b.jac;
  }
  friend bool operator!=(const PicClass& a, const PicClass& b) { return !(a == b); }
  friend bool operator<(const PicClass& a, const PicClass& b);  // total order for sets
};

PicClass picZero(int genus);
PicClass picAdd(const PicClass& a, const PicClass& b);
PicClass picNeg(const PicClass& a);
PicClass picSub(const PicClass& a, const PicClass& b);
PicClass picScale(long long k, const PicClass& a);

/// Finite multiset of curve points with integer multiplicities.
struct Divisor {
  std::map<PointId, long long> support;
  bool effective = true;

  long long degree() const;
  bool isEffective() const;
  void validate() const;  // throws InvalidModel when effective flag is violated

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.support == b.support;
  }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
};

Divisor divisorAdd(const Divisor& a, const Divisor& b);
Divisor divisorScale(long long k, const Divisor& a);
/// Pointwise multiplicity comparison a >= b over supp(b).
bool divisorDominates(const Divisor& a, const Divisor& b);
bool divisorHalve(const Divisor& d, Divisor& half);  // false when some multiplicity is odd

/// Genus-g curve: registered points with exact Abel-Jacobi coordinates.
struct CurveModel {
  int genus = 2;
  std::map<PointId, AJVector> points;
  AJVector canonicalClassJac;  // default all-zero, degree 2g-2 implied

  CurveModel() = default;
  explicit CurveModel(int g);

  void registerPoint(const PointId& id, AJVector aj);
  const AJVector& aj(const PointId& id) const;  // throws UnknownPoint
  PicClass canonicalClass() const;
  bool modelOnly() const { return genus < 2; }  // verdicts backed by genus >= 2 hypotheses
  void validate() const;
};

/// Non-zero section modeled by its effective divisor; Zero otherwise.
struct SectionModel {
  std::optional<Divisor> divisor;  // nullopt = zero section
  PicClass target;

  bool isZero() const { return !divisor.has_value(); }
  static SectionModel zero(PicClass target);
  static SectionModel fromDivisor(Divisor d, PicClass target, const CurveModel& curve);
};

PicClass classOfDivisor(const Divisor& d, const CurveModel& curve);

/// All x with 2x = c; 2^{2g} classes for even degree, none for odd.
std::vector<PicClass> squareRoots(const PicClass& c, const CurveModel& curve);

/// Generic h^0 of a degree-e class on a genus-g curve, with an explicit
/// override for special classes. Riemann-Roch lower bound enforced.
long long h0(long long e, int g, std::optional<long long> specialOverride = std::nullopt);

struct Rank1Verdict {
  enum class Kind { Empty, SquareRootSet, Cover } kind;
  enum class EmptyReason { None, AlphaExceedsDegree, NoNonzeroSection } reason =
      EmptyReason::None;
  long long count = 0;      // SquareRootSet: 2^{2g}
  long long dimension = 0;  // Cover: d_U - 2d'
  bool modelOnly = false;
};

Rank1Verdict rank1Verdict(long long dPrime, const Rational& alpha, const PicClass& U,
                          const CurveModel& curve);

/// Fibre of the rank-1 moduli over a divisor D: square roots of U(-D).
std::vector<PicClass> rank1Fibre(const Divisor& D, const PicClass& U, const CurveModel& curve);

}  // namespace quadpair
