#pragma once

#include <optional>
#include <vector>

#include "quadpair/jets.hpp"
#include "quadpair/picard.hpp"

namespace quadpair {

enum class GammaEntry { G11, G12, G22 };

/// Per-point expansions of the three entries of gamma, for the local
/// (jet-level) checks of the flip-locus machinery.
struct PairJets {
  // point -> entry -> coefficient list
  std::map<PointId, std::map<GammaEntry, std::vector<Scalar>>> perPoint;
};

/// Rank-2 quadratic pair in split form V = L1 + L2 with symmetric gamma
/// given entrywise by divisors of sections.
struct DecomposablePair {
  CurveModel curve;
  PicClass U;
  PicClass L1, L2;
  std::optional<Divisor> g11, g12, g22;  // nullopt = zero section
  std::optional<PairJets> jets;

  long long d() const { return L1.degree + L2.degree; }
  long long dU() const { return U.degree; }
  PicClass entryTarget(GammaEntry e) const;
  const std::optional<Divisor>& entry(GammaEntry e) const;
  void validate() const;  // class/degree consistency of all entries
};

/// Rank-2 pair presented as an extension 0 -> sub -> V -> quot -> 0 with
/// gamma pulled back from a rank-1 pair (quot, gammaQuot).
struct ExtensionPair {
  CurveModel curve;
  PicClass U;
  PicClass sub, quot;
  std::optional<Divisor> gammaQuot;  // non-null; target quot^{-2} U
  bool extNontrivial = true;

  long long d() const { return sub.degree + quot.degree; }
  long long dU() const { return U.degree; }
  void validate() const;
};

/// Line-subbundle candidate of a decomposable pair.
struct SubbundleCandidate {
  enum class Kind { Factor1, Factor2, Graph, Declared } kind = Kind::Factor1;
  // Graph: the subbundle {(v, f v)} with f a section of L_from^{-1} L_to.
  int graphFrom = 1;                // 1 or 2
  std::optional<Divisor> graphF;    // nullopt = generic section of the right class
  // Declared: user-asserted candidate (degree + condition class), CandidateRelative.
  long long declaredDegree = 0;
  char declaredClass = 'C';

  static SubbundleCandidate factor1() { return {}; }
  static SubbundleCandidate factor2();
  static SubbundleCandidate genericGraph(int from);
  static SubbundleCandidate graph(int from, Divisor f);
  static SubbundleCandidate declared(long long degree, char cls);
  std::string describe() const;
};

enum class ConditionClass { A, B, C, Indeterminate };
const char* conditionClassName(ConditionClass c);

struct ConditionReport {
  ConditionClass cls = ConditionClass::Indeterminate;
  // Possible classes when Indeterminate (the divisor model cannot decide).
  bool mayBeA = false, mayBeB = false, mayBeC = false;
  long long degree = 0;
};

/// Classifies gamma restricted to the candidate subbundle:
///   A: gamma(L) = 0;  B: gamma(L) in L-perp U;  C: neither.
ConditionReport conditionClass(const DecomposablePair& pair, const SubbundleCandidate& cand);

enum class VerdictStatus { Stable, StrictlySemistable, Unstable, EmptyRegime };
const char* verdictStatusName(VerdictStatus s);

enum class Exactness { Exact, CandidateRelative };

struct Witness {
  SubbundleCandidate candidate;
  ConditionClass cls;
  long long degree = 0;
};

struct StabilityVerdict {
  VerdictStatus status = VerdictStatus::Stable;
  bool typeA = false, typeB = false, typeC = false;  // strictly-semistable types
  bool polystable = false;
  std::optional<Witness> witness;     // violating candidate for Unstable
  std::vector<Witness> equalities;    // all confirmed equality witnesses
  Exactness exactness = Exactness::Exact;
  std::string note;
};

/// alpha-(semi/poly)stability over Factor1, Factor2, auto-generated graph
/// candidates and any extra user candidates.
StabilityVerdict alphaVerdict(const DecomposablePair& pair, const Rational& alpha,
                              const std::vector<SubbundleCandidate>& extra = {});

struct DestabViolation {
  std::string description;
};

/// Checks the uniqueness constraints on destabilizing subbundles:
/// at most one of type A, one of type C, two of type B, no A+B, no C+B.
std::vector<DestabViolation> destabAudit(const DecomposablePair& pair, const Rational& alpha,
                                         const std::vector<SubbundleCandidate>& extra = {});

/// (pair is d/2-semistable, underlying V is semistable); the two always agree.
std::pair<bool, bool> bundleSemistabilityBridge(const DecomposablePair& pair);

struct WallSide {
  enum class Kind { SPlus, SMinus, NotInFlip, NotSemistableAtWall, MaxWall } kind;
  enum class Sub { None, S0, S1 } sub = Sub::None;  // SMinus split by theta
};

WallSide wallSide(const DecomposablePair& pair, const Rational& alphaK);
WallSide wallSide(const ExtensionPair& pair, const Rational& alphaK);

/// theta vanishing for a pair with a type-C factor witness at degree d - alpha_k:
/// true iff g12 = 0 or div(g12) >= D = div(gamma') pointwise.
bool thetaVanishes(const DecomposablePair& pair, const Rational& alphaK);

struct ExtensionVerdict {
  StabilityVerdict verdict;
  long long splusFibreDim = 0;  // dim P Ext^1(quot, sub) = d - 2 deg(sub) + g - 2
  long long ext1Dim = 0;        // dim H^1(quot^{-1} sub) = d - 2 deg(sub) + g - 1, generic
};

ExtensionVerdict extensionPairVerdict(const ExtensionPair& ep, const Rational& alpha);

/// Semistability status of an extension pair at a given alpha (model-level
/// genericity: quotient-projecting subbundles never destabilize).
StabilityVerdict extensionAlphaVerdict(const ExtensionPair& ep, const Rational& alpha);

/// Tri-state value of a sum of sections in the divisor model.
enum class Tri { Zero, Nonzero, Unknown };

/// Model-level determinant of gamma: Zero / Nonzero / Unknown, with the
/// exact divisor when gamma is in diagonal or anti-diagonal form.
struct DetInfo {
  Tri state = Tri::Unknown;
  std::optional<Divisor> divisor;  // exact when computable
};

DetInfo detGamma(const DecomposablePair& pair);

}  // namespace quadpair
