#include "quadpair/spectral.hpp"

namespace quadpair {

const char* spectralClassName(SpectralClass c) {
  switch (c) {
    case SpectralClass::SmoothIrreducible: return "SmoothIrreducible";
    case SpectralClass::SingularIrreducible: return "SingularIrreducible";
    case SpectralClass::Reducible: return "Reducible";
  }
  return "?";
}

static std::map<PointId, long long> refineFromJets(const DecomposablePair& pair) {
  std::map<PointId, long long> out;
  if (!pair.jets) return out;
  for (const auto& pointEntry : pair.jets->perPoint) {
    const PointId& p = pointEntry.first;
    const auto& entries = pointEntry.second;
    auto get = [&entries](GammaEntry e) -> std::optional<std::vector<Scalar>> {
      auto it = entries.find(e);
      if (it == entries.end()) return std::nullopt;
      return it->second;
    };
    auto a = get(GammaEntry::G11), b = get(GammaEntry::G12), c = get(GammaEntry::G22);
    if (!a || !b || !c) continue;
    size_t n = std::min({a->size(), b->size(), c->size()});
    if (n == 0) continue;
    Jet ja(std::vector<Scalar>(a->begin(), a->begin() + n));
    Jet jb(std::vector<Scalar>(b->begin(), b->begin() + n));
    Jet jc(std::vector<Scalar>(c->begin(), c->begin() + n));
    Jet det = jetAdd(jetMul(ja, jc), jetNeg(jetMul(jb, jb)));
    size_t ord = det.order();
    if (ord < n) out[p] = static_cast<long long>(ord);  // exact multiplicity
  }
  return out;
}

HitchinInvariant hitchinInvariant(const DecomposablePair& pair) {
  pair.validate();
  HitchinInvariant h;
  h.xi = picSub(pair.U, picAdd(pair.L1, pair.L2));
  h.detClass = picScale(2, h.xi);
  DetInfo det = detGamma(pair);
  if (det.state == Tri::Zero)
    throw Error(ErrorCode::DegenerateGamma,
                "det(gamma) = 0 in the model: rank-1 gamma has no Hitchin invariant");
  h.detDivisor = det.divisor;
  h.refinedMultiplicities = refineFromJets(pair);
  return h;
}

bool pxMember(const Divisor& D, const PicClass& L, const CurveModel& curve) {
  D.validate();
  return classOfDivisor(D, curve) == picScale(2, L);
}

std::vector<PicClass> pxFibre(const Divisor& D, const CurveModel& curve) {
  D.validate();
  if (D.degree() % 2 != 0)
    throw Error(ErrorCode::DegreeParity, "P_X fibres exist only over even-degree divisors");
  return squareRoots(classOfDivisor(D, curve), curve);
}

SpectralClass spectralClassify(const SpectralData& sd, const CurveModel& curve) {
  sd.D.validate();
  if (!pxMember(sd.D, sd.xi, curve))
    throw Error(ErrorCode::NotInPX, "(D, xi) is not a point of P_X: O(D) != xi^2");
  Divisor half;
  if (divisorHalve(sd.D, half) && classOfDivisor(half, curve) == sd.xi)
    return SpectralClass::Reducible;
  for (const auto& [p, m] : sd.D.support)
    if (m > 1) return SpectralClass::SingularIrreducible;
  return SpectralClass::SmoothIrreducible;
}

TwistedHiggsInvariants twistedHiggs(const DecomposablePair& pair) {
  pair.validate();
  TwistedHiggsInvariants t;
  t.xi = picSub(pair.U, picAdd(pair.L1, pair.L2));
  t.detClass = picScale(2, t.xi);
  t.traceZero = true;
  DetInfo det = detGamma(pair);
  t.degenerate = det.state == Tri::Zero;
  t.detDivisor = det.divisor;
  return t;
}

StabilityTransfer stabilityTransfer(const DecomposablePair& pair, const Rational& alpha) {
  pair.validate();
  long long d = pair.d(), dU = pair.dU();
  Rational alphaMin(d - Rational(dU, 2).floor());
  if (!(alpha < alphaMin))
    throw Error(ErrorCode::WrongChamber,
                "stability transfer is stated for alpha below alpha_m = " + alphaMin.str());
  StabilityTransfer t;
  StabilityVerdict v = alphaVerdict(pair, alpha);
  t.quadPairSemistable =
      v.status == VerdictStatus::Stable || v.status == VerdictStatus::StrictlySemistable;
  t.strict = v.status == VerdictStatus::StrictlySemistable;
  t.exactness = v.exactness;

  // xi-twisted side: phi(L) in L xi iff gamma(L) in L-perp U (classes A, B);
  // the associated Higgs field must also be generically of rank 2, which is
  // det(gamma) != 0 at the model level.
  DetInfo det = detGamma(pair);
  bool higgs = det.state != Tri::Zero;
  if (det.state == Tri::Unknown) t.exactness = Exactness::CandidateRelative;
  // Generic graph candidates are of class C, never phi-invariant, so the
  // invariant-subbundle check runs over the factors.
  for (int i = 1; i <= 2 && higgs; ++i) {
    auto cand = i == 1 ? SubbundleCandidate::factor1() : SubbundleCandidate::factor2();
    ConditionReport rep = conditionClass(pair, cand);
    if ((rep.cls == ConditionClass::A || rep.cls == ConditionClass::B) &&
        Rational(rep.degree) > Rational(d, 2))
      higgs = false;
  }
  t.higgsSemistable = higgs;
  return t;
}

}  // namespace quadpair
