#include "quadpair/modelgen.hpp"

namespace quadpair {

CurveModel randomCurve(Rng& rng, int genus, int nPoints) {
  CurveModel curve(genus);
  for (int i = 0; i < nPoints; ++i) {
    AJVector aj;
    for (int k = 0; k < 2 * genus; ++k) aj.push_back(rng.dyadic());
    curve.registerPoint("p" + std::to_string(i), std::move(aj));
  }
  return curve;
}

Divisor divisorWithClass(Rng& rng, CurveModel& curve, long long degree, const PicClass& target,
                         const std::string& tag) {
  if (degree != target.degree)
    throw Error(ErrorCode::InvalidModel, "divisor degree must match target degree");
  if (degree < 1)
    throw Error(ErrorCode::InvalidModel, "class-adjusted divisor needs degree >= 1");
  Divisor d;
  std::vector<PointId> ids;
  for (const auto& [id, aj] : curve.points) ids.push_back(id);
  PicClass acc = picZero(curve.genus);
  for (long long i = 0; i + 1 < degree; ++i) {
    const PointId& p = ids[rng.below(ids.size())];
    d.support[p] += 1;
    acc = picAdd(acc, PicClass{1, curve.aj(p)});
  }
  // Fresh point chosen so the total class lands exactly on target.
  AJVector adj;
  for (int k = 0; k < 2 * curve.genus; ++k)
    adj.push_back((target.jac[k] - acc.jac[k]).mod1());
  PointId fresh = "q_" + tag;
  int suffix = 0;
  while (curve.points.count(fresh)) fresh = "q_" + tag + "_" + std::to_string(suffix++);
  curve.registerPoint(fresh, adj);
  d.support[fresh] += 1;
  return d;
}

DecomposablePair randomDecomposablePair(Rng& rng, int genus, long long d, long long dU,
                                        long long degL1, PairShape shape) {
  DecomposablePair p;
  p.curve = randomCurve(rng, genus, 4);
  auto randomClass = [&](long long deg) {
    PicClass c = picZero(genus);
    c.degree = deg;
    for (auto& x : c.jac) x = rng.dyadic();
    return c;
  };
  p.L1 = randomClass(degL1);
  p.L2 = randomClass(d - degL1);
  p.U = randomClass(dU);
  int made = 0;
  auto makeEntry = [&](bool use, GammaEntry e, std::optional<Divisor>& slot,
                       const char* tag) {
    if (!use) return;
    PicClass target = p.entryTarget(e);
    if (target.degree < 1) return;  // no non-zero section in the model
    slot = divisorWithClass(rng, p.curve, target.degree, target, tag);
    ++made;
  };
  makeEntry(shape.useG11, GammaEntry::G11, p.g11, "g11");
  makeEntry(shape.useG12, GammaEntry::G12, p.g12, "g12");
  makeEntry(shape.useG22, GammaEntry::G22, p.g22, "g22");
  if (made == 0) {
    // Fall back to any entry with a representable section.
    for (GammaEntry e : {GammaEntry::G12, GammaEntry::G22, GammaEntry::G11}) {
      PicClass target = p.entryTarget(e);
      if (target.degree < 1) continue;
      auto& slot = e == GammaEntry::G11 ? p.g11 : e == GammaEntry::G12 ? p.g12 : p.g22;
      slot = divisorWithClass(rng, p.curve, target.degree, target, "fallback");
      made = 1;
      break;
    }
    if (made == 0)
      throw Error(ErrorCode::InvalidModel, "no gamma entry admits a non-zero section");
  }
  p.validate();
  return p;
}

DecomposablePair randomDecomposablePair(Rng& rng, int genus, long long d, long long dU) {
  // Keep both diagonal targets representable: dU - 2 deg(Li) >= 0 is not
  // required, only at least one entry must survive; bias to small splits.
  long long lo = d / 2 - 2, hi = d / 2;
  long long degL1 = rng.range(lo, hi);
  PairShape shape;
  switch (rng.below(5)) {
    case 0: shape = {true, false, true}; break;   // diagonal
    case 1: shape = {false, true, false}; break;  // anti-diagonal
    case 2: shape = {false, false, true}; break;  // rank-1 block
    case 3: shape = {true, true, true}; break;    // full
    default: shape = {true, true, false}; break;
  }
  return randomDecomposablePair(rng, genus, d, dU, degL1, shape);
}

ExtensionPair randomExtensionPair(Rng& rng, int genus, long long d, long long dU,
                                  long long degSub) {
  ExtensionPair e;
  e.curve = randomCurve(rng, genus, 4);
  auto randomClass = [&](long long deg) {
    PicClass c = picZero(genus);
    c.degree = deg;
    for (auto& x : c.jac) x = rng.dyadic();
    return c;
  };
  e.sub = randomClass(degSub);
  e.quot = randomClass(d - degSub);
  e.U = randomClass(dU);
  PicClass target = picSub(e.U, picScale(2, e.quot));
  if (target.degree < 1)
    throw Error(ErrorCode::InvalidModel, "quot^{-2} U admits no non-zero section");
  e.gammaQuot = divisorWithClass(rng, e.curve, target.degree, target, "gq");
  e.extNontrivial = true;
  e.validate();
  return e;
}

EspQuadruple randomEspQuadruple(Rng& rng, int genus, long long d1, long long d2) {
  EspQuadruple q;
  q.curve = randomCurve(rng, genus, 4);
  auto randomClass = [&](long long deg) {
    PicClass c = picZero(genus);
    c.degree = deg;
    for (auto& x : c.jac) x = rng.dyadic();
    return c;
  };
  long long degL1 = rng.range(d1 / 2 - 2, d1 / 2);
  q.L1 = randomClass(degL1);
  q.L2 = randomClass(d1 - degL1);
  q.Lcls = randomClass(d2);
  int made = 0;
  auto makeEntry = [&](GammaEntry e, std::optional<Divisor>& slot, const char* tag) {
    PicClass target = q.gammaTarget(e);
    if (target.degree < 1) return;
    if (rng.below(3) == 0) return;  // leave some entries zero
    slot = divisorWithClass(rng, q.curve, target.degree, target, tag);
    ++made;
  };
  makeEntry(GammaEntry::G11, q.g11, "g11");
  makeEntry(GammaEntry::G12, q.g12, "g12");
  makeEntry(GammaEntry::G22, q.g22, "g22");
  if (made == 0) {
    for (GammaEntry e : {GammaEntry::G12, GammaEntry::G22, GammaEntry::G11}) {
      PicClass target = q.gammaTarget(e);
      if (target.degree < 1) continue;
      auto& slot = e == GammaEntry::G11 ? q.g11 : e == GammaEntry::G12 ? q.g12 : q.g22;
      slot = divisorWithClass(rng, q.curve, target.degree, target, "fallback");
      made = 1;
      break;
    }
    if (made == 0)
      throw Error(ErrorCode::InvalidModel, "no gamma entry admits a non-zero section");
  }
  q.validate();
  return q;
}

}  // namespace quadpair
