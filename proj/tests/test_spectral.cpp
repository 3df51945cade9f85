#include <doctest.h>

#include "quadpair/modelgen.hpp"
#include "quadpair/spectral.hpp"

using namespace quadpair;

namespace {

CurveModel zeroCurve(int genus, int nPoints) {
  CurveModel c(genus);
  for (int i = 0; i < nPoints; ++i)
    c.registerPoint("p" + std::to_string(i), AJVector(2 * genus, Rational(0)));
  return c;
}

PicClass zc(int genus, long long degree) {
  PicClass c = picZero(genus);
  c.degree = degree;
  return c;
}

Divisor dv(std::map<PointId, long long> support) { return Divisor{std::move(support), true}; }

DecomposablePair makeP1() {
  DecomposablePair p;
  p.curve = zeroCurve(2, 10);
  p.U = zc(2, 9);
  p.L1 = zc(2, 1);
  p.L2 = zc(2, 3);
  p.g11 = dv({{"p0", 4}, {"p1", 3}});
  p.g22 = dv({{"p2", 3}});
  return p;
}

DecomposablePair makeP2() {
  DecomposablePair p;
  p.curve = zeroCurve(2, 10);
  p.U = zc(2, 9);
  p.L1 = zc(2, 2);
  p.L2 = zc(2, 2);
  p.L2.jac[0] = Rational(1, 2);
  p.curve.registerPoint("t", {Rational(1, 2), Rational(0), Rational(0), Rational(0)});
  p.g12 = dv({{"p0", 1}, {"p1", 1}, {"p2", 1}, {"p3", 1}, {"t", 1}});
  return p;
}

DecomposablePair makeP3() {
  DecomposablePair p;
  p.curve = zeroCurve(2, 10);
  p.U = zc(2, 9);
  p.L1 = zc(2, 1);
  p.L2 = zc(2, 3);
  p.g22 = dv({{"p2", 3}});
  return p;
}

}  // namespace

TEST_CASE("hitchin invariant of diagonal and anti-diagonal pairs") {
  auto h1 = hitchinInvariant(makeP1());
  CHECK(h1.xi.degree == 5);
  REQUIRE(h1.detDivisor);
  CHECK(h1.detDivisor->degree() == 10);
  CHECK(*h1.detDivisor == divisorAdd(dv({{"p0", 4}, {"p1", 3}}), dv({{"p2", 3}})));
  CHECK(classOfDivisor(*h1.detDivisor, makeP1().curve) == h1.detClass);
  CHECK(h1.detClass == picScale(2, h1.xi));

  auto h2 = hitchinInvariant(makeP2());
  REQUIRE(h2.detDivisor);
  CHECK(*h2.detDivisor == divisorScale(2, *makeP2().g12));
  CHECK(h2.detDivisor->degree() == 10);

  // General symmetric gamma with no jets: class-only.
  DecomposablePair full = makeP1();
  full.g12 = dv({{"p3", 5}});
  auto h3 = hitchinInvariant(full);
  CHECK_FALSE(h3.detDivisor);
  CHECK(h3.detClass.degree == 10);

  // Rank-1 gamma is an error, not a silent answer.
  CHECK_THROWS_AS(hitchinInvariant(makeP3()), Error);
}

TEST_CASE("jets refine determinant multiplicities at supplied points") {
  DecomposablePair full = makeP1();
  full.g12 = dv({{"p3", 5}});
  PairJets jets;
  // At p3: g11, g22 units, g12 vanishing to order 5; det has order 0 there.
  jets.perPoint["p3"][GammaEntry::G11] = {Scalar(2), Scalar(1)};
  jets.perPoint["p3"][GammaEntry::G12] = {Scalar(0), Scalar(0)};
  jets.perPoint["p3"][GammaEntry::G22] = {Scalar(3), Scalar(0)};
  full.jets = jets;
  auto h = hitchinInvariant(full);
  REQUIRE(h.refinedMultiplicities.count("p3"));
  CHECK(h.refinedMultiplicities.at("p3") == 0);
}

TEST_CASE("P_X membership and fibres") {
  CurveModel curve(1);
  curve.registerPoint("a", {Rational(1, 30), Rational(0)});
  Divisor D;
  D.support["a"] = 10;  // class (10, (1/3, 0))

  PicClass L;
  L.degree = 5;
  L.jac = {Rational(1, 6), Rational(0)};
  CHECK(pxMember(D, L, curve));

  PicClass wrongDeg = L;
  wrongDeg.degree = 4;
  CHECK_FALSE(pxMember(D, wrongDeg, curve));

  PicClass wrongJac = L;
  wrongJac.jac[0] = Rational(1, 4);
  CHECK_FALSE(pxMember(D, wrongJac, curve));

  auto fibre = pxFibre(D, curve);
  CHECK(fibre.size() == 4);
  for (const auto& r : fibre) CHECK(pxMember(D, r, curve));

  Divisor odd;
  odd.support["a"] = 3;
  CHECK_THROWS_AS(pxFibre(odd, curve), Error);
}

TEST_CASE("spectral classification follows the simple-zero / square criteria") {
  CurveModel curve = zeroCurve(2, 6);
  curve.registerPoint("h", {Rational(1, 2), Rational(0), Rational(0), Rational(0)});

  Divisor smooth = dv({{"p0", 1}, {"p1", 1}, {"p2", 1}, {"p3", 1}});
  PicClass xi = zc(2, 2);
  CHECK(spectralClassify({smooth, xi}, curve) == SpectralClass::SmoothIrreducible);

  Divisor doubled = dv({{"p0", 2}, {"p1", 2}});
  CHECK(spectralClassify({doubled, xi}, curve) == SpectralClass::Reducible);

  // Halved class must equal xi for reducibility: shift xi by a 2-torsion point.
  PicClass xiTorsion = xi;
  xiTorsion.jac[0] = Rational(1, 2);
  CHECK(spectralClassify({doubled, xiTorsion}, curve) == SpectralClass::SingularIrreducible);

  Divisor mixed = dv({{"p0", 2}, {"p1", 1}, {"p2", 1}});
  CHECK(spectralClassify({mixed, xi}, curve) == SpectralClass::SingularIrreducible);

  PicClass notRoot = zc(2, 2);
  notRoot.jac[1] = Rational(1, 3);
  CHECK_THROWS_AS(spectralClassify({smooth, notRoot}, curve), Error);
}

TEST_CASE("spectral classification agrees with brute force on small divisors") {
  Rng rng(8);
  CurveModel curve = randomCurve(rng, 2, 4);
  std::vector<PointId> ids;
  for (const auto& [id, aj] : curve.points) ids.push_back(id);

  std::vector<std::map<PointId, long long>> current{{}};
  for (long long deg = 1; deg <= 6; ++deg) {
    std::vector<std::map<PointId, long long>> next;
    for (const auto& d : current)
      for (const auto& id : ids) {
        auto e = d;
        e[id] += 1;
        next.push_back(e);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = next;
    if (deg % 2 != 0) continue;
    for (const auto& supp : current) {
      Divisor D{supp, true};
      auto roots = pxFibre(D, curve);
      CHECK(roots.size() == 16);
      for (int rep = 0; rep < 20; ++rep) {
        const PicClass& xi = roots[rng.below(roots.size())];
        SpectralClass got = spectralClassify({D, xi}, curve);
        bool squarefree = true;
        for (const auto& [p, m] : D.support) squarefree = squarefree && m == 1;
        Divisor half;
        bool reducible = divisorHalve(D, half) && classOfDivisor(half, curve) == xi;
        SpectralClass want = reducible ? SpectralClass::Reducible
                             : squarefree ? SpectralClass::SmoothIrreducible
                                          : SpectralClass::SingularIrreducible;
        CHECK(got == want);
        if (got == SpectralClass::Reducible) CHECK_FALSE(squarefree);
      }
    }
  }
}

TEST_CASE("twisted Higgs invariants are scale-independent and trace free") {
  auto t = twistedHiggs(makeP1());
  CHECK(t.xi.degree == 5);
  CHECK(t.traceZero);
  REQUIRE(t.detDivisor);
  CHECK(t.detDivisor->degree() == 10);
  CHECK_FALSE(t.degenerate);

  // Scaling gamma leaves every divisor unchanged: identical output.
  auto t2 = twistedHiggs(makeP1());
  CHECK(t2.xi == t.xi);
  CHECK(t2.detDivisor == t.detDivisor);

  auto tp2 = twistedHiggs(makeP2());
  CHECK(*tp2.detDivisor == divisorScale(2, *makeP2().g12));

  auto tp3 = twistedHiggs(makeP3());
  CHECK(tp3.degenerate);
  CHECK_FALSE(tp3.detDivisor);
  CHECK(tp3.detClass.degree == 10);
}

TEST_CASE("stability transfer to the twisted-Higgs side below alpha_m") {
  auto t1 = stabilityTransfer(makeP1(), Rational(-1));
  CHECK(t1.quadPairSemistable);
  CHECK(t1.higgsSemistable);

  auto t3 = stabilityTransfer(makeP3(), Rational(-1));
  CHECK_FALSE(t3.quadPairSemistable);  // rank-1 gamma excluded
  CHECK_FALSE(t3.higgsSemistable);

  auto t2 = stabilityTransfer(makeP2(), Rational(-1));
  CHECK(t2.quadPairSemistable);
  CHECK(t2.higgsSemistable);
  CHECK(t2.strict);  // the type-B witness persists

  CHECK_THROWS_AS(stabilityTransfer(makeP1(), Rational(1)), Error);  // not below alpha_m

  Rng rng(6);
  for (int i = 0; i < 80; ++i) {
    DecomposablePair p = randomDecomposablePair(rng, 2, 4, 9);
    auto t = stabilityTransfer(p, Rational(-2));
    CHECK(t.quadPairSemistable == t.higgsSemistable);
  }
}
