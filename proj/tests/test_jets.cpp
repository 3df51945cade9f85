#include <doctest.h>

#include <set>

#include "quadpair/jets.hpp"
#include "quadpair/modelgen.hpp"

using namespace quadpair;

namespace {

Jet jet(std::vector<Rational> coeffs) {
  std::vector<Scalar> c;
  for (auto& x : coeffs) c.push_back(Scalar(x));
  return Jet(std::move(c));
}

}  // namespace

TEST_CASE("restrict truncates expansions pointwise") {
  Divisor D;
  D.support["p"] = 2;
  std::map<PointId, std::vector<Scalar>> series{
      {"p", {Scalar(3), Scalar(5), Scalar(7)}}};
  JetOnDivisor jd = restrict(series, D);
  CHECK(jd.perPoint["p"] == jet({3, 5}));

  // A section vanishing to the full multiplicity restricts to zero.
  series["p"] = {Scalar(0), Scalar(0), Scalar(4)};
  CHECK(restrict(series, D).isZero());

  Divisor D2;
  D2.support["p"] = 2;
  D2.support["q"] = 1;
  std::map<PointId, std::vector<Scalar>> series2{{"p", {Scalar(1), Scalar(1)}},
                                                 {"q", {Scalar(4)}}};
  JetOnDivisor jd2 = restrict(series2, D2);
  CHECK(jd2.perPoint["p"] == jet({1, 1}));
  CHECK(jd2.perPoint["q"] == jet({4}));

  std::map<PointId, std::vector<Scalar>> tooShort{{"p", {Scalar(1)}}, {"q", {Scalar(4)}}};
  CHECK_THROWS_AS(restrict(tooShort, D2), Error);
}

TEST_CASE("jet square roots by Hensel lifting") {
  // 1 + z mod z^3: roots +-(1 + z/2 - z^2/8), verified by squaring.
  Jet c = jet({1, 1, 0});
  auto res = jetSqrt(c);
  REQUIRE(res.roots.size() == 2);
  Jet expected = jet({Rational(1), Rational(1, 2), Rational(-1, 8)});
  CHECK((res.roots[0] == expected || res.roots[1] == expected));
  for (const auto& q : res.roots) CHECK(jetMul(q, q) == c);

  // z mod z^2 has no square root.
  CHECK(jetSqrt(jet({0, 1})).roots.empty());

  // 1 mod z: the two scalar roots.
  auto scalarRoots = jetSqrt(jet({1}));
  REQUIRE(scalarRoots.roots.size() == 2);
  CHECK(scalarRoots.roots[0] == jet({1}));
  CHECK(scalarRoots.roots[1] == jet({-1}));

  // Even-order zero: z^2 (1 + z) mod z^5 has roots z (1 + ...) with the
  // unseen top coefficients canonically zero.
  Jet shifted = jet({0, 0, 1, 1, 0});
  auto sres = jetSqrt(shifted);
  REQUIRE(sres.roots.size() == 2);
  for (const auto& q : sres.roots) CHECK(jetMul(q, q) == shifted);

  // -1 has the Gaussian root i.
  auto gres = jetSqrt(jet({-1, 1}));
  REQUIRE(gres.roots.size() == 2);
  CHECK(gres.roots[0].coeffs[0] * gres.roots[0].coeffs[0] == Scalar(-1));

  // 2 is not a square in Q(i): explicit field-extension note.
  auto nres = jetSqrt(jet({2, 1}));
  CHECK(nres.roots.empty());
  CHECK(nres.fieldExtensionNeeded);

  // The zero jet has the single canonical root zero.
  auto zres = jetSqrt(Jet::zeros(3));
  REQUIRE(zres.roots.size() == 1);
  CHECK(zres.roots[0].isZero());
}

TEST_CASE("solve_q multiplies per-point solution counts") {
  // D = p + q with eta = (-1, -4): four sign choices.
  JetOnDivisor eta;
  eta.divisor.support["p"] = 1;
  eta.divisor.support["q"] = 1;
  eta.perPoint["p"] = jet({-1});
  eta.perPoint["q"] = jet({-4});
  auto res = solveQ(eta);
  REQUIRE(res.solutions.size() == 4);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& sol : res.solutions) {
    CHECK(jetMul(sol.perPoint.at("p"), sol.perPoint.at("p")) == jet({1}));
    CHECK(jetMul(sol.perPoint.at("q"), sol.perPoint.at("q")) == jet({4}));
    seen.insert({sol.perPoint.at("p").coeffs[0].str(), sol.perPoint.at("q").coeffs[0].str()});
  }
  CHECK(seen.size() == 4);

  // D = 2p with eta = -(1+z): two solutions.
  JetOnDivisor eta2;
  eta2.divisor.support["p"] = 2;
  eta2.perPoint["p"] = jet({-1, -1});
  CHECK(solveQ(eta2).solutions.size() == 2);

  // Non-unit point value -z with n = 2: unsolvable.
  JetOnDivisor eta3;
  eta3.divisor.support["p"] = 2;
  eta3.perPoint["p"] = jet({0, -1});
  CHECK(solveQ(eta3).solutions.empty());
}

TEST_CASE("theta restriction and the determinant identity") {
  LocalizedPair lp;
  lp.D.support["p"] = 2;
  lp.g11["p"] = {Scalar(0), Scalar(0), Scalar(1)};  // z^2, vanishes along D
  lp.g12["p"] = {Scalar(1), Scalar(1)};             // 1 + z
  lp.g22["p"] = {Scalar(5), Scalar(2)};

  JetOnDivisor theta = thetaGamma(lp);
  CHECK(theta.perPoint["p"] == jet({1, 1}));
  CHECK(detIdentityCheck(lp));

  // Vanishing theta detects the split (S0) case.
  LocalizedPair lp0 = lp;
  lp0.g12["p"] = {Scalar(0), Scalar(0), Scalar(3)};
  CHECK(thetaGamma(lp0).isZero());
  CHECK(detIdentityCheck(lp0));

  // Two points, theta non-zero overall with one zero component.
  LocalizedPair lp2;
  lp2.D.support["p"] = 1;
  lp2.D.support["q"] = 1;
  lp2.g11["p"] = {Scalar(0), Scalar(1)};
  lp2.g11["q"] = {Scalar(0), Scalar(2)};
  lp2.g12["p"] = {Scalar(2)};
  lp2.g12["q"] = {Scalar(0)};
  lp2.g22["p"] = {Scalar(1)};
  lp2.g22["q"] = {Scalar(1)};
  JetOnDivisor theta2 = thetaGamma(lp2);
  CHECK_FALSE(theta2.isZero());
  CHECK(theta2.perPoint["q"].isZero());

  // g11 not vanishing along D is a divisor mismatch.
  LocalizedPair bad = lp;
  bad.g11["p"] = {Scalar(1), Scalar(0), Scalar(0)};
  CHECK_THROWS_AS(thetaGamma(bad), Error);
}

TEST_CASE("determinant identity holds on random localized pairs") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    LocalizedPair lp;
    size_t pts = 1 + rng.below(3);
    for (size_t p = 0; p < pts; ++p) {
      PointId id = "p" + std::to_string(p);
      long long n = 1 + static_cast<long long>(rng.below(4));
      lp.D.support[id] = n;
      std::vector<Scalar> g11(n, Scalar(0));
      std::vector<Scalar> g12, g22;
      for (long long k = 0; k < n; ++k) {
        g12.push_back(Scalar(rng.smallRational()));
        g22.push_back(Scalar(rng.smallRational()));
      }
      lp.g11[id] = g11;
      lp.g12[id] = g12;
      lp.g22[id] = g22;
    }
    CHECK(detIdentityCheck(lp));
  }
}

TEST_CASE("jet ring axioms and restriction compatibility") {
  Rng rng(11);
  auto randomJet = [&](size_t n) {
    Jet j = Jet::zeros(n);
    for (auto& c : j.coeffs) c = Scalar(rng.smallRational());
    return j;
  };
  for (int i = 0; i < 60; ++i) {
    size_t n = 1 + rng.below(5);
    Jet a = randomJet(n), b = randomJet(n), c = randomJet(n);
    CHECK(jetMul(a, b) == jetMul(b, a));
    CHECK(jetMul(jetMul(a, b), c) == jetMul(a, jetMul(b, c)));
    CHECK(jetAdd(a, jetNeg(a)).isZero());
    CHECK(jetMul(a, jetAdd(b, c)) == jetAdd(jetMul(a, b), jetMul(a, c)));
    size_t m = 1 + rng.below(n);
    CHECK(jetTruncate(jetMul(a, b), m) == jetMul(jetTruncate(a, m), jetTruncate(b, m)));
  }
}

TEST_CASE("reconstruction block regularity is the solve_q equation") {
  JetOnDivisor eta;
  eta.divisor.support["p"] = 2;
  eta.perPoint["p"] = jet({-1, -1});
  auto res = solveQ(eta);
  REQUIRE(res.solutions.size() == 2);
  for (const auto& q : res.solutions) CHECK(reconstructionBlockRegular(q, eta));

  // A non-solution q leaves a pole in the reconstructed diagonal block.
  JetOnDivisor bad;
  bad.divisor = eta.divisor;
  bad.perPoint["p"] = jet({2, 0});
  CHECK_FALSE(reconstructionBlockRegular(bad, eta));

  JetOnDivisor otherDivisor;
  otherDivisor.divisor.support["q"] = 2;
  otherDivisor.perPoint["q"] = jet({1, 0});
  CHECK_THROWS_AS(reconstructionBlockRegular(otherDivisor, eta), Error);
}

TEST_CASE("dim C and dim Q formulas") {
  CHECK(dimC(2, 4, 9) == std::make_pair(9LL, 8LL));
  CHECK(dimC(3, 0, 5) == std::make_pair(8LL, 7LL));
  CHECK_THROWS_AS(dimC(2, 8, 9), Error);
  // Free scaling action: dim Q = dim C - 1 identically.
  for (int g = 2; g <= 4; ++g)
    for (long long dU = 1; dU <= 12; ++dU)
      for (long long d = 0; d < dU; ++d) {
        if (dU - d <= g - 1) continue;
        auto [dc, dq] = dimC(g, d, dU);
        CHECK(dq == dc - 1);
      }
}
