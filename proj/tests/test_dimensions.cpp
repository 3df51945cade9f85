#include <doctest.h>

#include "quadpair/dimensions.hpp"

using namespace quadpair;

TEST_CASE("expected dimension equals the Euler-characteristic difference") {
  ExpectedDim e = expectedDim(2, 4, 9);
  CHECK(e.dim == 16);
  CHECK(e.chiS2 == 3 * 5 + 3 * (-1));
  CHECK(e.chiEnd == 4 * (-1));
  CHECK(e.dim == e.chiS2 - e.chiEnd);

  CHECK(expectedDim(2, 9, 9).dim == 1);  // g - 1 at d = dU
  CHECK(expectedDim(3, 0, 5).dim == 17);

  for (int g = 2; g <= 4; ++g)
    for (long long dU = 0; dU <= 12; ++dU)
      for (long long d = -3; d <= dU; ++d) {
        ExpectedDim x = expectedDim(g, d, dU);
        CHECK(x.dim == x.chiS2 - x.chiEnd);
        CHECK(x.dim == 3 * (dU - d) + g - 1);
      }
}

TEST_CASE("flip dimension report at g=2, d=4, dU=9") {
  DimensionReport r = flipDimensions(2, 4, 9, Rational(1));
  CHECK(r.expectedDimN == 16);
  CHECK(r.dimSplus == 7);
  CHECK(r.dimSminus0 == 10);
  REQUIRE(r.dimSminus1);
  CHECK(*r.dimSminus1 == 13);
  REQUIRE(r.dimQ);
  CHECK(*r.dimQ == 8);
  CHECK(r.splusFibreDim == 2);
  REQUIRE(r.dimRank1Base);
  CHECK(*r.dimRank1Base == 5);                      // 2ak - 2d + dU + g
  CHECK(*r.dimSminus1 == *r.dimRank1Base + *r.dimQ);  // additivity oracle
  CHECK_FALSE(r.isAlphaMin);

  CHECK(r.dimPX == 10);
  CHECK(r.dimHitchinFibre == 6);
  CHECK(r.dimPX + r.dimHitchinFibre == r.expectedDimN);

  DimensionReport rm = flipDimensions(2, 4, 9, Rational(0));
  CHECK(*rm.dimSminus1 == 11);
  CHECK(rm.dimSminus0 == 10);
  CHECK(rm.isAlphaMin);
  CHECK_FALSE(rm.sminus1Empty);  // dU = 9 is odd

  CHECK_THROWS_AS(flipDimensions(2, 4, 9, Rational(3, 2)), Error);
  CHECK_THROWS_AS(flipDimensions(2, 4, 9, Rational(2)), Error);  // the max wall

  // Even dU at the alpha_m wall: S^1 is empty and the dimensions coincide.
  DimensionReport re = flipDimensions(2, 4, 10, Rational(-1));
  CHECK(re.isAlphaMin);
  CHECK(re.sminus1Empty);
  CHECK(*re.dimSminus1 == re.dimSminus0);
}

TEST_CASE("codimension checks require the main-theorem hypothesis") {
  CodimCheck c = codimCheck(2, 4, 9, Rational(1));
  CHECK(c.codimSplus == 9);
  CHECK(c.splusPositive);
  CHECK(c.codimSminusLB == 3);
  CHECK(c.sminusPositive);

  c = codimCheck(2, 0, 9, Rational(-4));
  CHECK(c.codimSminusLB == 9);
  CHECK(c.sminusPositive);

  CHECK_THROWS_AS(codimCheck(2, 8, 9, Rational(4)), Error);  // dU - d = 1 <= g - 1
}

TEST_CASE("codimension positivity over the full dashboard range") {
  for (int g = 2; g <= 4; ++g)
    for (long long dU = 1; dU <= 12; ++dU)
      for (long long d = 0; d < dU; ++d) {
        if (dU - d <= g - 1) continue;
        for (const auto& ak : criticalValues(d, dU)) {
          if (ak == Rational(d, 2)) continue;
          DimensionReport r = flipDimensions(g, d, dU, ak);
          CHECK(r.dimSplus < r.expectedDimN);
          CHECK(r.dimSminus0 < r.expectedDimN);
          CHECK(*r.dimSminus1 < r.expectedDimN);
          CHECK(*r.dimSminus1 >= r.dimSminus0);
          CHECK((*r.dimSminus1 == r.dimSminus0) == (r.isAlphaMin && dU % 2 == 0));
          CodimCheck c = codimCheck(g, d, dU, ak);
          CHECK(c.codimSplus > g - 1);
          CHECK(c.codimSminusLB > g - 1);
        }
      }
}

TEST_CASE("flip-locus dimensions decompose through the rank-1 moduli") {
  // dim S+ = dim N(1, d-ak) + dim Jac + fibre; dim S-0 = dim N(1, d-ak) +
  // dim N(1, ak); base of S-1 = dim N(1, d-ak) + dim Jac.
  for (int g = 2; g <= 4; ++g)
    for (long long dU = 1; dU <= 12; ++dU)
      for (long long d = 0; d < dU; ++d) {
        if (dU - d <= g - 1) continue;
        CurveModel curve(g);
        PicClass U = picZero(g);
        U.degree = dU;
        for (const auto& ak : criticalValues(d, dU)) {
          if (ak == Rational(d, 2)) continue;
          long long akInt = ak.floor();
          DimensionReport r = flipDimensions(g, d, dU, ak);
          Rank1Verdict quot = rank1Verdict(d - akInt, Rational(d - akInt), U, curve);
          if (quot.kind != Rank1Verdict::Kind::Cover) continue;  // alpha_m wall, even dU
          CHECK(r.dimSplus == quot.dimension + g + r.splusFibreDim);
          CHECK(*r.dimRank1Base == quot.dimension + g);
          Rank1Verdict sub = rank1Verdict(akInt, Rational(akInt), U, curve);
          if (sub.kind == Rank1Verdict::Kind::Cover)
            CHECK(r.dimSminus0 == quot.dimension + sub.dimension);
        }
      }
}

TEST_CASE("connectedness verdict engine") {
  auto v = connectedness(2, 4, 9, Rational(2));
  CHECK(v.kind == ConnectednessVerdict::Kind::ConnectedByCodimension);
  CHECK(v.componentCount == 1);

  v = connectedness(2, 7, 9, Rational(-10));
  CHECK(v.kind == ConnectednessVerdict::Kind::ConnectedExtremal);  // alpha < alpha_m = 3
  CHECK(v.componentCount == 1);

  v = connectedness(2, 7, 9, Rational(3));
  CHECK(v.kind == ConnectednessVerdict::Kind::ConnectedByCodimension);  // dU - d = 2 > 1

  v = connectedness(3, 7, 9, Rational(3));
  CHECK(v.kind == ConnectednessVerdict::Kind::HypothesisFails);
  CHECK_FALSE(v.componentCount);

  v = connectedness(2, 10, 9, Rational(0));
  CHECK(v.kind == ConnectednessVerdict::Kind::Empty);
  CHECK(v.emptyReason == RegionTag::EmptyDegreeTooBig);

  v = connectedness(2, 4, 9, Rational(3));
  CHECK(v.kind == ConnectednessVerdict::Kind::Empty);
  CHECK(v.emptyReason == RegionTag::EmptyAlphaTooBig);

  CHECK(connectedness(2, 9, 9, Rational(0)).kind ==
        ConnectednessVerdict::Kind::SpecialDEqualsDU);
  CHECK(connectedness(1, 4, 9, Rational(0)).modelOnly);
}

TEST_CASE("hitchin dimensions sum to the expected dimension") {
  auto [px, fibre] = hitchinDims(2, 4, 9);
  CHECK(px == 10);
  CHECK(fibre == 6);
  CHECK(px + fibre == expectedDim(2, 4, 9).dim);

  auto [px2, fibre2] = hitchinDims(2, 8, 9);
  CHECK(px2 == 2);
  CHECK(fibre2 == 2);

  CHECK_THROWS_AS(hitchinDims(2, 9, 9), Error);

  for (int g = 2; g <= 4; ++g)
    for (long long dU = 1; dU <= 12; ++dU)
      for (long long d = 0; d < dU; ++d) {
        auto [a, b] = hitchinDims(g, d, dU);
        CHECK(a + b == expectedDim(g, d, dU).dim);
      }
}

TEST_CASE("generic d/2-wall fibre dimension") {
  DhalfFibre f = dhalfFibreChi(2, 4, 9);
  CHECK(f.chi == 12);
  CHECK(f.genericFibreDim == 11);
  CHECK(f.h1VanishesGenerically);

  CHECK_THROWS_AS(dhalfFibreChi(2, 8, 9), Error);

  f = dhalfFibreChi(2, 0, 3);
  CHECK(f.chi == 6);
  CHECK(f.h1VanishesGenerically);
}
