#include "doctest.h"
#include "paradim/characters.hpp"
#include "paradim/errors.hpp"

using namespace paradim;

TEST_CASE("characters at the trivial weight") {
  for (int i = 1; i <= kNumPrincipal; ++i) {
    CHECK(chi_closed(i, WeightParams(3, 0)) == 1);
    CHECK(chi_series(i, 0, 0) == 1);
  }
}

TEST_CASE("closed form examples") {
  CHECK(chi_closed(11, WeightParams(4, 0)) == -1);
  CHECK(chi_closed(9, WeightParams(5, 0)) == 0);
  CHECK(chi_closed(13, WeightParams(3, 0)) == 1);
  CHECK(chi_series(2, 1, 1) == -3);
  CHECK(chi_closed(14, WeightParams(5, 0)) == chi_series(14, 2, 2));
  CHECK(chi_closed(6, WeightParams(6, 0)) == chi_series(6, 3, 3));
}

TEST_CASE("closed forms agree with the series route") {
  for (int i = 1; i <= kNumPrincipal; ++i)
    for (long k = 3; k <= 24; ++k)
      for (long j = 0; j <= 24; j += 2) {
        const WeightParams w(k, j);
        REQUIRE(chi_closed(i, w) == chi_series(i, w.f1(), w.f2()));
        REQUIRE(chi_series_poly(principal_poly(i).negate_variable(), w.f1(), w.f2()) == chi_closed(i, w));
        if (has_young_closed_form(i)) REQUIRE(chi_closed_young(i, w.f1(), w.f2()) == chi_closed(i, w));
      }
}

TEST_CASE("principal polynomials are monic reciprocal quartics") {
  for (int i = 1; i <= kNumPrincipal; ++i) {
    const QPoly& f = principal_poly(i);
    CHECK(f.degree() == 4);
    CHECK(f.coeff(4) == QuadExt(1));
    CHECK(f.reversed() == f);
  }
}

TEST_CASE("chi_1 is the representation dimension") {
  for (long k = 3; k <= 12; ++k)
    for (long j = 0; j <= 12; j += 2) {
      const long f1 = k + j - 3, f2 = k - 3;
      CHECK(chi_closed(1, WeightParams(k, j)) == (f1 - f2 + 1) * (f2 + 1) * (f1 + 2) * (f1 + f2 + 3) / 6);
    }
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(WeightParams(2, 0), BadWeight);
  CHECK_THROWS_AS(WeightParams(4, 1), BadWeight);
  CHECK_THROWS_AS(WeightParams::from_young(1, 2), BadYoung);
  CHECK_THROWS_AS(WeightParams::from_young(3, 2), BadYoung);
  CHECK(WeightParams::from_young(5, 1).j == 4);
}
