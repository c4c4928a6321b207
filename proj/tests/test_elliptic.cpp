#include "doctest.h"
#include "paradim/arith.hpp"
#include "paradim/elliptic.hpp"
#include "paradim/errors.hpp"

using namespace paradim;

TEST_CASE("level one dimensions") {
  CHECK(dim_cusp_level1(12) == 1);
  CHECK(dim_cusp_level1(2) == 0);
  CHECK(dim_cusp_level1(18) == 1);
  CHECK(dim_cusp_level1(24) == 2);
  CHECK(dim_cusp_level1(7) == 0);
  CHECK(dim_modular_level1(0) == 1);
  CHECK(dim_modular_level1(4) == 1);
  CHECK(dim_modular_level1(2) == 0);
}

TEST_CASE("dim S_{2k-2} matches t^7/((1-t^2)(1-t^3))") {
  // coefficients of t^7/((1-t^2)(1-t^3)) for k = 0..40
  std::vector<long> c(41, 0);
  for (long a = 0; 7 + 2 * a <= 40; ++a)
    for (long b = 0; 7 + 2 * a + 3 * b <= 40; ++b) ++c[7 + 2 * a + 3 * b];
  for (long k = 1; k <= 40; ++k) CHECK(dim_cusp_level1(2 * k - 2) == c[k]);
}

TEST_CASE("Gamma_0(p) newforms") {
  CHECK(dim_new_gamma0(5, 2) == 0);
  CHECK(dim_new_gamma0(11, 2) == 1);
  CHECK(dim_new_gamma0(37, 2) == 2);
  CHECK(dim_new_gamma0_signed(23, 2, ALSign::minus) == 2);
  CHECK(dim_new_gamma0_signed(43, 2, ALSign::plus) == 1);
  CHECK(dim_new_gamma0_signed(37, 2, ALSign::plus) == 1);
  CHECK(dim_new_gamma0_signed(37, 2, ALSign::minus) == 1);
  CHECK(dim_new_gamma0(2, 8) == 1);
  CHECK(dim_new_gamma0_difference(2, 8) == 1);
  CHECK(dim_new_gamma0_signed(2, 8, ALSign::plus) == 1);
  CHECK(dim_new_gamma0_signed(2, 8, ALSign::minus) == 0);
}

TEST_CASE("signed newform dimensions sum to the total") {
  for (long p : primes_up_to(200))
    for (long k = 2; k <= 40; k += 2) {
      const long plus = dim_new_gamma0_signed(p, k, ALSign::plus);
      const long minus = dim_new_gamma0_signed(p, k, ALSign::minus);
      REQUIRE(plus >= 0);
      REQUIRE(minus >= 0);
      REQUIRE(plus + minus == dim_new_gamma0(p, k));
    }
}

TEST_CASE("odd weight is rejected") {
  CHECK_THROWS_AS(dim_new_gamma0(7, 3), OddWeight);
  CHECK_THROWS_AS(dim_new_gamma0_signed(7, 5, ALSign::plus), OddWeight);
}
