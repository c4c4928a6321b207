#include "doctest.h"
#include "paradim/arith.hpp"
#include "paradim/compact.hpp"
#include "paradim/corpus.hpp"
#include "paradim/errors.hpp"

using namespace paradim;

TEST_CASE("total dimension and trace examples") {
  CHECK(dim_M_total(7, 2, 2) == 1);
  // weight 8 corresponds to (f1, f2) = (5, 5)
  CHECK(dim_M_total(47, 5, 5) == 80);
  CHECK(trace_R(7, 2, 2) == 1);
  CHECK(trace_R(43, 5, 5) == -56);
  CHECK(trace_R(5, 0, 0) == 1);
}

TEST_CASE("signed dimensions") {
  const CompactDims d = dim_M_signed(7, 2, 2);
  CHECK(d.plus == 1);
  CHECK(d.minus == 0);
  const CompactDims e = dim_M_signed(7, 7, 7);
  CHECK(e.plus == 0);
  CHECK(e.minus == 6);
}

TEST_CASE("p = 2 sweeps match the printed series") {
  const RationalGF total{parse_numerator("(1+t^5)*(1+t^20)"), {4, 6, 8, 10}};
  const RationalGF plus{parse_numerator("1+t^25"), {4, 6, 8, 10}};
  const auto st = series_coeffs(total, 61), sp = series_coeffs(plus, 61);
  for (long f = 0; f <= 60; ++f) {
    const CompactDims d = dim_M_signed(2, f, f);
    REQUIRE(d.total == st[f]);
    REQUIRE(d.plus == sp[f]);
  }
}

TEST_CASE("class number and type number") {
  for (long p : {2L, 3L, 5L, 11L}) {
    const ClassType ct = class_and_type(p);
    CHECK(ct.H == 1);
    CHECK(ct.T == 1);
  }
  for (long p : primes_up_to(1000)) {
    const ClassType ct = class_and_type(p);
    REQUIRE(2 * ct.T - ct.H == trace_R(p, 0, 0));
    REQUIRE(ct.T <= ct.H);
    REQUIRE(ct.H <= 2 * ct.T);
  }
}

TEST_CASE("signed dimensions are integral and nonnegative") {
  for (long p : primes_up_to(300))
    for (long f1 = 0; f1 <= 20; ++f1)
      for (long f2 = f1 % 2; f2 <= f1; f2 += 2) {
        const CompactDims d = dim_M_signed(p, f1, f2);
        REQUIRE(d.plus >= 0);
        REQUIRE(d.minus >= 0);
        REQUIRE(d.plus + d.minus == d.total);
        REQUIRE(d.plus - d.minus == d.trace);
      }
}

TEST_CASE("invalid Young parameters") {
  CHECK_THROWS_AS(dim_M_total(7, 1, 2), BadYoung);
  CHECK_THROWS_AS(dim_M_total(7, 3, 2), BadYoung);
}
