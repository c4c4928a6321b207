#include "doctest.h"
#include "paradim/errors.hpp"
#include "paradim/siegel1.hpp"

using namespace paradim;

TEST_CASE("level one Siegel cusp forms") {
  CHECK(dim_cusp_sp4(10, 0) == 1);
  CHECK(dim_cusp_sp4(35, 0) == 1);
  CHECK(dim_cusp_sp4(13, 0) == 0);
  CHECK(dim_cusp_sp4(14, 2) == 1);
  for (long k = 3; k <= 9; ++k) CHECK(dim_cusp_sp4(k, 0) == 0);
  for (long j : {0L, 2L, 4L})
    for (long k = 0; k <= 120; ++k) REQUIRE(dim_cusp_sp4(k, j) >= 0);
}

TEST_CASE("registry contract") {
  // state is process wide, so the contract cases run in sequence here
  CHECK_THROWS_AS(dim_cusp_sp4(5, 6), UnsupportedJ);
  register_level1_table(6, {});
  CHECK_THROWS_AS(dim_cusp_sp4(8, 6), MissingData);
  CHECK_THROWS_AS(register_level1_table(6, {{8, 1}}), std::logic_error);
  register_level1_table(8, {{8, 3}});
  CHECK(dim_cusp_sp4(8, 8) == 3);
  register_level1_csv("j,k,dim\n10,12,2\n");
  CHECK(dim_cusp_sp4(12, 10) == 2);
  CHECK_THROWS_AS(register_level1_table(3, {}), UnsupportedJ);
}
