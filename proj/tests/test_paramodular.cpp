#include <set>

#include "doctest.h"
#include "paradim/arith.hpp"
#include "paradim/corpus.hpp"
#include "paradim/errors.hpp"
#include "paradim/paramodular.hpp"

using namespace paradim;

TEST_CASE("paramodular signed dimensions") {
  const auto d = [](long p, long k) { return dim_paramodular_signed(p, k, 0); };
  CHECK(d(83, 4).plus == 18);
  CHECK(d(83, 4).minus == 1);
  CHECK(d(47, 7).plus == 8);
  CHECK(d(47, 7).minus == 39);
  CHECK(d(13, 10).plus == 18);
  CHECK(d(13, 10).minus == 1);
  CHECK(d(277, 8).plus == 1761);
  CHECK(d(277, 8).minus == 768);
  CHECK(d(7, 10).plus == 7);
  CHECK(d(7, 10).minus == 0);
  const ParamodularDims odd = dim_paramodular_signed(11, 5, 3);
  CHECK(odd.plus == 0);
  CHECK(odd.minus == 0);
  CHECK_THROWS_AS(dim_paramodular_signed(11, 2, 0), BadWeight);
}

TEST_CASE("weight three") {
  CHECK(dim_weight3(163).plus == 0);
  CHECK(dim_weight3(167).plus == 1);
  CHECK(dim_weight3(227).plus == 2);
  for (long p : primes_up_to(400)) {
    const SignedPair w = dim_weight3(p);
    const ParamodularDims d = dim_paramodular_signed(p, 3, 0);
    REQUIRE(w.plus == d.plus);
    REQUIRE(w.minus == d.minus);
  }
  std::vector<long> expected = primes_up_to(163);
  for (long p : {179, 181, 191, 193, 199, 211, 229, 241}) expected.push_back(p);
  CHECK(search_weight3_zero(250) == expected);
  CHECK(search_weight3_zero(2) == std::vector<long>{2});
}

TEST_CASE("full spaces A") {
  CHECK(dim_A_signed(5, 0).plus == 1);
  CHECK(dim_A_signed(5, 0).minus == 0);
  const RationalGF a5{parse_numerator("1+t^6+2t^8"), {4, 6, 10, 12}};
  CHECK(dim_A_signed(5, 6).plus == series_coeffs(a5, 7)[6]);
  CHECK(dim_A_signed(37, 2).plus == 1);
  CHECK_THROWS_AS(dim_A_signed(101, 2), MissingJacobiData);
}

TEST_CASE("Hilbert series") {
  const HilbertSeries s7 = hilbert_series(7, Space::Splus, 80);
  CHECK(s7.gf.denom == std::vector<int>{4, 4, 6, 12});
  CHECK(s7.gf.numerator ==
        parse_numerator("t^4+2t^6+2t^8+2t^10+2t^12+t^13+t^14+t^15+t^17+2t^19+2t^21+2t^23+t^29"));
  const HilbertSeries m3 = hilbert_series(3, Space::M, 60);
  CHECK(m3.gf.numerator == parse_numerator("(1+t^5)*(1+t^15)"));
  CHECK(m3.gf.denom == std::vector<int>{3, 4, 6, 10});
  CHECK(is_palindromic(hilbert_series(13, Space::Aplus, 100).gf));
  CHECK_FALSE(is_palindromic(hilbert_series(11, Space::A, 100).gf));
  CHECK(registry_denominator(59, Space::Aplus) == std::vector<int>{4, 5, 6, 12});
  CHECK(registry_denominator(5, Space::A) == std::vector<int>{4, 5, 6, 12});
  CHECK(registry_denominator(5, Space::Aplus) == std::vector<int>{4, 6, 10, 12});
}

TEST_CASE("Atkin-Lehner bias") {
  CHECK(bias(5, 5) == 1);
  CHECK(bias(5, 6) == 1);
  CHECK(bias(2, 13) == 0);
  CHECK(bias(7, 4) == 1);
  using Pairs = std::vector<std::pair<long, long>>;
  CHECK(check_bias_region(3, 3) == Pairs{{2, 3}, {3, 3}});
  CHECK(check_bias_region(13, 4) == Pairs{{2, 3}, {2, 4}, {3, 3}, {3, 4}, {5, 3}, {5, 4}, {7, 3}, {11, 3}});
  const Pairs printed = {{2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 9}, {2, 13}, {3, 3},
                         {3, 4}, {3, 5}, {3, 7}, {5, 3}, {5, 4}, {7, 3}, {11, 3}};
  CHECK(check_bias_region(300, 100) == printed);
}

TEST_CASE("space names") {
  for (const char* n : {"S+", "S-", "A+", "A-", "A", "M+", "M-", "M"}) CHECK(space_name(parse_space(n)) == n);
  CHECK_THROWS_AS(parse_space("X"), std::invalid_argument);
}
