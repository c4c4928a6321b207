#include <random>

#include "doctest.h"
#include "paradim/corpus.hpp"
#include "paradim/errors.hpp"
#include "paradim/exactmath.hpp"

using namespace paradim;

namespace {
IntPoly poly(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPoly(v);
}
}  // namespace

TEST_CASE("rationals stay normalized") {
  const Rational x = make_rational(6, -4);
  CHECK(x.get_num() == -3);
  CHECK(x.get_den() == 2);
  CHECK(is_integer(make_rational(10, 5)));
  CHECK_THROWS_AS(to_integer(make_rational(1, 2), "test"), NonIntegral);
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt a(3, 2, 5);
  CHECK(a * a.conj() == QuadExt(3 * 3 - 5 * 2 * 2));
  CHECK(a.norm() == -11);
  CHECK(a * a.inverse() == QuadExt(1));
  CHECK_THROWS_AS(QuadExt(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(QuadExt(1, 1, 2) + QuadExt(1, 1, 3), MixedRadicand);
  CHECK(QuadExt(1, 1, 2) + QuadExt(5) == QuadExt(6, 1, 2));
}

TEST_CASE("polynomial degree and trimming") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(IntPoly().degree() == -1);
  CHECK((poly({1, 1}) * poly({1, -1})) == poly({1, 0, -1}));
}

TEST_CASE("series_coeffs examples") {
  CHECK(series_coeffs(RationalGF{poly({1}), {1}}, 4) == std::vector<Integer>{1, 1, 1, 1});
  const RationalGF sp4{parse_numerator("t^10+t^12-t^22+t^35"), {4, 6, 10, 12}};
  CHECK(series_coeffs(sp4, 11)[10] == 1);
  const RationalGF m2{parse_numerator("(1+t^5)*(1+t^20)"), {4, 6, 8, 10}};
  CHECK(series_coeffs(m2, 6)[5] == 1);
}

TEST_CASE("fit_numerator examples") {
  CHECK(fit_numerator(std::vector<Integer>(10, 1), {1}, 5) == poly({1}));
  CHECK(fit_numerator(std::vector<Integer>(10, 1), {2}, 3) == poly({1, 1}));
  std::vector<Integer> squares;
  for (long n = 0; n < 12; ++n) squares.push_back(n * n);
  CHECK_THROWS_AS(fit_numerator(squares, {2}, 3), NonPolynomial);
  CHECK_THROWS_AS(fit_numerator(squares, {2}, 20), std::invalid_argument);
}

TEST_CASE("fit_numerator inverts series_coeffs") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 12);
  const std::vector<std::vector<int>> denoms = {{1}, {2, 3}, {4, 6, 10, 12}, {3, 4, 6, 10}};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    c.back() = 1;
    const IntPoly q = poly(c);
    const auto& d = denoms[trial % denoms.size()];
    long sum = 0;
    for (int a : d) sum += a;
    const auto seq = series_coeffs(RationalGF{q, d}, q.degree() + sum + 2);
    CHECK(fit_numerator(seq, d, q.degree()) == q);
  }
}

TEST_CASE("series_coeffs is additive") {
  const RationalGF a{poly({1, 2, 0, 1}), {2, 3}}, b{poly({0, -1, 4}), {2, 3}};
  const auto sa = series_coeffs(a, 30), sb = series_coeffs(b, 30), sab = series_coeffs({a.numerator + b.numerator, {2, 3}}, 30);
  for (int i = 0; i < 30; ++i) CHECK(sa[i] + sb[i] == sab[i]);
}

TEST_CASE("palindromic numerators") {
  CHECK(is_palindromic(RationalGF{poly({1}), {4, 6}}));
  CHECK(is_palindromic(RationalGF{parse_numerator("1+t^2+t^4"), {4}}));
  CHECK_FALSE(is_palindromic(RationalGF{parse_numerator("1+2t^2+t^3"), {4}}));
}

TEST_CASE("numerator parser") {
  CHECK(parse_numerator("t^5*(1+t^15)") == parse_numerator("t^5+t^20"));
  CHECK(parse_numerator("2t^4-t^5") == poly({0, 0, 0, 0, 2, -1}));
  CHECK_THROWS_AS(parse_numerator("1+"), DataError);
}
