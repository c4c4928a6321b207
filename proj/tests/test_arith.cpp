#include "doctest.h"
#include "paradim/arith.hpp"
#include "paradim/errors.hpp"

using namespace paradim;

TEST_CASE("split symbols") {
  CHECK(split_symbol(-1, 2) == 0);
  CHECK(split_symbol(-3, 2) == -1);
  CHECK(split_symbol(5, 5) == 0);
  CHECK(split_symbol(-1, 5) == 1);
  CHECK(split_symbol(-3, 3) == 0);
  for (long d : {-1L, -2L, -3L, 5L, 13L, -7L})
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
      for (long s : {2L, 3L}) CHECK(split_symbol(d, p) == split_symbol(d * s * s, p));
  CHECK_THROWS_AS(fundamental_discriminant(4), DSquare);
}

TEST_CASE("class numbers") {
  CHECK(class_number(5) == 2);
  CHECK(class_number(10) == 2);
  CHECK(class_number(15) == 2);
  CHECK(class_number(2) == 1);
  CHECK(class_number(163) == 1);
  for (long d : {1L, 2L, 3L, 7L, 11L, 19L, 43L, 67L, 163L}) CHECK(class_number(d) == 1);
  CHECK(class_number(23) == 3);
  CHECK_THROWS_AS(class_number(12), NotSquarefree);
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(bernoulli_b2_chi(5) == make_rational(4, 5));
  for (long p : primes_up_to(200))
    if (p > 3) CHECK(bernoulli_b2_chi(p) > 0);
  CHECK_THROWS_AS(bernoulli_b2_chi(2), UnsupportedPrime);
  CHECK_THROWS_AS(bernoulli_b2_chi(3), UnsupportedPrime);
}

TEST_CASE("a_p") {
  CHECK(a_p(5) == 1);
  CHECK(a_p(7) == 2);
  CHECK(a_p(11) == 4);
}

TEST_CASE("primes") {
  CHECK(primes_up_to(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(is_prime(607));
  CHECK_FALSE(is_prime(469));
}
