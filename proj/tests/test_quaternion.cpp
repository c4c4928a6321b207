#include <algorithm>

#include "doctest.h"
#include "paradim/compact.hpp"
#include "paradim/errors.hpp"
#include "paradim/quaternion.hpp"

using namespace paradim;

namespace {
IntPrincipalPoly P(long c3, long c2, long c1, long c0) { return {c3, c2, c1, c0}; }
long count(const std::map<IntPrincipalPoly, long>& t, const IntPrincipalPoly& f) {
  auto it = t.find(f);
  return it == t.end() ? 0 : it->second;
}
}  // namespace

TEST_CASE("quaternion arithmetic") {
  for (long p : {2L, 3L}) {
    const QuatAlgebra alg = order_algebra(p);
    const Quat i(alg, 0, 1), j(alg, 0, 0, 1), k(alg, 0, 0, 0, 1);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == Quat::scalar(alg, alg.A));
    const Quat q(alg, 1, 2, -1, 3), r(alg, make_rational(1, 2), 0, 5, -2);
    CHECK((q * r).norm() == q.norm() * r.norm());
    CHECK(q * q.inverse() == Quat::scalar(alg, 1));
  }
  CHECK(order_units(2).size() == 24);
  CHECK(order_units(3).size() == 12);
  CHECK(order_elements_of_norm(2, 2, 3).size() == 24);
  CHECK_THROWS_AS(order_algebra(5), UnsupportedPrime);
}

TEST_CASE("principal polynomial examples") {
  const QuatAlgebra alg = order_algebra(2);
  const Quat one(alg, 1), zero(alg, 0), r(alg, 0, 1, 0, -1);
  const QuatMat2 id{one, zero, zero, one};
  CHECK(principal_poly_of(id) == P(-4, 6, -4, 1));
  CHECK(principal_poly_entries(id) == P(-4, 6, -4, 1));
  CHECK(principal_poly_of({r, zero, zero, r}) == P(0, 4, 0, 4));
  CHECK(principal_poly_of({zero, r, r, zero}) == P(0, 4, 0, 4));
  CHECK_THROWS_AS(similitude_norm({one, one, zero, one}), NotSimilitude);
}

TEST_CASE("Gamma_1 by direct search") {
  CHECK(unit_group_gamma1(2).size() == 1920);
  CHECK(unit_group_gamma1(3).size() == 720);
  for (long p : {2L, 3L})
    for (const auto& g : unit_group_gamma1(p)) REQUIRE(similitude_norm(g) == 1);
}

TEST_CASE("p = 2 enumeration") {
  const PiGammaEnumeration& e = enumerate_pi_gamma(2);
  CHECK(e.order == 1920);
  const auto& t = e.total;
  CHECK(count(t, P(0, -4, 0, 4)) == 40);
  CHECK(count(t, P(0, 4, 0, 4)) == 120);
  CHECK(count(t, P(0, 2, 0, 4)) == 320);
  CHECK(count(t, P(0, 0, 0, 4)) == 600);
  CHECK(count(t, P(4, 8, 8, 4)) + count(t, P(-4, 8, -8, 4)) == 40);
  CHECK(count(t, P(2, 4, 4, 4)) + count(t, P(-2, 4, -4, 4)) == 480);
  CHECK(count(t, P(2, 2, 4, 4)) + count(t, P(-2, 2, -4, 4)) == 320);
  const auto& f4 = e.families[3].tally;
  CHECK(count(f4, P(0, 0, 0, 4)) == 144);
  CHECK(count(f4, P(0, 4, 0, 4)) == 24);
  CHECK(count(f4, P(0, -4, 0, 4)) == 24);
  CHECK(e.printed_in_coset == e.printed_sizes);
}

TEST_CASE("p = 3 enumeration") {
  const PiGammaEnumeration& e = enumerate_pi_gamma(3);
  CHECK(e.order == 720);
  const auto& t = e.total;
  CHECK(count(t, P(0, -6, 0, 9)) == 30);
  CHECK(count(t, P(0, 6, 0, 9)) == 30);
  CHECK(count(t, P(3, 6, 9, 9)) == 120);
  CHECK(count(t, P(-3, 6, -9, 9)) == 120);
  CHECK(count(t, P(0, 0, 0, 9)) == 180);
  CHECK(count(t, P(0, 3, 0, 9)) == 240);
  std::vector<long> sizes;
  for (const auto& f : e.families) sizes.push_back(static_cast<long>(f.elements.size()));
  CHECK(sizes == std::vector<long>{36, 36, 324, 324});
  CHECK(e.printed_in_coset.at(0) == 36);
}

TEST_CASE("every enumerated element is consistent") {
  for (long p : {2L, 3L}) {
    const auto feasible = feasible_ab(p);
    for (const auto& fam : enumerate_pi_gamma(p).families)
      for (const auto& g : fam.elements) {
        REQUIRE(similitude_norm(g) == p);
        const IntPrincipalPoly f = principal_poly_of(g);
        REQUIRE(f == principal_poly_entries(g));
        REQUIRE(f.c0 == p * p);
        REQUIRE(f.c1 == p * f.c3);
        REQUIRE(std::find(feasible.begin(), feasible.end(), f.ab(p)) != feasible.end());
      }
  }
}

TEST_CASE("enumerated trace equals the closed formula") {
  CHECK(verify_trace_p23(2, 0, 0) == 1);
  CHECK(verify_trace_p23(3, 0, 0) == 1);
  for (long p : {2L, 3L})
    for (long f = 0; f <= 12; ++f) {
      REQUIRE(verify_trace_p23(p, f, f) == trace_R(p, f, f));
      REQUIRE(verify_trace_p23(p, f + 2, f) == trace_R(p, f + 2, f));
    }
}

TEST_CASE("feasible (a, b)") {
  using V = std::vector<std::pair<long, long>>;
  CHECK(feasible_ab(7) == V{{0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 2}});
  const V f5 = feasible_ab(5);
  CHECK(std::count(f5.begin(), f5.end(), std::pair<long, long>{1, 3}) == 1);
  CHECK(std::count(f5.begin(), f5.end(), std::pair<long, long>{-1, 3}) == 1);
  const V f2 = feasible_ab(2);
  CHECK(std::count(f2.begin(), f2.end(), std::pair<long, long>{2, 4}) == 1);
  CHECK(std::count(f2.begin(), f2.end(), std::pair<long, long>{-2, 4}) == 1);
}

TEST_CASE("character index") {
  CHECK(character_index(P(0, -6, 0, 9), 3) == 2);
  CHECK(character_index(P(0, 3, 0, 9), 3) == 9);
  CHECK(character_index(P(0, 0, 0, 4), 2) == 11);
  CHECK(character_index(P(3, 6, 9, 9), 3) == 17);
}
