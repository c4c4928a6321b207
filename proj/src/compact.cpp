#include "paradim/compact.hpp"

#include <stdexcept>
#include <string>

#include "paradim/arith.hpp"
#include "paradim/characters.hpp"

namespace paradim {

namespace {

void check_args(long p, long f1, long f2) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  WeightParams::from_young(f1, f2);
}

std::string where(long p, long f1, long f2) {
  return "p=" + std::to_string(p) + ", (f1,f2)=(" + std::to_string(f1) + "," + std::to_string(f2) + ")";
}

}  // namespace

Rational dim_M_total_exact(long p, long f1, long f2) {
  check_args(p, f1, f2);
  const WeightParams w = WeightParams::from_young(f1, f2);
  auto c = [&w](int i) { return Rational(chi(i, w)); };
  const long s_m1 = split_symbol(-1, p), s_m3 = split_symbol(-3, p);
  const long s_2 = split_symbol(2, p), s_3 = split_symbol(3, p), s_5 = split_symbol(5, p);
  const long d2 = delta(p, 2), d3 = delta(p, 3);
  Rational r = make_rational(p * p - 1, 2880) * c(1);
  r += make_rational(d2, 192) * c(2);
  r += make_rational(d2, 16) * c(3);
  r += make_rational(d3, 9) * c(4);
  r += (make_rational(p - s_m1, 24) + make_rational(p * s_m1 - 1, 96)) * c(6);
  r += (make_rational(p - s_m3, 24) + make_rational(p * s_m3 - 1, 72)) * c(7);
  r += make_rational(d2, 6) * c(9);
  r += c(10) / 5 * (1 - s_5);
  r += c(11) / 8 * (1 - s_2);
  r += c(12) / 24 * (1 - s_3 + s_m1 - s_m3);
  return r;
}

Integer dim_M_total(long p, long f1, long f2) {
  return to_integer(dim_M_total_exact(p, f1, f2), "dim M at " + where(p, f1, f2));
}

Rational trace_R_exact(long p, long f1, long f2) {
  check_args(p, f1, f2);
  const WeightParams w = WeightParams::from_young(f1, f2);
  auto c = [&w](int i) { return Rational(chi(i, w)); };
  if (p == 2)
    return make_rational(1, 48) * c(2) + make_rational(1, 16) * c(6) + make_rational(1, 6) * c(9) +
           make_rational(5, 16) * c(11) + make_rational(1, 48) * c(14) + make_rational(1, 6) * c(15) +
           make_rational(1, 4) * c(16);
  if (p == 3)
    return make_rational(1, 24) * c(2) + make_rational(1, 24) * c(6) + make_rational(1, 3) * c(9) +
           make_rational(1, 4) * c(11) + make_rational(1, 3) * c(17);
  const long s2 = split_symbol(2, p);
  const Rational b2 = bernoulli_b2_chi(p);
  const long h1 = class_number(p), h2 = class_number(2 * p), h3 = class_number(3 * p);
  Rational r;
  if (mod(p, 4) == 1) {
    r = c(2) / 96 * (9 - 2 * s2) * b2;
    r += make_rational(h1, 16) * c(6);
    r += make_rational(h2, 8) * c(11);
    r += make_rational(h3, 12) * (3 + s2) * c(9);
    r += make_rational(delta(p, 5), 5) * c(13);
  } else {
    r = c(2) / 96 * b2;
    r += make_rational(h1, 16) * (1 - s2) * c(6);
    r += make_rational(h2, 8) * c(11);
    r += make_rational(h3, 12) * c(9);
  }
  return r;
}

Integer trace_R(long p, long f1, long f2) {
  return to_integer(trace_R_exact(p, f1, f2), "Tr R at " + where(p, f1, f2));
}

CompactDims dim_M_signed(long p, long f1, long f2) {
  CompactDims d{p, f1, f2, dim_M_total(p, f1, f2), trace_R(p, f1, f2), 0, 0};
  const Integer sum = d.total + d.trace;
  if (mpz_odd_p(sum.get_mpz_t()))
    throw ParityFailure("total " + d.total.get_str() + " and trace " + d.trace.get_str() + " at " +
                        where(p, f1, f2));
  d.plus = sum / 2;
  d.minus = (d.total - d.trace) / 2;
  if (d.plus < 0 || d.minus < 0) throw NegativeDim("signed dimension at " + where(p, f1, f2));
  return d;
}

ClassType class_and_type(long p) {
  const CompactDims d = dim_M_signed(p, 0, 0);
  ClassType ct{d.total, d.plus};
  if (!(ct.T <= ct.H && ct.H <= 2 * ct.T))
    throw std::logic_error("T <= H <= 2T fails at p=" + std::to_string(p));
  return ct;
}

}  // namespace paradim
