#include "paradim/elliptic.hpp"

#include <stdexcept>
#include <string>

#include "paradim/arith.hpp"

namespace paradim {

namespace {

long sgn_pow(long n) { return mod(n, 2) == 0 ? 1 : -1; }

void check_even_weight(long p, long k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k < 2 || k % 2 != 0) throw OddWeight("weight " + std::to_string(k) + " must be even and >= 2");
}

}  // namespace

long dim_cusp_level1(long k) {
  if (k < 0) throw std::invalid_argument("negative weight");
  if (k == 0 || k % 2 != 0) return 0;
  const long third[3] = {1, 0, -1};
  Rational r = make_rational(k - 1, 12) + make_rational(sgn_pow(k / 2), 4) +
               make_rational(third[k % 3], 3) - make_rational(1, 2) + delta(k, 2);
  return to_long(to_integer(r, "dim S_k(SL2(Z))"));
}

long dim_modular_level1(long k) {
  if (k < 0) throw std::invalid_argument("negative weight");
  if (k == 0) return 1;
  if (k % 2 != 0 || k == 2) return 0;
  return dim_cusp_level1(k) + 1;
}

long dim_new_gamma0(long p, long k) {
  check_even_weight(p, k);
  const long third[3] = {-1, 0, 1};
  Rational r = make_rational((p - 1) * (k - 1), 12) +
               make_rational(sgn_pow(k / 2 + 1) * (1 - split_symbol(-1, p)), 4) +
               make_rational(third[k % 3] * (1 - split_symbol(-3, p)), 3) - delta(k, 2);
  return to_long(to_integer(r, "dim S_k^new(Gamma0(p))"));
}

Rational dim_new_gamma0_difference(long p, long k) {
  check_even_weight(p, k);
  if (p == 2) {
    const long e = (k - 4) * (k - 2) / 8;
    return make_rational(sgn_pow(k / 2) - sgn_pow(e), 2) + delta(k, 2);
  }
  if (p == 3) {
    long v = 0;
    switch (k % 12) {
      case 2: case 6: v = -1; break;
      case 0: case 8: v = 1; break;
      default: v = 0; break;
    }
    return Rational(delta(k, 2) + v);
  }
  return make_rational(sgn_pow(k / 2) * a_p(p) * class_number(p), 2) + delta(k, 2);
}

long dim_new_gamma0_signed(long p, long k, ALSign sign) {
  const Integer total = dim_new_gamma0(p, k);
  const Rational diff = dim_new_gamma0_difference(p, k);
  const Rational half = sign == ALSign::plus ? Rational((total + diff) / 2) : Rational((total - diff) / 2);
  if (!is_integer(half))
    throw ParityFailure("total " + total.get_str() + " and difference " + diff.get_str() +
                        " at p=" + std::to_string(p) + ", k=" + std::to_string(k));
  const long v = to_long(half.get_num());
  if (v < 0) throw NegativeDim("signed newform dimension at p=" + std::to_string(p));
  return v;
}

}  // namespace paradim
