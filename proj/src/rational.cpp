#include <stdexcept>

#include "paradim/exactmath.hpp"

namespace paradim {

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x, const std::string& ctx) {
  if (!is_integer(x)) throw NonIntegral(ctx + " evaluated to " + x.get_str());
  return x.get_num();
}

std::string to_string(const Rational& x) { return x.get_str(); }

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer exceeds long: " + x.get_str());
  return x.get_si();
}

}  // namespace paradim
