#include <numeric>
#include <sstream>
#include <stdexcept>

#include "paradim/exactmath.hpp"

namespace paradim {

std::vector<QuadExt> inverse_series(const QPoly& phi, std::size_t n) {
  if (phi.is_zero() || phi.coeff(0) == QuadExt()) throw std::domain_error("phi(0) is not invertible");
  const QuadExt c0inv = phi.coeff(0).inverse();
  const int deg = phi.degree();
  std::vector<QuadExt> p;
  p.reserve(n);
  for (std::size_t f = 0; f < n; ++f) {
    QuadExt s = f == 0 ? QuadExt(1) : QuadExt();
    for (int t = 1; t <= deg && t <= static_cast<int>(f); ++t) s -= phi.coeff(t) * p[f - t];
    p.push_back(s * c0inv);
  }
  return p;
}

static void check_denominators(const std::vector<int>& denom) {
  for (int a : denom)
    if (a <= 0) throw std::invalid_argument("denominator exponents must be positive");
}

std::vector<Integer> series_coeffs(const RationalGF& gf, std::size_t n) {
  if (n == 0) throw std::invalid_argument("series length must be at least 1");
  check_denominators(gf.denom);
  std::vector<Integer> c(n);
  const auto& q = gf.numerator.coeffs();
  for (std::size_t e = 0; e < q.size() && e < n; ++e) c[e] = q[e];
  // 1/(1-t^a) is a running sum with stride a
  for (int a : gf.denom)
    for (std::size_t i = a; i < n; ++i) c[i] += c[i - a];
  return c;
}

IntPoly fit_numerator(const std::vector<Integer>& seq, const std::vector<int>& denom, int max_deg) {
  check_denominators(denom);
  const long total = std::accumulate(denom.begin(), denom.end(), 0L);
  if (max_deg < 0 || static_cast<long>(seq.size()) <= max_deg + total)
    throw std::invalid_argument("sequence too short for the requested fit");
  std::vector<Integer> c(seq);
  for (int a : denom)
    for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(a);) c[i] -= c[i - a];
  for (std::size_t i = max_deg + 1; i < c.size(); ++i)
    if (c[i] != 0)
      throw NonPolynomial("coefficient of t^" + std::to_string(i) + " is " + c[i].get_str() +
                          " past degree bound " + std::to_string(max_deg));
  c.resize(max_deg + 1);
  return IntPoly(std::move(c));
}

bool is_palindromic(const RationalGF& gf) {
  if (gf.numerator.is_zero()) return false;
  return gf.numerator.reversed() == gf.numerator;
}

int palindromic_shift(const RationalGF& gf) {
  return std::accumulate(gf.denom.begin(), gf.denom.end(), 0) - gf.numerator.degree();
}

std::string format_poly(const IntPoly& q, const std::string& var) {
  if (q.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= q.degree(); ++e) {
    const Integer& c = q.coeffs()[e];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (sgn(c) < 0) os << "-";
    else if (!first) os << "+";
    if (e == 0 || mag != 1) os << mag;
    if (e >= 1) os << var;
    if (e >= 2) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& q) { return os << format_poly(q); }

}  // namespace paradim
