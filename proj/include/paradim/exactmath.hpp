#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "paradim/errors.hpp"

namespace paradim {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical n/d; throws std::domain_error on d = 0.
Rational make_rational(const Integer& n, const Integer& d = 1);
bool is_integer(const Rational& x);
// Throws NonIntegral naming ctx when x has a denominator.
Integer to_integer(const Rational& x, const std::string& ctx);
std::string to_string(const Rational& x);
long to_long(const Integer& x);

// a + b*sqrt(m) with m squarefree; m = 1 means the element is rational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b = 0, long m = 1);
  static QuadExt sqrt(long m) { return QuadExt(0, 1, m); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long m() const { return m_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadExt conj() const { return QuadExt(a_, -b_, m_); }
  Rational norm() const { return a_ * a_ - m_ * b_ * b_; }
  QuadExt inverse() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  static long common_radicand(const QuadExt& x, const QuadExt& y);
  Rational a_ = 0;
  Rational b_ = 0;
  long m_ = 1;
};

// Dense polynomial, ascending coefficients, trailing zeros trimmed.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(int i) const { return (i < 0 || i > degree()) ? T() : c_[i]; }
  const std::vector<T>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<T> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // t^deg * P(1/t)
  Poly reversed() const { return Poly(std::vector<T>(c_.rbegin(), c_.rend())); }
  // P(-t)
  Poly negate_variable() const {
    std::vector<T> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T()) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using QPoly = Poly<QuadExt>;

// Coefficients p_0..p_{n-1} of 1/phi(x); phi(0) must be invertible.
std::vector<QuadExt> inverse_series(const QPoly& phi, std::size_t n);

// numerator(t) / prod_i (1 - t^{a_i}); denominators are kept factored.
struct RationalGF {
  IntPoly numerator;
  std::vector<int> denom;
};

std::vector<Integer> series_coeffs(const RationalGF& gf, std::size_t n);
// Q with series_coeffs(Q / D, seq.size()) == seq; throws NonPolynomial otherwise.
IntPoly fit_numerator(const std::vector<Integer>& seq, const std::vector<int>& denom,
                      int max_deg);
// t^d Q(1/t) == Q(t) for d = deg Q.
bool is_palindromic(const RationalGF& gf);
// ell = sum a_i - deg Q, the shift in F(1/t) = (-1)^m t^ell F(t).
int palindromic_shift(const RationalGF& gf);

std::string format_poly(const IntPoly& q, const std::string& var = "t");
std::ostream& operator<<(std::ostream& os, const IntPoly& q);

}  // namespace paradim
