#include <stdexcept>

#include "paradim/exactmath.hpp"

namespace paradim {

QuadExt::QuadExt(const Rational& a, const Rational& b, long m) : a_(a), b_(b), m_(m) {
  if (m < 1) throw std::invalid_argument("radicand must be positive");
  for (long q = 2; q * q <= m; ++q)
    if (m % (q * q) == 0) throw std::invalid_argument("radicand must be squarefree");
  if (m == 1) {
    a_ += b_;
    b_ = 0;
  }
}

long QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.m_ == y.m_) return x.m_;
  if (x.is_rational()) return y.m_;
  if (y.is_rational()) return x.m_;
  throw MixedRadicand("sqrt(" + std::to_string(x.m_) + ") and sqrt(" + std::to_string(y.m_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  m_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  m_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  long m = common_radicand(*this, o);
  Rational a = a_ * o.a_ + m * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  m_ = m;
  return *this;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero");
  return QuadExt(a_ / n, -b_ / n, m_);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.is_rational() || x.m_ == y.m_;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  os << x.a_;
  if (!x.is_rational()) os << (sgn(x.b_) < 0 ? "-" : "+") << abs(x.b_) << "*sqrt(" << x.m_ << ")";
  return os;
}

}  // namespace paradim
