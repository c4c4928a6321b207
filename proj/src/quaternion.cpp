#include "paradim/quaternion.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "paradim/arith.hpp"
#include "paradim/characters.hpp"

namespace paradim {

Quat::Quat(QuatAlgebra alg, Rational w, Rational x, Rational y, Rational z)
    : alg_(alg), c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

void Quat::check_same(const Quat& o) const {
  if (!(alg_ == o.alg_)) throw std::invalid_argument("quaternions from different algebras");
}

Quat Quat::conj() const { return Quat(alg_, c_[0], -c_[1], -c_[2], -c_[3]); }

Rational Quat::norm() const {
  const long A = alg_.A, B = alg_.B;
  return c_[0] * c_[0] - A * c_[1] * c_[1] - B * c_[2] * c_[2] + A * B * c_[3] * c_[3];
}

Rational Quat::trace() const { return 2 * c_[0]; }

Quat Quat::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero quaternion");
  return conj() * Rational(1 / n);
}

Quat Quat::operator-() const { return Quat(alg_, -c_[0], -c_[1], -c_[2], -c_[3]); }

Quat Quat::operator+(const Quat& o) const {
  check_same(o);
  return Quat(alg_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Quat Quat::operator-(const Quat& o) const { return *this + (-o); }

Quat Quat::operator*(const Quat& o) const {
  check_same(o);
  const long A = alg_.A, B = alg_.B;
  const auto& [w1, x1, y1, z1] = c_;
  const auto& [w2, x2, y2, z2] = o.c_;
  // i^2 = A, j^2 = B, k^2 = -AB, ij = k, ik = Aj, kj = Bi
  return Quat(alg_, w1 * w2 + A * x1 * x2 + B * y1 * y2 - A * B * z1 * z2,
              w1 * x2 + x1 * w2 - B * y1 * z2 + B * z1 * y2,
              w1 * y2 + y1 * w2 + A * x1 * z2 - A * z1 * x2,
              w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2);
}

Quat Quat::operator*(const Rational& s) const {
  return Quat(alg_, c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
}

bool Quat::operator==(const Quat& o) const { return alg_ == o.alg_ && c_ == o.c_; }

bool Quat::operator<(const Quat& o) const {
  for (int i = 0; i < 4; ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

QuatMat2 QuatMat2::operator*(const QuatMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

QuatMat2 QuatMat2::star() const { return {a.conj(), c.conj(), b.conj(), d.conj()}; }

bool QuatMat2::operator<(const QuatMat2& o) const {
  if (!(a == o.a)) return a < o.a;
  if (!(b == o.b)) return b < o.b;
  if (!(c == o.c)) return c < o.c;
  return d < o.d;
}

QuatMat2 left_scale(const Quat& q, const QuatMat2& g) { return {q * g.a, q * g.b, q * g.c, q * g.d}; }

Rational similitude_norm(const QuatMat2& g) {
  const QuatMat2 h = g * g.star();
  const Rational n = h.a[0];
  const Quat zero = Quat::scalar(g.a.algebra(), 0);
  const Quat ns = Quat::scalar(g.a.algebra(), n);
  if (!(h.a == ns && h.d == ns && h.b == zero && h.c == zero) || sgn(n) <= 0)
    throw NotSimilitude("g g^* is not a positive scalar matrix");
  return n;
}

Rational reduced_trace(const QuatMat2& g) { return g.a.trace() + g.d.trace(); }

std::pair<long, long> IntPrincipalPoly::ab(long p) const {
  if (!mpz_divisible_ui_p(c3.get_mpz_t(), p) || !mpz_divisible_ui_p(c2.get_mpz_t(), p))
    throw NonIntegral("principal polynomial " + format_principal(*this) + " is not of the form (a, b)");
  return {to_long(c3 / p), to_long(c2 / p)};
}

IntPrincipalPoly IntPrincipalPoly::from_ab(long p, long a, long b) {
  return {Integer(p * a), Integer(p * b), Integer(p * p * a), Integer(p * p)};
}

std::string format_principal(const IntPrincipalPoly& f) {
  std::vector<Integer> c = {f.c0, f.c1, f.c2, f.c3, 1};
  return format_poly(IntPoly(c), "x");
}

namespace {

IntPrincipalPoly assemble(const Rational& T, const Rational& e2, const Rational& n) {
  auto z = [](const Rational& v) { return to_integer(v, "principal polynomial coefficient"); };
  return {z(-T), z(e2), z(-T * n), z(n * n)};
}

}  // namespace

IntPrincipalPoly principal_poly_of(const QuatMat2& g) {
  const Rational n = similitude_norm(g);
  const Rational T = reduced_trace(g);
  const Rational T2 = reduced_trace(g * g);
  return assemble(T, (T * T - T2) / 2, n);
}

IntPrincipalPoly principal_poly_entries(const QuatMat2& g) {
  const Rational n = similitude_norm(g);
  const Rational ta = g.a.trace(), td = g.d.trace();
  return assemble(ta + td, ta * td - (g.b + g.c.conj()).norm() + 2 * n, n);
}

QuatAlgebra order_algebra(long p) {
  if (p == 2) return {-1, -1};
  if (p == 3) return {-3, -1};
  throw UnsupportedPrime("quaternion orders are provided for p = 2, 3");
}

bool in_maximal_order(long p, const Quat& q) {
  const QuatAlgebra alg = order_algebra(p);
  if (!(q.algebra() == alg)) return false;
  const Rational &w = q[0], &x = q[1], &y = q[2], &z = q[3];
  if (p == 2) {
    // Z + Zi + Zj + Z(1+i+j+k)/2
    return is_integer(2 * z) && is_integer(w - z) && is_integer(x - z) && is_integer(y - z);
  }
  // Z + Z(1+a)/2 + Zb + Z(1+a)b/2
  return is_integer(2 * x) && is_integer(w - x) && is_integer(2 * z) && is_integer(y - z);
}

std::vector<Quat> order_elements_up_to_norm(long p, long nmax, long box) {
  const QuatAlgebra alg = order_algebra(p);
  const Rational h = make_rational(1, 2);
  std::vector<Quat> basis;
  if (p == 2)
    basis = {Quat(alg, 1), Quat(alg, 0, 1), Quat(alg, 0, 0, 1), Quat(alg, h, h, h, h)};
  else
    basis = {Quat(alg, 1), Quat(alg, h, h), Quat(alg, 0, 0, 1), Quat(alg, 0, 0, h, h)};
  std::set<Quat> found;
  for (long c0 = -box; c0 <= box; ++c0)
    for (long c1 = -box; c1 <= box; ++c1)
      for (long c2 = -box; c2 <= box; ++c2)
        for (long c3 = -box; c3 <= box; ++c3) {
          Quat q = basis[0] * Rational(c0) + basis[1] * Rational(c1) + basis[2] * Rational(c2) +
                   basis[3] * Rational(c3);
          if (q.norm() <= nmax) found.insert(q);
        }
  return {found.begin(), found.end()};
}

std::vector<Quat> order_elements_of_norm(long p, long n, long box) {
  std::vector<Quat> out;
  for (const Quat& q : order_elements_up_to_norm(p, n, box))
    if (q.norm() == n) out.push_back(q);
  return out;
}

std::vector<Quat> order_units(long p) { return order_elements_of_norm(p, 1, 2); }

namespace {

// x = y mod alpha, alpha^2 = -3: (x - y) / alpha lies in the order
bool congruent_mod_alpha(const Quat& x, const Quat& y) {
  const Quat alpha(order_algebra(3), 0, 1);
  return in_maximal_order(3, alpha.inverse() * (x - y));
}

void add_element(PiGammaFamily& fam, std::set<QuatMat2>& seen, const QuatMat2& g) {
  if (seen.insert(g).second) fam.elements.push_back(g);
}

std::vector<PiGammaFamily> families_p2() {
  const QuatAlgebra alg = order_algebra(2);
  const Rational h = make_rational(1, 2);
  const Quat one(alg, 1), i(alg, 0, 1), j(alg, 0, 0, 1), k(alg, 0, 0, 0, 1);
  const Quat r = i - k;
  const Quat rinv = r.inverse();
  const std::vector<Quat> units = order_units(2);
  const std::vector<Quat> a0s = {one, -one, i, -i, j, -j, k, -k};
  std::vector<Quat> xs = {-i, k};
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) xs.push_back(Quat(alg, s1 * h, -h, s2 * h, h));

  std::vector<PiGammaFamily> fams(5);
  std::vector<std::set<QuatMat2>> seen(5);
  const Quat zero(alg, 0);
  for (const Quat& a : units) {
    for (const Quat& a0 : a0s) {
      const Quat ra = rinv * a;
      add_element(fams[0], seen[0], {ra, -(ra * a0), ra, ra * a0});
      add_element(fams[1], seen[1], {ra, ra * a0, -ra, ra * a0});
      add_element(fams[2], seen[2], {a, zero, zero, a * a0});
      add_element(fams[3], seen[3], {zero, a * a0, a, zero});
      for (const Quat& x : xs) {
        const Quat y = rinv * x;
        add_element(fams[4], seen[4], {(one + y) * a, y * a * a0, y * a, (one + y) * a * a0});
      }
    }
  }
  for (auto& f : fams)
    for (auto& g : f.elements) {
      if (similitude_norm(g) != 1) throw NotSimilitude("listed element is not a unit");
      g = left_scale(r, g);
    }
  return fams;
}

std::vector<PiGammaFamily> printed_families_p3() {
  const QuatAlgebra alg = order_algebra(3);
  const Rational h = make_rational(1, 2);
  const Quat one(alg, 1), alpha(alg, 0, 1), beta(alg, 0, 0, 1);
  const std::vector<Quat> units = order_units(3);
  const std::vector<Quat> a0s = {one, Quat(alg, -h, h), Quat(alg, -h, -h)};
  const std::vector<Quat> norm2 = order_elements_of_norm(3, 2, 2);

  std::vector<PiGammaFamily> fams(4);
  std::vector<std::set<QuatMat2>> seen(4);
  const Quat zero(alg, 0);
  const Quat ba = beta * alpha;
  for (const Quat& a : units)
    for (const Quat& a0 : a0s) {
      add_element(fams[0], seen[0], {ba * a, zero, zero, alpha * a * a0});
      add_element(fams[1], seen[1], {zero, ba * a * a0, alpha * a, zero});
    }
  for (const Quat& c2 : norm2)
    for (const Quat& e1 : units)
      for (const Quat& e2 : units) {
        const bool e2ok = congruent_mod_alpha(e2, c2 * (one + beta));
        if (!e2ok) continue;
        if (congruent_mod_alpha(e1, -((one - beta) * c2)))
          add_element(fams[2], seen[2], {e1, -(e1 * c2.conj() * e2), c2, e2});
        // the corner entry -e1 conj(c2) e2 makes the rows orthogonal
        if (congruent_mod_alpha(e1, (one + beta) * c2))
          add_element(fams[3], seen[3], {c2, e2, e1, -(e1 * c2.conj() * e2)});
      }
  for (auto& f : fams)
    for (auto& g : f.elements)
      if (similitude_norm(g) != 3) throw NotSimilitude("listed element does not have norm 3");
  return fams;
}

QuatMat2 upper_inverse(const QuatMat2& g) {
  const Quat ai = g.a.inverse(), di = g.d.inverse();
  return {ai, -(ai * g.b * di), Quat::scalar(g.a.algebra(), 0), di};
}

// Entry shape used to split pi Gamma_1 for p = 3: diagonal, antidiagonal, N(a) = 1, N(a) = 2.
std::size_t shape_class_p3(const QuatMat2& g) {
  const Rational zero = 0;
  if (g.b.norm() == zero && g.c.norm() == zero) return 0;
  if (g.a.norm() == zero && g.d.norm() == zero) return 1;
  if (g.a.norm() == 1) return 2;
  if (g.a.norm() == 2) return 3;
  throw FamilySizeMismatch("element of pi Gamma_1 outside the four entry shapes");
}

void tally_family(PiGammaFamily& fam) {
  for (const auto& g : fam.elements) ++fam.tally[principal_poly_of(g)];
}

PiGammaEnumeration build(long p) {
  const std::vector<QuatMat2> gamma1 = unit_group_gamma1(p);
  const std::set<QuatMat2> gamma1_set(gamma1.begin(), gamma1.end());
  const QuatMat2 pi = pi_element(p);
  if (similitude_norm(pi) != p) throw NotSimilitude("pi does not have norm p");
  // pi must normalize Gamma_1 so that pi Gamma_1 = Gamma_1 pi is a single coset
  const QuatMat2 pi_inv = upper_inverse(pi);
  for (const auto& g : gamma1)
    if (!gamma1_set.count(pi * g * pi_inv)) throw FamilySizeMismatch("pi does not normalize Gamma_1");
  std::set<QuatMat2> coset;
  for (const auto& g : gamma1) coset.insert(pi * g);

  PiGammaEnumeration e{p, static_cast<long>(gamma1.size()), {}, {}, static_cast<long>(coset.size()), {}, {}};
  const long expected = p == 2 ? 1920 : 720;
  if (e.gamma1_order != expected || e.order != expected)
    throw FamilySizeMismatch("p=" + std::to_string(p) + ": |Gamma_1| = " + std::to_string(e.gamma1_order) +
                             ", expected " + std::to_string(expected));

  const std::vector<PiGammaFamily> printed = p == 2 ? families_p2() : printed_families_p3();
  for (const auto& f : printed) {
    e.printed_sizes.push_back(static_cast<long>(f.elements.size()));
    e.printed_in_coset.push_back(
        std::count_if(f.elements.begin(), f.elements.end(), [&](const QuatMat2& g) { return coset.count(g) > 0; }));
  }
  if (p == 2) {
    e.families = printed;
    std::set<QuatMat2> listed;
    for (const auto& f : e.families) listed.insert(f.elements.begin(), f.elements.end());
    if (listed != coset) throw FamilySizeMismatch("p=2 listed families differ from r Gamma_1");
  } else {
    e.families.resize(4);
    for (const auto& g : coset) e.families[shape_class_p3(g)].elements.push_back(g);
  }
  const std::vector<long> sizes = p == 2 ? std::vector<long>{192, 192, 192, 192, 1152}
                                         : std::vector<long>{36, 36, 324, 324};
  for (std::size_t f = 0; f < e.families.size(); ++f) {
    auto& fam = e.families[f];
    if (static_cast<long>(fam.elements.size()) != sizes[f])
      throw FamilySizeMismatch("p=" + std::to_string(p) + " family (" + std::to_string(f + 1) + ") has " +
                               std::to_string(fam.elements.size()) + " elements, expected " +
                               std::to_string(sizes[f]));
    tally_family(fam);
    for (const auto& [phi, count] : fam.tally) e.total[phi] += count;
  }
  return e;
}

}  // namespace

const PiGammaEnumeration& enumerate_pi_gamma(long p) {
  order_algebra(p);
  static std::once_flag f2, f3;
  static PiGammaEnumeration e2, e3;
  if (p == 2) {
    std::call_once(f2, [] { e2 = build(2); });
    return e2;
  }
  std::call_once(f3, [] { e3 = build(3); });
  return e3;
}

QuatMat2 lattice_basis(long p) {
  const QuatAlgebra alg = order_algebra(p);
  const Quat one(alg, 1), zero(alg, 0);
  if (p == 2) return {one, -one, zero, Quat(alg, 0, 1, 0, -1)};
  return {one, Quat(alg, 1, 0, 1), zero, Quat(alg, 0, 1)};
}

std::vector<QuatMat2> unit_group_gamma1(long p) {
  const QuatMat2 g = lattice_basis(p);
  const QuatMat2 gram = g * g.star();
  const Rational h11 = gram.a[0], h22 = gram.d[0];
  // rows of e satisfy v H v^* = H_11 with H positive definite, so N(v1) + N(v2) <= bound
  const long bound = p == 2 ? 3 : 5;
  const std::vector<Quat> small = order_elements_up_to_norm(p, bound, 5);
  std::vector<std::pair<Quat, Quat>> rows;
  for (const Quat& x : small)
    for (const Quat& y : small) {
      if (x.norm() + y.norm() > bound) continue;
      const Rational v = h11 * x.norm() + h22 * y.norm() + (x * gram.b * y.conj()).trace();
      if (v == h11) rows.emplace_back(x, y);
    }
  const QuatMat2 g_inv = upper_inverse(g);
  std::set<QuatMat2> out;
  for (const auto& [a, b] : rows) {
    const Quat ah = a * gram.a + b * gram.c, bh = a * gram.b + b * gram.d;  // first row of e H
    for (const auto& [c, d] : rows)
      if (ah * c.conj() + bh * d.conj() == gram.b) out.insert(g_inv * QuatMat2{a, b, c, d} * g);
  }
  return {out.begin(), out.end()};
}

QuatMat2 pi_element(long p) {
  const QuatAlgebra alg = order_algebra(p);
  const Quat zero(alg, 0);
  if (p == 2) {
    const Quat r(alg, 0, 1, 0, -1);
    return {r, zero, zero, r};
  }
  const Quat alpha(alg, 0, 1), beta(alg, 0, 0, 1);
  return {beta * alpha, zero, zero, alpha};
}

int character_index(const IntPrincipalPoly& f, long p) {
  const auto [a, b] = f.ab(p);
  if (f.c1 != p * p * a || f.c0 != p * p)
    throw NonIntegral("not reciprocal of norm p: " + format_principal(f));
  const QuadExt s(0, a, p);
  const QPoly phi(std::vector<QuadExt>{1, s, b, s, 1});
  for (int i = 1; i <= kNumPrincipal; ++i)
    if (principal_poly(i) == phi || principal_poly(i).negate_variable() == phi) return i;
  throw BadIndex("no principal character for " + format_principal(f));
}

Rational verify_trace_p23_exact(long p, long f1, long f2) {
  const PiGammaEnumeration& e = enumerate_pi_gamma(p);
  Rational r;
  for (const auto& [phi, count] : e.total) r += make_rational(count, e.order) * chi_young(character_index(phi, p), f1, f2);
  return r;
}

Integer verify_trace_p23(long p, long f1, long f2) {
  return to_integer(verify_trace_p23_exact(p, f1, f2), "trace from enumeration");
}

std::vector<std::pair<long, long>> feasible_ab(long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<std::pair<long, long>> out;
  for (long a = -4; a <= 4; ++a) {
    if (a * a * p > 16) continue;
    // (p a^2 - 4)/2 <= b <= a^2 p/4 + 2
    for (long b = -3; 4 * b <= a * a * p + 8; ++b) {
      if (p * a * a - 4 > 2 * b) continue;
      if (4 * p * a * a > (b + 2) * (b + 2)) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace paradim
