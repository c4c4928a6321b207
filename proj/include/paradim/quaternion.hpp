#pragma once

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "paradim/exactmath.hpp"

namespace paradim {

// Definite quaternion algebra with i^2 = A, j^2 = B, k = ij.
struct QuatAlgebra {
  long A;
  long B;
  bool operator==(const QuatAlgebra&) const = default;
};

class Quat {
 public:
  Quat() = default;
  Quat(QuatAlgebra alg, Rational w, Rational x = 0, Rational y = 0, Rational z = 0);
  static Quat scalar(QuatAlgebra alg, const Rational& s) { return Quat(alg, s); }

  const Rational& operator[](int i) const { return c_[i]; }
  QuatAlgebra algebra() const { return alg_; }

  Quat conj() const;
  Rational norm() const;   // reduced norm
  Rational trace() const;  // reduced trace
  Quat inverse() const;

  Quat operator-() const;
  Quat operator+(const Quat& o) const;
  Quat operator-(const Quat& o) const;
  Quat operator*(const Quat& o) const;
  Quat operator*(const Rational& s) const;
  bool operator==(const Quat& o) const;
  // Lexicographic on coefficients; used to deduplicate enumerations.
  bool operator<(const Quat& o) const;

 private:
  void check_same(const Quat& o) const;
  QuatAlgebra alg_{-1, -1};
  std::array<Rational, 4> c_{};
};

struct QuatMat2 {
  Quat a, b, c, d;
  QuatMat2 operator*(const QuatMat2& o) const;
  QuatMat2 star() const;  // conjugate transpose
  bool operator<(const QuatMat2& o) const;
  bool operator==(const QuatMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

// Left multiplication of every entry by q.
QuatMat2 left_scale(const Quat& q, const QuatMat2& g);
// n with g g^* = n 1_2, n > 0; throws NotSimilitude.
Rational similitude_norm(const QuatMat2& g);
Rational reduced_trace(const QuatMat2& g);

// x^4 + c3 x^3 + c2 x^2 + c1 x + c0 with integer coefficients.
struct IntPrincipalPoly {
  Integer c3, c2, c1, c0;
  std::strong_ordering operator<=>(const IntPrincipalPoly& o) const {
    for (auto [x, y] : {std::pair{&c3, &o.c3}, {&c2, &o.c2}, {&c1, &o.c1}, {&c0, &o.c0}}) {
      const int c = mpz_cmp(x->get_mpz_t(), y->get_mpz_t());
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const IntPrincipalPoly& o) const { return (*this <=> o) == 0; }
  // (a, b) with c3 = p a and c2 = p b.
  std::pair<long, long> ab(long p) const;
  static IntPrincipalPoly from_ab(long p, long a, long b);
};

std::string format_principal(const IntPrincipalPoly& f);

// Principal polynomial via Tr(g) and Tr(g^2).
IntPrincipalPoly principal_poly_of(const QuatMat2& g);
// Same polynomial via Tr(a), Tr(d) and N(b + conj(c)).
IntPrincipalPoly principal_poly_entries(const QuatMat2& g);

// The maximal order used for p = 2 or 3.
QuatAlgebra order_algebra(long p);
bool in_maximal_order(long p, const Quat& q);
std::vector<Quat> order_units(long p);
// Elements of reduced norm at most nmax with basis coordinates in [-box, box].
std::vector<Quat> order_elements_up_to_norm(long p, long nmax, long box);
std::vector<Quat> order_elements_of_norm(long p, long n, long box);

struct PiGammaFamily {
  std::vector<QuatMat2> elements;  // the elements pi * gamma
  std::map<IntPrincipalPoly, long> tally;
};

// Basis matrix g of the non-principal genus lattice; its Gram matrix is g g^*.
QuatMat2 lattice_basis(long p);
// Gamma_1 = { g^{-1} e g : e in M_2(O), e (g g^*) e^* = g g^* }, by direct search.
std::vector<QuatMat2> unit_group_gamma1(long p);
// Similitude of norm p normalizing Gamma_1: r 1_2 (p = 2), diag(beta alpha, alpha) (p = 3).
QuatMat2 pi_element(long p);

struct PiGammaEnumeration {
  long p;
  long gamma1_order;
  std::vector<PiGammaFamily> families;  // printed order (1), (2), ...
  std::map<IntPrincipalPoly, long> total;
  long order;
  // For each printed parametrization: how many of its elements lie in pi Gamma_1.
  std::vector<long> printed_sizes;
  std::vector<long> printed_in_coset;
};

// pi Gamma_1 split into the printed families. For p = 2 the printed parametrization
// must reproduce pi Gamma_1 exactly; for p = 3 families are the entry-shape classes
// (diagonal, antidiagonal, N(a) = 1, N(a) = 2). Throws FamilySizeMismatch.
const PiGammaEnumeration& enumerate_pi_gamma(long p);
// chi index whose phi_i(x) or phi_i(-x) equals p^{-2} Phi(sqrt(p) x).
int character_index(const IntPrincipalPoly& f, long p);
Rational verify_trace_p23_exact(long p, long f1, long f2);
Integer verify_trace_p23(long p, long f1, long f2);

// Integer pairs (a, b) allowed for x^4 + pa x^3 + pb x^2 + p^2 a x + p^2.
std::vector<std::pair<long, long>> feasible_ab(long p);

}  // namespace paradim
