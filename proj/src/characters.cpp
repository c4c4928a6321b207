#include "paradim/characters.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>

#include "paradim/arith.hpp"

namespace paradim {

WeightParams::WeightParams(long k_, long j_) : k(k_), j(j_) {
  if (k < 3) throw BadWeight("k = " + std::to_string(k) + " must be >= 3");
  if (j < 0 || j % 2 != 0) throw BadWeight("j = " + std::to_string(j) + " must be even and >= 0");
}

WeightParams WeightParams::from_young(long f1, long f2) {
  if (f2 < 0 || f1 < f2 || mod(f1 - f2, 2) != 0)
    throw BadYoung("(f1, f2) = (" + std::to_string(f1) + ", " + std::to_string(f2) +
                   ") needs f1 >= f2 >= 0 and f1 = f2 mod 2");
  return WeightParams(f2 + 3, f1 - f2);
}

namespace {

void check_index(int i) {
  if (i < 1 || i > kNumPrincipal) throw BadIndex("character index " + std::to_string(i));
}

// [a_0,...,a_{m-1}; m]_b
long br(std::initializer_list<long> a, long b) {
  const long m = static_cast<long>(a.size());
  return *(a.begin() + mod(b, m));
}

long sgn_pow(long n) { return mod(n, 2) == 0 ? 1 : -1; }

long exact_div(long n, long d, int i) {
  if (n % d != 0) throw NonIntegral("chi_" + std::to_string(i) + " closed form");
  return n / d;
}

QPoly lin(std::initializer_list<QuadExt> c) { return QPoly(std::vector<QuadExt>(c)); }

std::array<QPoly, kNumPrincipal + 1> build_principal() {
  const QuadExt r2 = QuadExt::sqrt(2), r3 = QuadExt::sqrt(3), r5 = QuadExt::sqrt(5);
  const QPoly xm1 = lin({-1, 1}), xp1 = lin({1, 1});
  const QPoly c4 = lin({1, 0, 1}), c3 = lin({1, 1, 1}), c6 = lin({1, -1, 1});
  const QPoly s2 = lin({1, r2, 1}), s3 = lin({1, r3, 1});
  std::array<QPoly, kNumPrincipal + 1> t;
  t[1] = xm1 * xm1 * xm1 * xm1;
  t[2] = xm1 * xm1 * xp1 * xp1;
  t[3] = xm1 * xm1 * c4;
  t[4] = xm1 * xm1 * c3;
  t[5] = xm1 * xm1 * c6;
  t[6] = c4 * c4;
  t[7] = c3 * c3;
  t[8] = c4 * c3;
  t[9] = c3 * c6;
  t[10] = lin({1, 1, 1, 1, 1});
  t[11] = lin({1, 0, 0, 0, 1});
  t[12] = lin({1, 0, -1, 0, 1});
  t[13] = lin({1, r5, 3, r5, 1});
  t[14] = s2 * s2;
  t[15] = lin({1, r2, 1, r2, 1});
  t[16] = s2 * c4;
  t[17] = s3 * c4;
  return t;
}

}  // namespace

const QPoly& principal_poly(int i) {
  check_index(i);
  static const auto table = build_principal();
  return table[i];
}

long chi_closed(int i, const WeightParams& w) {
  check_index(i);
  const long k = w.k, j = w.j;
  switch (i) {
    case 1:
      return exact_div((j + 1) * (k - 2) * (j + k - 1) * (j + 2 * k - 3), 6, i);
    case 2:
      return exact_div(sgn_pow(k - 3) * (k - 2) * (k + j - 1), 2, i);
    case 3: {
      const long s = sgn_pow(j / 2);
      return exact_div(br({s * (k - 2), -(j + k - 1), -s * (k - 2), j + k - 1}, k), 2, i);
    }
    case 4:
      return exact_div((j + k - 1) * br({1, -1, 0}, k) + (k - 2) * br({1, 0, -1}, j + k), 3, i);
    case 5:
      return (j + k - 1) * br({-1, -1, 0, 1, 1, 0}, k) + (k - 2) * br({1, 0, -1, -1, 0, 1}, j + k);
    case 6:
      return exact_div(sgn_pow((2 * k + j - 6) / 2) * br({-k + 2, j + k - 1}, k), 2, i);
    case 7: {
      long v = 0;
      switch (j % 3) {
        case 0: v = br({2 * k + j - 3, 2 * k + 2 * j - 2, 2 * k - 4}, k); break;
        case 1: v = br({-(2 * k + 2 * j - 2), -(2 * k + j - 3), -(2 * k - 4)}, k); break;
        default: v = br({j + 1, -(j + 1), 0}, k); break;
      }
      return exact_div(v, 3, i);
    }
    case 8:
      switch (j % 12) {
        case 0: return br({-1, 0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1}, k);
        case 2: return br({1, -1, 0, -1, -1, 0, -1, 1, 0, 1, 1, 0}, k);
        // entry 9 is 0, as forced by the series expansion
        case 4: return br({-1, 1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1}, k);
        case 6: return br({1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1, -1}, k);
        case 8: return br({-1, -1, 0, -1, 1, 0, 1, 1, 0, 1, -1, 0}, k);
        default: return br({1, 1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1}, k);
      }
    case 9:
      switch (j % 6) {
        case 0: return br({-1, 0, 0, 1, 0, 0}, k);
        case 2: return br({1, -1, 0, -1, 1, 0}, k);
        default: return br({0, 1, 0, 0, -1, 0}, k);
      }
    case 10:
      switch (j % 10) {
        case 0: return br({-1, 0, 0, 1, 0}, k);
        case 2: return br({1, -1, 0, 0, 0}, k);
        case 4: return 0;
        case 6: return br({0, 0, 0, -1, 1}, k);
        default: return br({0, 1, 0, 0, -1}, k);
      }
    case 11:
      switch (j % 8) {
        case 0: return br({-1, 0, 0, 1}, k);
        case 2: return br({1, -1, 0, 0}, k);
        case 4: return br({1, 0, 0, -1}, k);
        default: return br({-1, 1, 0, 0}, k);
      }
    case 12: {
      const long s = sgn_pow(j / 2);
      switch (j % 6) {
        case 0: return s * br({-1, 0, 0, 1, -2, 2}, k);
        case 2: return s * br({-1, 1, 0}, k);
        default: return s * br({2, -1, 0, 0, 1, -2}, k);
      }
    }
    case 13:
      switch (j % 10) {
        case 0: return br({-1, 0, 0, 1, 2, 1, 0, 0, -1, -2}, k);
        case 2: return br({1, -1, 0, 2, 0, -1, 1, 0, -2, 0}, k);
        case 4: return br({-2, -2, 0, -2, -2, 2, 2, 0, 2, 2}, k);
        case 6: return br({0, 2, 0, -1, 1, 0, -2, 0, 1, -1}, k);
        default: return br({2, 1, 0, 0, -1, -2, -1, 0, 0, 1}, k);
      }
    case 14:
      if (j % 4 == 0) return sgn_pow(j / 4) * br({j + k - 1, j + k - 1, k - 2, k - 2}, k);
      return sgn_pow((j - 2) / 4) * br({j + k - 1, k - 2, k - 2, j + k - 1}, k);
    case 15: {
      const long s = sgn_pow(j / 12);
      switch (j % 12) {
        case 0: return s * br({-1, 0, 0, 1, 0, -2, 1, 2, -2, -1, 2, 0}, k);
        case 2: return s * br({1, -1, 0}, k);
        case 4: return s * br({0, -1, 0, 2, -1, -2, 2, 1, -2, 0, 1, 0}, k);
        case 6: return s * br({1, -2, 0, 1, 0, 0, -1, 0, 2, -1, -2, 2}, k);
        case 8: return s * br({1, -1, 0}, k);
        default: return s * br({0, -1, 0, 0, 1, 0, -2, 1, 2, -2, -1, 2}, k);
      }
    }
    case 16:
      switch (j % 8) {
        case 0: return br({-1, 0, 0, 1, 1, 0, 0, -1}, k);
        case 2: return br({1, -1, 0, 0, -1, 1, 0, 0}, k);
        case 4: return br({-1, 0, 0, -1, 1, 0, 0, 1}, k);
        default: return br({1, 1, 0, 0, -1, -1, 0, 0}, k);
      }
    default:
      switch (j % 12) {
        case 0: return br({-1, 0, 0, 1, 1, -1}, k);
        case 2: return br({1, -1, 0}, k);
        case 4: return br({-1, -1, 0, 0, 1, 1}, k);
        case 6: return br({1, 0, 0, -1, -1, 1}, k);
        case 8: return br({-1, 1, 0}, k);
        default: return br({1, 1, 0, 0, -1, -1}, k);
      }
  }
}

bool has_young_closed_form(int i) { return i == 2 || i == 6 || i == 9 || i == 11 || i == 13; }

long chi_closed_young(int i, long f1, long f2) {
  check_index(i);
  WeightParams::from_young(f1, f2);
  const long d = f1 - f2;
  switch (i) {
    case 2:
      return exact_div(sgn_pow(f1) * (f1 + 2) * (f2 + 1), 2, i);
    case 6: {
      const long v = mod(f2, 2) == 0 ? f1 + 2 : -(f2 + 1);
      return exact_div(sgn_pow((f1 + f2) / 2) * v, 2, i);
    }
    case 9:
      switch (d % 6) {
        case 0: return br({1, 0, 0, -1, 0, 0}, f2);
        case 2: return br({-1, 1, 0, 1, -1, 0}, f2);
        default: return br({0, -1, 0, 0, 1, 0}, f2);
      }
    case 11:
      if (d % 4 == 0) return sgn_pow(d / 4) * br({1, -1, 0, 0}, f2);
      return sgn_pow((d - 2) / 4) * br({0, 1, -1, 0}, f2);
    case 13:
      switch (d % 10) {
        case 0: return br({1, 2, 1, 0, 0, -1, -2, -1, 0, 0}, f2);
        case 2: return br({2, 0, -1, 1, 0, -2, 0, 1, -1, 0}, f2);
        case 4: return br({-2, -2, 2, 2, 0, 2, 2, -2, -2, 0}, f2);
        case 6: return br({-1, 1, 0, -2, 0, 1, -1, 0, 2, 0}, f2);
        default: return br({0, -1, -2, -1, 0, 0, 1, 2, 1, 0}, f2);
      }
    default:
      throw BadIndex("no (f1, f2) closed form for chi_" + std::to_string(i));
  }
}

long chi_from_inverse(const std::vector<QuadExt>& p, long f1, long f2) {
  WeightParams::from_young(f1, f2);
  if (static_cast<long>(p.size()) < f1 + 2) throw std::invalid_argument("series too short");
  auto g = [&p](long f) { return f < 0 ? QuadExt() : p[f]; };
  QuadExt r = g(f1) * (g(f2) + g(f2 - 2)) - g(f2 - 1) * (g(f1 + 1) + g(f1 - 1));
  if (!r.is_rational())
    throw IrrationalResidue("sqrt part " + r.b().get_str() + " at (" + std::to_string(f1) + ", " +
                            std::to_string(f2) + ")");
  return to_long(to_integer(r.a(), "character value"));
}

long chi_series_poly(const QPoly& phi, long f1, long f2) {
  return chi_from_inverse(inverse_series(phi, f1 + 2), f1, f2);
}

long chi_series(int i, long f1, long f2) { return chi_series_poly(principal_poly(i), f1, f2); }

long chi(int i, const WeightParams& w) { return chi_closed(i, w); }

long chi_young(int i, long f1, long f2) { return chi_closed(i, WeightParams::from_young(f1, f2)); }

}  // namespace paradim
