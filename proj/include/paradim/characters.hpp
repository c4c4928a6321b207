#pragma once

#include <vector>

#include "paradim/exactmath.hpp"

namespace paradim {

// Weight det^k Sym(j) with Young parameters f1 = k+j-3, f2 = k-3.
struct WeightParams {
  long k;
  long j;
  WeightParams(long k, long j);  // throws BadWeight unless k >= 3, j even >= 0
  static WeightParams from_young(long f1, long f2);  // throws BadYoung
  long f1() const { return k + j - 3; }
  long f2() const { return k - 3; }
};

constexpr int kNumPrincipal = 17;

// phi_i(x), i = 1..17: monic reciprocal quartics over Q(sqrt m).
const QPoly& principal_poly(int i);

// Closed bracket form of chi_i at weight (k, j).
long chi_closed(int i, const WeightParams& w);
// Brackets indexed by (f1, f2); available for i in {2, 6, 9, 11, 13}.
long chi_closed_young(int i, long f1, long f2);
bool has_young_closed_form(int i);

// p_{f1}(p_{f2}+p_{f2-2}) - p_{f2-1}(p_{f1+1}+p_{f1-1}) with 1/phi = sum p_f x^f.
long chi_series(int i, long f1, long f2);
long chi_series_poly(const QPoly& phi, long f1, long f2);
// Same formula on precomputed coefficients of 1/phi (length >= f1 + 2).
long chi_from_inverse(const std::vector<QuadExt>& p, long f1, long f2);

// Dispatcher used by every dimension formula.
long chi(int i, const WeightParams& w);
long chi_young(int i, long f1, long f2);

}  // namespace paradim
