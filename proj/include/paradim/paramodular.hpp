#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paradim/exactmath.hpp"

namespace paradim {

struct ParamodularDims {
  long p;
  long k;
  long j;
  Integer plus;
  Integer minus;
  Integer total() const { return plus + minus; }
};

// dim S_{k,j}^{+-}(K(p)) for k >= 3; odd j gives zeros.
ParamodularDims dim_paramodular_signed(long p, long k, long j = 0);

struct SignedPair {
  Integer plus;
  Integer minus;
};

// (H - T, T - 1).
SignedPair dim_weight3(long p);
// dim J_{2,p} for p <= 97; throws MissingJacobiData beyond.
long jacobi_weight2_dim(long p);
// dim A_k^{+-}(K(p)) including Eisenstein and boundary parts, j = 0.
SignedPair dim_A_signed(long p, long k);

enum class Space { Splus, Sminus, Aplus, Aminus, A, Mplus, Mminus, M };
Space parse_space(const std::string& name);  // "S+", "A-", "M", ...
std::string space_name(Space s);
// M spaces are indexed by f with (f1, f2) = (f, f); the others by k.
bool space_indexed_by_f(Space s);

// Dimensions for index 0..n-1; j applies to the S spaces only.
std::vector<Integer> space_dimensions(long p, Space s, std::size_t n, long j = 0);

// Denominator used for the printed presentation of the series.
std::vector<int> registry_denominator(long p, Space s);
bool in_denominator_registry(long p, Space s);

struct HilbertSeries {
  long p;
  Space space;
  RationalGF gf;
};

// Fits the numerator over the registry (or the given) denominator from a sweep up to kmax.
HilbertSeries hilbert_series(long p, Space s, long kmax,
                             const std::optional<std::vector<int>>& denom = std::nullopt);

// (-1)^k (dim S_k^+ - dim S_k^-).
Integer bias(long p, long k);
std::vector<long> search_weight3_zero(long pmax);
// Zero pairs of the bias on the rectangle; throws BiasViolation on a negative value.
std::vector<std::pair<long, long>> check_bias_region(long pmax, long kmax);

}  // namespace paradim
