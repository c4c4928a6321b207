#include "paradim/paramodular.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "paradim/arith.hpp"
#include "paradim/compact.hpp"
#include "paradim/corpus.hpp"
#include "paradim/elliptic.hpp"
#include "paradim/siegel1.hpp"

namespace paradim {

ParamodularDims dim_paramodular_signed(long p, long k, long j) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k < 3) throw BadWeight("k = " + std::to_string(k) + " must be >= 3");
  if (j < 0) throw BadWeight("j must be >= 0");
  ParamodularDims d{p, k, j, 0, 0};
  if (j % 2 != 0) return d;
  const Integer level1 = dim_cusp_sp4(k, j);
  const CompactDims m = dim_M_signed(p, k + j - 3, k - 3);
  const long sp = dim_new_gamma0_signed(p, j + 2, ALSign::plus);
  const long sm = dim_new_gamma0_signed(p, j + 2, ALSign::minus);
  const long lift = dim_cusp_level1(2 * k + j - 2);
  const long d0 = delta(j, 0);
  d.plus = level1 + m.minus - sp * lift;
  d.minus = level1 - d0 * dim_cusp_level1(2 * k - 2) - d0 * delta(k, 3) + m.plus - sm * lift;
  if (d.plus < 0 || d.minus < 0)
    throw NegativeDim("S_{k,j}(K(p)) at p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                      ", j=" + std::to_string(j));
  return d;
}

SignedPair dim_weight3(long p) {
  const ClassType ct = class_and_type(p);
  return {ct.H - ct.T, ct.T - 1};
}

long jacobi_weight2_dim(long p) {
  static const std::map<long, long> table = [] {
    std::map<long, long> t;
    const CsvTable csv = parse_csv(embedded_file("j2p.csv"));
    const std::size_t cp = csv.column("p"), cd = csv.column("dim_J2");
    for (const auto& row : csv.rows) t[std::stol(row[cp])] = std::stol(row[cd]);
    return t;
  }();
  auto it = table.find(p);
  if (it == table.end()) throw MissingJacobiData("dim J_{2,p} is tabulated for primes p <= 97, got " + std::to_string(p));
  return it->second;
}

SignedPair dim_A_signed(long p, long k) {
  if (k < 0) throw BadWeight("negative weight");
  if (k == 0) return {1, 0};
  if (k == 1) return {0, 0};
  if (k == 2) return {jacobi_weight2_dim(p), 0};
  const ParamodularDims s = dim_paramodular_signed(p, k, 0);
  return {s.plus + dim_modular_level1(k), s.minus + dim_cusp_level1(k)};
}

Space parse_space(const std::string& name) {
  static const std::map<std::string, Space> names = {
      {"S+", Space::Splus}, {"S-", Space::Sminus}, {"A+", Space::Aplus}, {"A-", Space::Aminus},
      {"A", Space::A},      {"M+", Space::Mplus},  {"M-", Space::Mminus}, {"M", Space::M}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown space " + name);
  return it->second;
}

std::string space_name(Space s) {
  switch (s) {
    case Space::Splus: return "S+";
    case Space::Sminus: return "S-";
    case Space::Aplus: return "A+";
    case Space::Aminus: return "A-";
    case Space::A: return "A";
    case Space::Mplus: return "M+";
    case Space::Mminus: return "M-";
    default: return "M";
  }
}

bool space_indexed_by_f(Space s) { return s == Space::Mplus || s == Space::Mminus || s == Space::M; }

std::vector<Integer> space_dimensions(long p, Space s, std::size_t n, long j) {
  std::vector<Integer> out;
  out.reserve(n);
  for (long x = 0; x < static_cast<long>(n); ++x) {
    switch (s) {
      case Space::M:
      case Space::Mplus:
      case Space::Mminus: {
        const CompactDims m = dim_M_signed(p, x, x);
        out.push_back(s == Space::M ? m.total : (s == Space::Mplus ? m.plus : m.minus));
        break;
      }
      case Space::Splus:
      case Space::Sminus: {
        if (x < 3) {
          // weight 2 cusp forms are Gritsenko lifts, all Atkin-Lehner plus
          const bool w2 = x == 2 && j == 0 && s == Space::Splus;
          out.push_back(w2 ? jacobi_weight2_dim(p) : 0);
          break;
        }
        const ParamodularDims d = dim_paramodular_signed(p, x, j);
        out.push_back(s == Space::Splus ? d.plus : d.minus);
        break;
      }
      default: {
        const SignedPair a = dim_A_signed(p, x);
        out.push_back(s == Space::Aplus ? a.plus : (s == Space::Aminus ? a.minus : a.plus + a.minus));
        break;
      }
    }
  }
  return out;
}

namespace {

const std::vector<GFEntry>& embedded_corpus() {
  static const std::vector<GFEntry> corpus = parse_gf_corpus(embedded_file("generating_functions.json"));
  return corpus;
}

const GFEntry* registry_entry(long p, Space s) {
  for (const auto& e : embedded_corpus())
    if (e.p == p && e.family == space_name(s) && e.j == 0 && e.f1_offset == 0 && e.denom_plus.empty())
      return &e;
  return nullptr;
}

}  // namespace

bool in_denominator_registry(long p, Space s) { return registry_entry(p, s) != nullptr; }

std::vector<int> registry_denominator(long p, Space s) {
  if (const GFEntry* e = registry_entry(p, s)) return e->denom;
  if (p == 2) return {4, 6, 8, 12};
  if (p == 3) return {4, 6, 6, 12};
  return {4, 6, 10, 12};
}

HilbertSeries hilbert_series(long p, Space s, long kmax, const std::optional<std::vector<int>>& denom) {
  const std::vector<int> d = denom ? *denom : registry_denominator(p, s);
  const long total = std::accumulate(d.begin(), d.end(), 0L);
  if (kmax < total) throw std::invalid_argument("kmax must be at least the sum of denominator exponents");
  const auto seq = space_dimensions(p, s, kmax + 1);
  return {p, s, RationalGF{fit_numerator(seq, d, static_cast<int>(kmax - total)), d}};
}

Integer bias(long p, long k) {
  const ParamodularDims d = dim_paramodular_signed(p, k, 0);
  const Integer diff = d.plus - d.minus;
  return k % 2 == 0 ? diff : Integer(-diff);
}

std::vector<long> search_weight3_zero(long pmax) {
  std::vector<long> out;
  for (long p : primes_up_to(pmax))
    if (dim_weight3(p).plus == 0) out.push_back(p);
  return out;
}

std::vector<std::pair<long, long>> check_bias_region(long pmax, long kmax) {
  std::vector<std::pair<long, long>> zeros;
  for (long p : primes_up_to(pmax))
    for (long k = 3; k <= kmax; ++k) {
      const Integer b = bias(p, k);
      if (b < 0)
        throw BiasViolation("f(" + std::to_string(p) + "," + std::to_string(k) + ") = " + b.get_str());
      if (b == 0) zeros.emplace_back(p, k);
    }
  return zeros;
}

}  // namespace paradim
