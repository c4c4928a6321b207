#include "paradim/siegel1.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace paradim {

namespace {

IntPoly monomials(std::initializer_list<std::pair<int, long>> terms) {
  int deg = 0;
  for (const auto& [e, c] : terms) deg = std::max(deg, e);
  std::vector<Integer> q(deg + 1);
  for (const auto& [e, c] : terms) q[e] += c;
  return IntPoly(std::move(q));
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<long, std::map<long, Integer>>& registry() {
  static std::map<long, std::map<long, Integer>> tables;
  return tables;
}

}  // namespace

const RationalGF& level1_series(long j) {
  static const std::vector<int> den = {4, 6, 10, 12};
  static const RationalGF j0{monomials({{10, 1}, {12, 1}, {22, -1}, {35, 1}}), den};
  static const RationalGF j2{monomials({{14, 1}, {16, 2}, {18, 1}, {22, 1}, {26, -1}, {28, -1},
                                        {21, 1}, {23, 1}, {27, 1}, {29, 1}, {33, -1}}),
                             den};
  static const RationalGF j4{monomials({{10, 1}, {12, 1}, {14, 1}, {15, 1}, {16, 1}, {17, 1}, {18, 1},
                                        {19, 1}, {20, 1}, {21, 1}, {23, 1}, {30, -1}}),
                             den};
  switch (j) {
    case 0: return j0;
    case 2: return j2;
    case 4: return j4;
    default: throw UnsupportedJ("no built-in level one series for j=" + std::to_string(j));
  }
}

Integer dim_cusp_sp4(long k, long j) {
  if (k < 0) throw std::invalid_argument("negative weight");
  if (j == 0 || j == 2 || j == 4) return series_coeffs(level1_series(j), k + 1)[k];
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(j);
  if (it == registry().end())
    throw UnsupportedJ("j=" + std::to_string(j) + " needs a registered level one table");
  auto kt = it->second.find(k);
  if (kt == it->second.end())
    throw MissingData("no level one value for (k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")");
  return kt->second;
}

void register_level1_table(long j, const std::map<long, Integer>& dims) {
  if (j < 6 || j % 2 != 0) throw UnsupportedJ("tables are accepted for even j >= 6, got " + std::to_string(j));
  std::lock_guard<std::mutex> lock(registry_mutex());
  if (!registry().emplace(j, dims).second)
    throw std::logic_error("level one table for j=" + std::to_string(j) + " already registered");
}

void register_level1_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::map<long, std::map<long, Integer>> tables;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("j,k,dim", 0) == 0) continue;
    }
    long j = 0, k = 0;
    char c1 = 0, c2 = 0;
    std::string dim;
    std::istringstream row(line);
    if (!(row >> j >> c1 >> k >> c2 >> dim) || c1 != ',' || c2 != ',')
      throw DataError("bad level one row: " + line);
    tables[j][k] = Integer(dim);
  }
  for (const auto& [j, dims] : tables) register_level1_table(j, dims);
}

}  // namespace paradim
