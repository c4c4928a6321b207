// Command-line front end for the paradim library.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "paradim/arith.hpp"
#include "paradim/compact.hpp"
#include "paradim/corpus.hpp"
#include "paradim/elliptic.hpp"
#include "paradim/errors.hpp"
#include "paradim/paramodular.hpp"
#include "paradim/verify.hpp"

namespace {

using namespace paradim;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_prime(long p) {
  if (!is_prime(p)) throw UsageError("--p must be prime, got " + std::to_string(p));
}

struct DimRecord {
  long p, k, j;
  std::string space;
  Integer plus, minus;
  std::string note;
};

DimRecord compute_dim(long p, long k, long j, const std::string& space) {
  require_prime(p);
  if (j < 0) throw UsageError("--j must be >= 0");
  DimRecord r{p, k, j, space, 0, 0, ""};
  if (j % 2 != 0) {
    r.note = "odd j";
    return r;
  }
  if (space == "S") {
    if (k < 3) throw UsageError("--k must be >= 3 for space S");
    const ParamodularDims d = dim_paramodular_signed(p, k, j);
    r.plus = d.plus;
    r.minus = d.minus;
  } else if (space == "A") {
    if (j != 0) throw UnsupportedJ("space A is available for j = 0 only");
    const SignedPair a = dim_A_signed(p, k);
    r.plus = a.plus;
    r.minus = a.minus;
  } else {
    if (k < 3) throw UsageError("--k must be >= 3 for space M");
    const CompactDims m = dim_M_signed(p, k + j - 3, k - 3);
    r.plus = m.plus;
    r.minus = m.minus;
  }
  return r;
}

void print_dim(const DimRecord& r, const std::string& format) {
  const Integer total = r.plus + r.minus;
  if (format == "json") {
    json o;
    o["p"] = r.p;
    o["k"] = r.k;
    o["j"] = r.j;
    o["space"] = r.space;
    o["plus"] = r.plus.get_str();
    o["minus"] = r.minus.get_str();
    o["total"] = total.get_str();
    o["source"] = "formula";
    if (!r.note.empty()) o["note"] = r.note;
    std::cout << o.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "p,k,j,space,plus,minus,total,source,note\n"
              << r.p << "," << r.k << "," << r.j << "," << r.space << "," << r.plus << "," << r.minus << ","
              << total << ",formula," << r.note << "\n";
  } else {
    std::cout << "plus=" << r.plus << " minus=" << r.minus << " total=" << total;
    if (!r.note.empty()) std::cout << " note=\"" << r.note << "\"";
    std::cout << "\n";
  }
}

void print_table(long k, long pmin, long pmax, const std::string& format) {
  if (k < 3) throw UsageError("--k must be >= 3");
  const long f = k - 3;
  const bool csv = format == "csv";
  std::vector<json> records;
  if (csv) std::cout << "p,H,R,M_plus,M_minus,s2_plus,s2_minus,S_plus,S_minus\n";
  for (long p : primes_up_to(pmax)) {
    if (p < pmin) continue;
    const CompactDims m = dim_M_signed(p, f, f);
    const ParamodularDims s = dim_paramodular_signed(p, k, 0);
    const long s2p = dim_new_gamma0_signed(p, 2, ALSign::plus);
    const long s2m = dim_new_gamma0_signed(p, 2, ALSign::minus);
    if (csv) {
      std::cout << p << "," << m.total << "," << m.trace << "," << m.plus << "," << m.minus << "," << s2p << ","
                << s2m << "," << s.plus << "," << s.minus << "\n";
    } else if (format == "json") {
      json o;
      o["p"] = p;
      o["H"] = m.total.get_str();
      o["R"] = m.trace.get_str();
      o["M_plus"] = m.plus.get_str();
      o["M_minus"] = m.minus.get_str();
      o["s2_plus"] = s2p;
      o["s2_minus"] = s2m;
      o["S_plus"] = s.plus.get_str();
      o["S_minus"] = s.minus.get_str();
      std::cout << o.dump() << "\n";
    } else {
      std::cout << "p=" << p << " H=" << m.total << " R=" << m.trace << " M+=" << m.plus << " M-=" << m.minus
                << " s2+=" << s2p << " s2-=" << s2m << " S+=" << s.plus << " S-=" << s.minus << "\n";
    }
  }
}

void print_hilbert(long p, const std::string& space, long nmax, bool fit) {
  require_prime(p);
  const Space s = parse_space(space);
  const auto seq = space_dimensions(p, s, nmax + 1);
  std::cout << (space_indexed_by_f(s) ? "f" : "k") << ": ";
  for (std::size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i];
  std::cout << "\n";
  if (!fit) return;
  const HilbertSeries h = hilbert_series(p, s, std::max(nmax, 120L));
  std::cout << "numerator: " << format_poly(h.gf.numerator) << "\n";
  std::cout << "denominator:";
  for (int a : h.gf.denom) std::cout << " (1-t^" << a << ")";
  std::cout << "\n";
  std::cout << "palindromic: " << (is_palindromic(h.gf) ? "yes" : "no") << "\n";
}

int run_verify(const std::string& only, bool show_all) {
  std::vector<int> ids;
  if (only.empty()) {
    for (int i = 1; i <= kNumCriteria; ++i) ids.push_back(i);
  } else {
    ids = criteria_in_group(only);
    if (ids.empty()) throw UsageError("unknown verify group " + only);
  }
  bool ok = true;
  std::size_t items = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, read_data_file);
    items += r.items.size();
    ok = ok && r.pass();
    std::cout << "Criterion " << id << " [" << r.group << "] " << r.title << ": " << (r.pass() ? "PASS" : "FAIL")
              << " (" << r.items.size() << " items, " << r.failures() << " failed)\n";
    if (!r.error.empty()) std::cout << "  ERROR: " << r.error << "\n";
    for (const auto& c : r.items) {
      const bool bad = !c.pass && !c.report_only;
      if (!bad && !show_all && !c.report_only) continue;
      std::cout << "  " << (bad ? "FAIL" : (c.report_only ? "NOTE" : "ok")) << " " << c.name << ": expected "
                << c.expected << ", actual " << c.actual << "\n";
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << " " << items << " items\n";
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimension formulas for paramodular and algebraic modular forms of prime level"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Timing information on stderr");

  long p = 0, k = 0, j = 0, pmin = 2, pmax = 0, kmax = 0, nmax = 0;
  std::string space = "S", format = "text", only;
  bool fit = false, show_all = false;

  auto* dim = app.add_subcommand("dim", "Signed dimensions for one weight");
  dim->add_option("--p", p, "Prime level")->required();
  dim->add_option("--k", k, "Weight k")->required();
  dim->add_option("--j", j, "Symmetric power j");
  dim->add_option("--space", space, "S (cusp), A (full), M (compact)")->check(CLI::IsMember({"S", "A", "M"}));
  dim->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* table = app.add_subcommand("table", "Weight k table over primes");
  table->add_option("--k", k, "Weight k")->required();
  table->add_option("--pmax", pmax, "Largest prime")->required();
  table->add_option("--pmin", pmin, "Smallest prime");
  table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* hilbert = app.add_subcommand("hilbert", "Dimension sequence and Hilbert series");
  hilbert->add_option("--p", p, "Prime level")->required();
  hilbert->add_option("--space", space, "S+, S-, A+, A-, A, M+, M-, M")
      ->required()
      ->check(CLI::IsMember({"S+", "S-", "A+", "A-", "A", "M+", "M-", "M"}));
  hilbert->add_option("--nmax", nmax, "Largest index")->required()->check(CLI::NonNegativeNumber);
  hilbert->add_flag("--fit", fit, "Fit the numerator over the registry denominator");

  auto* search = app.add_subcommand("search", "Searches");
  auto* zero3 = search->add_subcommand("zero3", "Primes with dim S_3^+(K(p)) = 0");
  search->require_subcommand(1);
  zero3->add_option("--pmax", pmax)->required();

  auto* biascmd = app.add_subcommand("bias", "Zeros of (-1)^k (dim S_k^+ - dim S_k^-)");
  biascmd->add_option("--pmax", pmax)->required();
  biascmd->add_option("--kmax", kmax)->required();

  auto* verify = app.add_subcommand("verify", "Check the embedded corpus");
  verify->add_option("--only", only, "Group: tables, gf, weight3, bias, palindromic, quaternion, characters, "
                                     "invariants, vector");
  verify->add_flag("--all", show_all, "List passing items too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = kExitOk;
  try {
    if (*dim) {
      print_dim(compute_dim(p, k, j, space), format);
    } else if (*table) {
      print_table(k, pmin, pmax, format);
    } else if (*hilbert) {
      print_hilbert(p, space, nmax, fit);
    } else if (*zero3) {
      for (long q : search_weight3_zero(pmax)) std::cout << q << "\n";
    } else if (*biascmd) {
      for (auto [q, w] : check_bias_region(pmax, kmax)) std::cout << q << "," << w << "\n";
    } else if (*verify) {
      rc = run_verify(only, show_all);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadWeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedJ& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const MissingData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const MissingJacobiData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  if (verbose) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "elapsed " << s << " s\n";
  }
  return rc;
}
