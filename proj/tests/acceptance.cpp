// Prints one PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include <iostream>

#include "paradim/corpus.hpp"
#include "paradim/verify.hpp"

int main() {
  using namespace paradim;
  bool ok = true;
  std::size_t items = 0;
  double seconds = 0;
  for (int id = 1; id <= kNumCriteria; ++id) {
    const CriterionResult r = run_criterion(id, read_data_file);
    ok = ok && r.pass();
    items += r.items.size();
    seconds += r.seconds;
    std::cout << "Criterion " << id << ": " << (r.pass() ? "PASS" : "FAIL") << "  " << r.title << " ("
              << r.items.size() << " items, " << r.failures() << " failed, " << r.seconds << " s)\n";
    if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
    for (const auto& c : r.items) {
      if (c.report_only) {
        std::cout << "  note " << c.name << ": printed " << c.expected << ", computed " << c.actual << "\n";
      } else if (!c.pass) {
        std::cout << "  FAIL " << c.name << ": expected " << c.expected << ", actual " << c.actual << "\n";
      }
    }
  }
  std::cout << "Total items: " << items << ", time " << seconds << " s\n";
  return ok ? 0 : 1;
}
