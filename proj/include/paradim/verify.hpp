#pragma once

#include <functional>
#include <string>
#include <vector>

namespace paradim {

struct CheckItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool report_only = false;  // informational; never fails the run
};

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string title;
  std::vector<CheckItem> items;
  std::string error;  // set when the check itself threw
  double seconds = 0;
  bool pass() const;
  std::size_t failures() const;
};

using DataSource = std::function<std::string(const std::string&)>;

constexpr int kNumCriteria = 10;
// Group name of each criterion: tables, gf, weight3, bias, palindromic, quaternion,
// characters, invariants, vector.
std::string criterion_group(int id);
std::vector<int> criteria_in_group(const std::string& group);
CriterionResult run_criterion(int id, const DataSource& data);

}  // namespace paradim
