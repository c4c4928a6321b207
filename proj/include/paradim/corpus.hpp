#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paradim/exactmath.hpp"

namespace paradim {

// Data files compiled into the library, keyed by file name.
const std::map<std::string, std::string>& embedded_files();
const std::string& embedded_file(const std::string& name);
// Reads from $PARADIM_DATA_DIR when set, else the embedded copy.
std::string read_data_file(const std::string& name);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;
};
CsvTable parse_csv(const std::string& text);

// Parses "2t^4-t^5", "(1+t^5)*(1+t^20)", "t^5*(1+t^15)".
IntPoly parse_numerator(const std::string& expr);

struct GFEntry {
  std::string id;
  std::string family;  // M, M+, M-, Tr, S+, S-, A+, A-, A, Sp4, SL2_2k-2
  long p = 0;
  long j = 0;
  char index = 'k';  // 'k' for weight, 'f' for Young parameter
  long f1_offset = 0;
  std::string numerator_text;
  IntPoly numerator;
  std::vector<int> denom;
  std::vector<int> denom_plus;  // factors (1 + t^a)
  std::optional<std::string> erratum;
  // Same function over a pure (1 - t^a) denominator.
  RationalGF normalized() const;
};
std::vector<GFEntry> parse_gf_corpus(const std::string& json_text);

}  // namespace paradim
