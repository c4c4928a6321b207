#include "paradim/corpus.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace paradim {

const std::string& embedded_file(const std::string& name) {
  const auto& files = embedded_files();
  auto it = files.find(name);
  if (it == files.end()) throw DataError("no embedded data file " + name);
  return it->second;
}

std::string read_data_file(const std::string& name) {
  const char* dir = std::getenv("PARADIM_DATA_DIR");
  if (dir == nullptr || *dir == '\0') return embedded_file(name);
  const std::string path = std::string(dir) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw DataError("missing CSV column " + name);
}

bool CsvTable::has_column(const std::string& name) const {
  for (const auto& h : header)
    if (h == name) return true;
  return false;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) out.push_back(cell);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (t.header.empty()) {
      t.header = split(line);
      continue;
    }
    auto row = split(line);
    if (row.size() != t.header.size()) throw DataError("ragged CSV row: " + line);
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

// Recursive descent over sums of signed monomials and parenthesized products.
class NumeratorParser {
 public:
  explicit NumeratorParser(std::string s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  IntPoly parse() {
    IntPoly r = product();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  IntPoly product() {
    IntPoly r = factor();
    while (peek() == '*') {
      ++pos_;
      r = r * factor();
    }
    return r;
  }

  IntPoly factor() {
    if (peek() == '(') {
      ++pos_;
      IntPoly r = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    return sum();
  }

  IntPoly sum() {
    IntPoly r;
    bool first = true;
    while (pos_ < s_.size() && peek() != ')' && peek() != '*') {
      long sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected sign");
      }
      r = r + monomial(sign);
      first = false;
    }
    if (first) fail("empty sum");
    return r;
  }

  IntPoly monomial(long sign) {
    Integer coeff = 1;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    if (!digits.empty()) coeff = Integer(digits);
    long e = 0;
    if (peek() == 't') {
      ++pos_;
      e = 1;
      if (peek() == '^') {
        ++pos_;
        std::string ex;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ex += s_[pos_++];
        if (ex.empty()) fail("missing exponent");
        e = std::stol(ex);
      }
    } else if (digits.empty()) {
      fail("expected monomial");
    }
    std::vector<Integer> c(e + 1);
    c[e] = sign * coeff;
    return IntPoly(std::move(c));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw DataError("cannot parse numerator '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_numerator(const std::string& expr) { return NumeratorParser(expr).parse(); }

RationalGF GFEntry::normalized() const {
  RationalGF gf{numerator, denom};
  // 1/(1+t^a) = (1-t^a)/(1-t^{2a})
  for (int a : denom_plus) {
    std::vector<Integer> f(a + 1);
    f[0] = 1;
    f[a] = -1;
    gf.numerator = gf.numerator * IntPoly(std::move(f));
    gf.denom.push_back(2 * a);
  }
  return gf;
}

std::vector<GFEntry> parse_gf_corpus(const std::string& json_text) {
  std::vector<GFEntry> out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& s : doc.at("series")) {
      GFEntry e;
      e.id = s.at("id").get<std::string>();
      e.family = s.at("family").get<std::string>();
      e.p = s.at("p").get<long>();
      e.j = s.value("j", 0L);
      e.index = s.at("index").get<std::string>().at(0);
      e.f1_offset = s.value("f1_offset", 0L);
      e.numerator_text = s.at("numerator").get<std::string>();
      e.numerator = parse_numerator(e.numerator_text);
      e.denom = s.at("denominator").get<std::vector<int>>();
      if (s.contains("denominator_plus")) e.denom_plus = s.at("denominator_plus").get<std::vector<int>>();
      if (s.contains("erratum")) e.erratum = s.at("erratum").get<std::string>();
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("generating function corpus: ") + ex.what());
  }
  return out;
}

}  // namespace paradim
