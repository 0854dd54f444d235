#include "dposet/text_format.hpp"

#include <cctype>
#include <vector>

#include "dposet/canonical.hpp"
#include "dposet/errors.hpp"

namespace dposet {

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view line, int number) : line_(line), number_(number) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  void expect(std::string_view token) {
    skip_space();
    if (line_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int number() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      value = value * 10 + (line_[pos_] - '0');
      if (value > 1000000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return static_cast<int>(value);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(number_, static_cast<int>(pos_) + 1, what);
  }

 private:
  std::string_view line_;
  int number_;
  std::size_t pos_ = 0;
};

std::vector<Pair> parse_pairs(LineCursor& cur, std::string_view label) {
  cur.expect(label);
  cur.expect(":");
  std::vector<Pair> pairs;
  if (cur.at_end()) return pairs;
  do {
    const int i = cur.number();
    cur.expect("<");
    const int j = cur.number();
    pairs.emplace_back(i, j);
  } while (cur.accept(','));
  if (!cur.at_end()) cur.fail("unexpected trailing characters");
  return pairs;
}

std::string format_pairs(const std::vector<Pair>& pairs) {
  std::string s;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    s += k ? ", " : " ";
    s += std::to_string(pairs[k].first) + "<" + std::to_string(pairs[k].second);
  }
  return s;
}

}  // namespace

DoublePoset parse_double_poset(std::string_view text) {
  std::vector<std::pair<std::string_view, int>> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.emplace_back(line, number);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  if (lines.size() != 3) {
    const int at = lines.size() > 3 ? lines[3].second : number;
    throw ParseError(at, 1, "expected exactly three lines: 'dp <n>', 'r1: ...', 'r2: ...'");
  }
  LineCursor header(lines[0].first, lines[0].second);
  header.expect("dp");
  const int n = header.number();
  if (!header.at_end()) header.fail("unexpected trailing characters");
  if (n > kMaxElements) header.fail("at most " + std::to_string(kMaxElements) + " elements supported");

  LineCursor l1(lines[1].first, lines[1].second);
  LineCursor l2(lines[2].first, lines[2].second);
  const std::vector<Pair> p1 = parse_pairs(l1, "r1");
  const std::vector<Pair> p2 = parse_pairs(l2, "r2");
  return {Relation::validate(n, p1), Relation::validate(n, p2)};
}

std::string serialize_labeled(const DoublePoset& d) {
  return "dp " + std::to_string(d.size()) + "\nr1:" + format_pairs(d.first().cover_pairs()) +
         "\nr2:" + format_pairs(d.second().cover_pairs()) + "\n";
}

std::string serialize_double_poset(const DoublePoset& d) {
  return serialize_labeled(canonical_form(d).decode());
}

}  // namespace dposet
