#include "engel/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace engel {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupSpecExpr parse() {
    GroupSpecExpr e;
    skip_ws();
    const std::size_t name_at = pos_;
    e.family = name();
    if (family_arity(e.family) == 0) {
      std::vector<std::string> names;
      for (const auto& f : group_families()) names.push_back(f);
      throw ParseError(name_at, names, "unknown group family '" + e.family + "'");
    }
    expect('(');
    e.args.push_back(integer());
    while (true) {
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        e.args.push_back(integer());
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail({"\")\"", "\",\""});
    }
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input"});
    if (e.args.size() != family_arity(e.family))
      throw ParseError(name_at, {}, e.family + " takes " + std::to_string(family_arity(e.family)) +
                                        " argument(s), got " + std::to_string(e.args.size()));
    return e;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    std::string msg = "at offset " + std::to_string(pos_) + ": expected " + join_expected(expected) + ", found " + found;
    throw ParseError(pos_, std::move(expected), msg);
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
      if (pos_ == start && !std::isalpha(static_cast<unsigned char>(s_[pos_]))) break;
      ++pos_;
    }
    if (pos_ == start) fail({"group name"});
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail({"\"" + std::string(1, c) + "\""});
    ++pos_;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw ParseError(start, {"integer"}, "at offset " + std::to_string(start) + ": integer too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

const std::vector<std::string>& group_families() {
  static const std::vector<std::string> names{"S", "A", "C", "D", "Q", "GL", "SL", "PSL", "Sz", "Frob", "Ex4"};
  return names;
}

std::size_t family_arity(const std::string& f) {
  if (f == "S" || f == "A" || f == "C" || f == "D" || f == "Q" || f == "Sz") return 1;
  if (f == "GL" || f == "SL" || f == "PSL" || f == "Frob") return 2;
  if (f == "Ex4") return 3;
  return 0;
}

GroupSpecExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_group_expr(const GroupSpecExpr& e) {
  std::string out = e.family + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.args[i]);
  }
  return out + ")";
}

}  // namespace engel
