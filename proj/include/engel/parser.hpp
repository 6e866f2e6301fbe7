#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "engel/catalog.hpp"
#include "engel/error.hpp"

namespace engel {

// expr := NAME "(" INT { "," INT } ")", whitespace allowed between tokens.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Family names accepted by the grammar.
const std::vector<std::string>& group_families();
// Number of arguments each family takes.
std::size_t family_arity(const std::string& family);

// Throws ParseError for syntax errors, unknown families and arity mismatches. Argument
// constraints are left to the constructors.
GroupSpecExpr parse_group_expr(std::string_view text);
// Canonical text: no whitespace, e.g. "PSL(2,11)".
std::string print_group_expr(const GroupSpecExpr& e);

}  // namespace engel
