#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "engel/catalog.hpp"

namespace engel {

enum class Suite { core, extended, nightly, full };
std::optional<Suite> parse_suite(const std::string& name);

enum class Outcome { pass, fail, inconclusive };
const char* outcome_name(Outcome o);

struct CheckResult {
  int criterion = 0;
  std::string title;
  Outcome outcome = Outcome::fail;
  std::vector<std::string> details;  // one line per sub-check, prefixed "ok" or "FAIL"
  double seconds = 0;
};

struct CheckSpec {
  int criterion;
  std::string title;
  Suite first_suite;  // smallest suite that runs this check
  std::function<CheckResult(Suite)> run;
};

// All checks in criterion order. The suite argument of `run` may shrink the instance list.
const std::vector<CheckSpec>& claim_checks();
std::vector<CheckResult> run_suite(Suite suite, std::ostream* progress = nullptr);
// Runs one check at the given depth.
CheckResult run_check(int criterion, Suite suite = Suite::full);

// Instance lists shared with the tests.
std::vector<GroupSpecExpr> weak_connectivity_corpus();
std::vector<GroupSpecExpr> small_corpus();   // orders <= 200
std::vector<GroupSpecExpr> medium_corpus();  // orders <= 2000, stored tables

}  // namespace engel
