// One line per acceptance criterion, followed by the sub-check details.
#include <iostream>

#include "engel/verify.hpp"

int main() {
  int failures = 0;
  for (const auto& spec : engel::claim_checks()) {
    engel::CheckResult r = engel::run_check(spec.criterion, engel::Suite::full);
    std::cout << "criterion " << r.criterion << ": " << engel::outcome_name(r.outcome) << "  " << r.title << "  ("
              << r.seconds << " s)\n";
    for (const auto& d : r.details) std::cout << "      " << d << "\n";
    std::cout.flush();
    if (r.outcome == engel::Outcome::fail) ++failures;
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << "\n";
  return failures ? 1 : 0;
}
