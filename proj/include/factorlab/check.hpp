#pragma once

#include <string>

namespace factorlab {

// Outcome of a structural verification. VacuousPass means the hypothesis
// never applied (for example a lemma about D when D is empty); Skipped means
// a precondition ruled the check out entirely.
enum class CheckStatus { Pass, VacuousPass, Fail, Skipped };

struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // witness on failure, reason otherwise

  bool ok() const { return status != CheckStatus::Fail; }

  static CheckResult pass(std::string d = "") {
    return {CheckStatus::Pass, std::move(d)};
  }
  static CheckResult vacuous(std::string d) {
    return {CheckStatus::VacuousPass, std::move(d)};
  }
  static CheckResult fail(std::string d) {
    return {CheckStatus::Fail, std::move(d)};
  }
  static CheckResult skipped(std::string d) {
    return {CheckStatus::Skipped, std::move(d)};
  }
};

const char* to_label(CheckStatus s);

}  // namespace factorlab
