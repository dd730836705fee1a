#pragma once

#include <string>
#include <vector>

namespace unfolder {

struct CheckInfo {
  std::string id;
  /// "props" or "paper".
  std::string suite;
  std::string description;
};

struct CheckResult {
  std::string id;
  std::string suite;
  bool passed = false;
  /// Failure reason, or a short summary of what was checked.
  std::string detail;
};

/// Registered checks in id order.
std::vector<CheckInfo> list_checks();
/// Suite "all", "props" or "paper"; throws BadParameter otherwise. Checks run
/// in parallel, results come back in id order.
std::vector<CheckResult> run_checks(const std::string& suite);
/// One line per check plus a summary line.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace unfolder
