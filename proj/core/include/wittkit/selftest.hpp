#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittkit::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// Wall-clock limit for the criterion; 0 means none.
  double time_limit = 0.0;
};

struct Options {
  /// Smaller corpora for criteria 5 and 6.
  bool quick = false;
};

/// Runs every acceptance criterion; never throws (a throwing check is
/// reported as a failure).
std::vector<CriterionResult> run_all(const Options& options);

/// "[PASS] 3 ..." lines; returns true if every criterion passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace wittkit::selftest
