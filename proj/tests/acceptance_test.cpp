// Runs the ten acceptance criteria at full size and prints one line each.
// Exit status is nonzero if any criterion fails or overruns its time limit.

#include <iostream>

#include "wittkit/selftest.hpp"

int main() {
  const auto results = wittkit::selftest::run_all({});
  return wittkit::selftest::report(results, std::cout) ? 0 : 1;
}
