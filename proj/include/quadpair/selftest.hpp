#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadpair {

struct SelfTestSuite {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions
};

struct SelfTestReport {
  std::vector<SelfTestSuite> suites;
  long long totalChecks() const;
  long long totalFailures() const;
  bool allPassed() const { return totalFailures() == 0; }
};

/// Runs the cross-module invariant suite: oracle equivalences, algebraic
/// identities and regression tables. Deterministic for a fixed seed.
SelfTestReport runSelfTest(uint64_t seed, bool quick);

}  // namespace quadpair
