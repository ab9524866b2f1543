#pragma once

// Runs every identity against its enumeration oracle up to given bounds.

#include <cstdint>
#include <string>
#include <vector>

namespace partparity {

struct VerifyOptions {
  std::uint32_t max_n = 20;
  std::uint32_t max_i = 20;
  /// Name of a suite whose computed side is perturbed at its last index.
  /// Exercises the failure path; empty for a normal run.
  std::string inject_fault;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string counterexample;  // first failure, empty when passed
};

/// Suite names in the order they run.
const std::vector<std::string>& suite_names();

/// Throws std::domain_error on a zero bound or an unknown fault target.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace partparity
