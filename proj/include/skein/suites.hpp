#pragma once

// The invariant suites behind `skein verify`: bigon, qtorus, torus-skein,
// chebyshev and counts.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skein/report.hpp"

namespace skein {

enum class ExecutionMode { Serial, Parallel };

struct VerifyOptions {
  unsigned order = 3;
  std::uint64_t seed = 1;
  unsigned trials = 100;
  unsigned max_exp = 6;
  unsigned kmax = 6;
  std::optional<std::string> triangulation_path;
  ExecutionMode mode = ExecutionMode::Parallel;
};

struct TrialSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Message of the lowest-numbered failing trial.
  std::string first_failure;

  bool ok() const { return failed == 0; }
  CheckOutcome outcome(const std::string& what) const;
};

/// Runs trial(i) for i < count; trial returns a failure message or nothing.
/// Exceptions count as failures. Results do not depend on the mode.
TrialSummary run_trials(std::size_t count, ExecutionMode mode,
                        const std::function<std::optional<std::string>(std::size_t)>& trial);

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for unknown suites or unusable options
/// (even N, unreadable triangulation file).
Report run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace skein
