#pragma once

// Verification reports: a list of named checks with pass/fail/error status,
// rendered as JSON in canonical (id-sorted) order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace skein {

enum class CheckStatus { Pass, Fail, Error };

const char* status_name(CheckStatus s);

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::Error;
  std::string detail;
  double elapsed_ms = 0;
};

struct CheckOutcome {
  bool ok = false;
  std::string detail;
};

/// Runs fn, timing it; exceptions become CheckStatus::Error with the message as detail.
Check run_check(const std::string& id, const std::function<CheckOutcome()>& fn);

struct Report {
  std::string suite;
  unsigned order = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void sort_checks();
  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::Pass) == checks.size(); }
  /// 0 when every check passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }
  /// Checks sorted by id. elapsed_ms is omitted when include_timing is false.
  std::string to_json(bool pretty, bool include_timing = true) const;
};

}  // namespace skein
