#include "skein/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>

#include "json.hpp"

namespace skein {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

Check run_check(const std::string& id, const std::function<CheckOutcome()>& fn) {
  Check check;
  check.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    const CheckOutcome outcome = fn();
    check.status = outcome.ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.detail = outcome.detail;
  } catch (const std::exception& e) {
    check.status = CheckStatus::Error;
    check.detail = std::string("exception: ") + e.what();
  }
  check.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return check;
}

void Report::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

std::string Report::to_json(bool pretty, bool include_timing) const {
  std::vector<Check> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["N"] = order;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : sorted) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["status"] = status_name(c.status);
    entry["detail"] = c.detail;
    if (include_timing) entry["elapsed_ms"] = std::round(c.elapsed_ms * 1000.0) / 1000.0;
    j["checks"].push_back(std::move(entry));
  }
  j["summary"] = {{"total", checks.size()},
                  {"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"error", count(CheckStatus::Error)}};
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace skein
