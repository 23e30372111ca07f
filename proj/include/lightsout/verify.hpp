#pragma once

// Self-check suites: each one sweeps a family of instances and compares a
// closed form or reduction against direct computation.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lightsout/report.hpp"

namespace lightsout {

struct VerifyOptions {
  /// Drives every sampled sweep; exhaustive sweeps ignore it.
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Counterexamples kept per suite.
  std::size_t max_counterexamples = 10;
};

struct SuiteResult {
  std::string name;
  std::string description;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// The first failures in sweep order, which runs from small to large.
  Json counterexamples = Json::array();

  [[nodiscard]] bool passed() const noexcept { return failures == 0 && checks > 0; }
};

/// Every suite name, in run order ("all" excluded).
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown name.
[[nodiscard]] SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});
/// `name` may be "all".
[[nodiscard]] std::vector<SuiteResult> run_suites(std::string_view name,
                                                  const VerifyOptions& options = {});

[[nodiscard]] Json to_json(const SuiteResult& result);

}  // namespace lightsout
