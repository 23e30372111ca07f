#pragma once

// JSON reports (schema 1) and their conversions.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "lightsout/extremal.hpp"
#include "lightsout/toggling.hpp"

namespace lightsout {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// {"schema", "command", "inputs", "result", "provenance": {"version", "seed"}}.
/// Elapsed time is added to provenance only when given.
[[nodiscard]] Json make_report(const std::string& command, Json inputs, Json result,
                               std::optional<std::uint64_t> seed,
                               std::optional<double> elapsed_ms = std::nullopt);

[[nodiscard]] Json to_json(const ToggleCoset& coset);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
[[nodiscard]] ToggleCoset toggle_coset_from_json(const Json& j);

/// elapsed_ms is written only with `timing`, so default reports are
/// reproducible byte for byte.
[[nodiscard]] Json to_json(const ExtremalReport& report, bool timing = false);
[[nodiscard]] ExtremalReport extremal_report_from_json(const Json& j);

}  // namespace lightsout
