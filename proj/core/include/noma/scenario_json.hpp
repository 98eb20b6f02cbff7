#pragma once

// JSON scenario documents. Keys mirror the Scenario fields; dB-valued inputs
// carry a `_db` suffix and are converted on load. Unknown keys are rejected.
// Schema reference: docs/scenario_schema.md.

#include <filesystem>
#include <string>
#include <string_view>

#include "noma/model.hpp"

namespace noma {

/// Parses and validates a scenario. Throws ParseError naming the JSON path
/// on schema violations and ValidationError on model invariant violations.
Scenario scenario_from_json(std::string_view text);

Scenario load_scenario_file(const std::filesystem::path& path);

/// Inverse of scenario_from_json, dB-valued fields written in dB.
std::string scenario_to_json(const Scenario& scenario, int indent = 2);

}  // namespace noma
