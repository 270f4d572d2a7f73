#pragma once

// Internal glue between the report structs and nlohmann/json. Not installed;
// the public surface exposes serialized strings only.

#include <json.hpp>

#include "kerrep/kernel_verifier.hpp"
#include "kerrep/reduction.hpp"

namespace kerrep::json_support {

nlohmann::json config_json(const VerifierConfig& cfg);
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json analysis_json(const AnalysisChecks& checks);

}  // namespace kerrep::json_support
