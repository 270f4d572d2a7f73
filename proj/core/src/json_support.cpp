#include "json_support.hpp"

namespace kerrep::json_support {

using nlohmann::json;

json config_json(const VerifierConfig& cfg) {
  return json{
      {"n", cfg.n},
      {"qMax", cfg.q_max},
      {"r2Threshold", to_string(cfg.r2_threshold)},
      {"eq1Constant", to_string(cfg.eq1_constant)},
      {"cover", cfg.cover.str()},
      {"depth", cfg.depth},
  };
}

json report_json(const VerificationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(json{
        {"start", v.start},
        {"q", v.q},
        {"length", v.length},
        {"rule", std::string(rule_name(v.rule))},
    });
  }
  return json{
      {"config", config_json(report.config)},
      {"modulus", report.modulus},
      {"textLength", report.text_length},
      {"kernelWindowCount", report.kernel_window_count},
      {"violations", std::move(violations)},
      {"derivedBounds",
       json{
           {"lengthBound", report.derived_bounds.length_bound},
           {"depth", report.derived_bounds.depth},
           {"testWordLength", report.derived_bounds.test_word_length},
       }},
  };
}

json analysis_json(const AnalysisChecks& checks) {
  json out{
      {"phaseRigidity", checks.phase_rigidity},
      {"predecessorUniqueness", checks.predecessor_uniqueness},
  };
  if (checks.kernel_preimage_closure.has_value()) {
    out["kernelPreimageClosure"] = json{
        {"pass", *checks.kernel_preimage_closure},
        {"exhaustiveDepth", checks.closure_exhaustive_depth},
        {"exhaustiveWindows", checks.closure_exhaustive_windows},
        {"sampledWindows", checks.closure_sampled_windows},
    };
  }
  if (checks.reconstruction.has_value()) {
    out["reconstruction"] = json{
        {"pass", *checks.reconstruction},
        {"windows", checks.reconstruction_windows},
    };
  }
  return out;
}

}  // namespace kerrep::json_support
