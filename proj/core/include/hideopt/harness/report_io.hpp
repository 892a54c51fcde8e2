#pragma once

#include <string>

#include "hideopt/harness/wtl.hpp"

namespace hideopt::harness {

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

void save_report(const ExperimentReport& report, const std::string& path);
ExperimentReport load_report(const std::string& path);

// Aligned best/mean table per function with a w/t/l footer row.
std::string render_table(const ExperimentReport& report, const WTLSummary& best,
                         const WTLSummary& mean);

std::string render_wtl(const WTLSummary& summary);

}  // namespace hideopt::harness
