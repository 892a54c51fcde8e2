#pragma once

#include <string>
#include <vector>

#include "hideopt/harness/experiment.hpp"

namespace hideopt::harness {

// One CSV per (function, dim): header "generation,<algo>,...", LF endings,
// one row per sampled generation with the mean best-so-far per algorithm.
// Returns the written paths. Throws std::runtime_error naming the path on
// I/O failure.
std::vector<std::string> export_traces(const ExperimentReport& report,
                                       const std::string& output_dir);

// Single-run trace file used by the `run` subcommand.
void write_run_trace(const std::string& path, const std::vector<double>& trace);

}  // namespace hideopt::harness
