#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hideopt/bench/suite.hpp"
#include "hideopt/harness/registry.hpp"

namespace hideopt::harness {

struct AlgorithmSpec {
    std::string name;             // display name (unique within a config)
    std::string algorithm;        // registry key; defaults to name
    nlohmann::json params;        // parameter overrides

    const std::string& registry_key() const { return algorithm.empty() ? name : algorithm; }
};

struct FunctionSpec {
    std::string id;   // suite id ("f1".."f30") or base-function id
    int dim = 10;
    std::optional<std::string> data_file;  // external shift/rotation instance
    std::optional<std::string> base_id;    // base function behind data_file
};

struct ExperimentConfig {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<FunctionSpec> functions;
    int runs = 100;
    Termination termination;
    std::uint64_t base_seed = 1;
    std::string output_dir = ".";
    int trace_stride = 1;
    int jobs = 1;
    std::uint64_t suite_seed = bench::kDefaultSuiteSeed;

    void validate() const;
};

struct RunStats {
    double best = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<double> per_run_finals;
    int failed_runs = 0;
};

// One (algorithm, function) pair. mean_trace[k] is the mean best-so-far at
// generation trace_generations[k], averaged across runs.
struct Cell {
    std::string algorithm;
    std::string function_id;
    int dim = 0;
    RunStats stats;
    std::vector<int> trace_generations;
    std::vector<double> mean_trace;
    double wall_time_s = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<Cell> cells;

    const Cell* find(const std::string& algorithm, const std::string& function_id, int dim) const;
};

// Resolves a FunctionSpec to an objective (suite entry, raw base function, or
// external data file).
ObjectiveFunction resolve_function(const FunctionSpec& spec, std::uint64_t suite_seed);

// Runs R seeds per (algorithm, function) pair; run r uses seed base_seed + r.
// Runs execute on up to config.jobs threads; the report is independent of
// the thread count (each run owns its RNG and writes a preassigned slot).
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace hideopt::harness
