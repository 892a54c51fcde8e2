#pragma once

#include <string>
#include <vector>

#include "hideopt/harness/experiment.hpp"

namespace hideopt::harness {

enum class Metric { Best, Mean };

const char* to_string(Metric m);

struct WTLEntry {
    int w = 0, t = 0, l = 0;
};

struct FunctionOutcome {
    std::string function_id;
    int dim = 0;
    std::vector<int> best_algorithms;  // indices into WTLSummary::algorithms
};

struct WTLSummary {
    Metric metric = Metric::Best;
    double tolerance = 1e-8;
    std::vector<std::string> algorithms;
    std::vector<FunctionOutcome> outcomes;
    std::vector<WTLEntry> counts;  // parallel to algorithms
};

// Values within tolerance of the minimum form the leading group: a singleton
// group is a win, a larger group ties, everyone else loses.
WTLSummary compute_wtl(const std::vector<std::string>& algorithms,
                       const std::vector<std::string>& function_ids,
                       const std::vector<std::vector<double>>& values_per_function, Metric metric,
                       double tolerance = 1e-8);

// Same over a report; throws if any algorithm is missing a function cell.
WTLSummary compute_wtl(const ExperimentReport& report, Metric metric, double tolerance = 1e-8);

}  // namespace hideopt::harness
