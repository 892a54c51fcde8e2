#pragma once

#include <cstdint>
#include <vector>

#include "hideopt/individual.hpp"

namespace hideopt {

// Outcome of a single optimizer run. trace[0] is the best fitness right
// after initialization; one further entry is appended per generation, so a
// run of G generations yields G+1 samples. The trace is non-increasing.
struct RunResult {
    Individual best;
    std::vector<double> trace;
    long long evaluations_used = 0;
    long long faults = 0;
    std::uint64_t seed = 0;
};

}  // namespace hideopt
