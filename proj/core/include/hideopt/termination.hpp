#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hideopt {

struct Termination {
    int max_generations = 1000;
    std::optional<long long> max_evaluations;
    std::optional<double> target_fitness;

    void validate() const {
        if (max_generations < 1) throw std::invalid_argument("Termination: max_generations must be >= 1");
        if (max_evaluations && *max_evaluations < 1)
            throw std::invalid_argument("Termination: max_evaluations must be >= 1");
    }

    // An evaluation budget converts to an effective generation count of
    // budget / NP before the run starts; the generation-indexed schedule
    // (HC * G_t) needs a known G_t.
    int effective_generations(int np) const {
        int g = max_generations;
        if (max_evaluations) {
            long long by_budget = *max_evaluations / np;
            g = static_cast<int>(std::min<long long>(g, std::max<long long>(1, by_budget)));
        }
        return g;
    }
};

}  // namespace hideopt
