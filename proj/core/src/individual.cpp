#include "hideopt/individual.hpp"

#include <cmath>
#include <stdexcept>

namespace hideopt {

double fitness_key(const Individual& ind) {
    return std::isfinite(ind.fitness) ? ind.fitness : std::numeric_limits<double>::infinity();
}

const Individual& select_greedy(const Individual& current, const Individual& trial) {
    if (!current.evaluated || !trial.evaluated)
        throw std::invalid_argument("select_greedy: both individuals must be evaluated");
    return fitness_key(trial) < fitness_key(current) ? trial : current;
}

int best_index(const Population& pop) {
    if (pop.members.empty()) throw std::invalid_argument("best_index: empty population");
    int best = 0;
    for (int i = 1; i < pop.size(); ++i)
        if (fitness_key(pop.members[i]) < fitness_key(pop.members[best])) best = i;
    return best;
}

const Individual& best_member(const Population& pop) { return pop.members[best_index(pop)]; }

}  // namespace hideopt
