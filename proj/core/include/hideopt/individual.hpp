#pragma once

#include <limits>
#include <vector>

namespace hideopt {

struct Individual {
    std::vector<double> position;
    double fitness = std::numeric_limits<double>::quiet_NaN();
    bool evaluated = false;
};

struct Population {
    std::vector<Individual> members;
    int generation = 0;

    int size() const { return static_cast<int>(members.size()); }
};

// Comparison key: non-finite fitness (NaN/inf from a user objective) compares
// as +infinity so the incumbent always survives selection.
double fitness_key(const Individual& ind);

// Strict improvement only; ties keep the incumbent. Throws
// std::invalid_argument if either side is unevaluated.
const Individual& select_greedy(const Individual& current, const Individual& trial);

// Best (lowest fitness_key) member; ties resolve to the lowest index.
const Individual& best_member(const Population& pop);
int best_index(const Population& pop);

}  // namespace hideopt
