#pragma once

#include <string>
#include <vector>

#include "hideopt/objective.hpp"

namespace hideopt::bench {

// Catalog ids: sphere, bent_cigar, zakharov, rosenbrock, rastrigin, ackley,
// griewank, schwefel, levy, expanded_schaffer_f6, high_conditioned_elliptic,
// discus. Each comes with its conventional domain and its canonical optimum
// (origin for most; all-ones for rosenbrock and levy, 420.9687...*ones for
// schwefel). Throws std::invalid_argument on an unknown id.
ObjectiveFunction base_function(const std::string& id, int dim);

const std::vector<std::string>& base_function_ids();

// Same base formula recentred so the optimum sits at the origin (value 0),
// with an internal domain rescale folded in: f(scale * z + offset). This is
// the form the shifted/rotated, hybrid and composition constructors consume.
ObjectiveFunction origin_adapter(const std::string& id, int dim);

// Domain rescale applied inside origin_adapter for a [-100,100] outer box.
double origin_adapter_scale(const std::string& id);

}  // namespace hideopt::bench
