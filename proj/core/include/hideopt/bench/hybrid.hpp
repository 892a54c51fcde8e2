#pragma once

#include <string>
#include <vector>

#include "hideopt/bench/transform.hpp"

namespace hideopt::bench {

struct HybridSpec {
    std::vector<std::string> sub_functions;  // origin-adapter base ids
    std::vector<double> proportions;         // positive, sum to 1
    std::vector<int> permutation;            // 0-based dimension shuffle; empty = identity
};

// Chunk sizes for a given dim by largest-remainder rounding; every chunk is
// bumped to at least 1. Throws if the proportions do not sum to 1 within
// 1e-12 or there are more chunks than dimensions.
std::vector<int> hybrid_chunk_sizes(const std::vector<double>& proportions, int dim);

// g(x) = sum_k base_k(chunk_k of permuted z) + bias, z = t.apply(x).
// Optimum at t.shift with value bias.
ObjectiveFunction make_hybrid(const HybridSpec& spec, const Transform& t, double bias,
                              const SearchSpace& outer_space, const std::string& id);

}  // namespace hideopt::bench
