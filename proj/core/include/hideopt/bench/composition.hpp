#pragma once

#include <string>
#include <vector>

#include "hideopt/bench/transform.hpp"

namespace hideopt::bench {

struct CompositionComponent {
    std::string function_id;  // origin-adapter base id
    double sigma = 10.0;
    double lambda = 1.0;
    double bias = 0.0;
    std::vector<double> shift;
};

struct CompositionSpec {
    std::vector<CompositionComponent> components;  // >= 2, distinct shifts
};

// Raw weights w_i = exp(-|x-o_i|^2 / (2 dim sigma_i^2)) / |x-o_i|, switched
// to one-hot when x hits a shift exactly, then normalized to sum 1.
std::vector<double> composition_weights(const CompositionSpec& spec, std::span<const double> x);

// g(x) = sum_i w_hat_i * (lambda_i * f_i(x - o_i) + bias_i) + bias.
// Optimum metadata points at the shift of the smallest-bias component.
ObjectiveFunction make_composition(const CompositionSpec& spec, double bias,
                                   const SearchSpace& outer_space, const std::string& id);

}  // namespace hideopt::bench
