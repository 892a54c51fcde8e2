#pragma once

#include <vector>

#include "hideopt/objective.hpp"
#include "hideopt/rng.hpp"

namespace hideopt::bench {

// z = M * (scale * (x - o)); M row-major dim x dim, orthogonal.
struct Transform {
    std::vector<double> shift;
    std::vector<double> rotation;  // row-major; empty means identity
    double scale = 1.0;
    int dim = 0;

    static Transform identity(int dim);

    std::vector<double> apply(std::span<const double> x) const;

    // max |M^T M - I|; 0 for the implicit identity.
    double orthogonality_error() const;
    void validate() const;  // throws if error >= 1e-10 or sizes disagree
};

// Haar-ish random orthogonal matrix: modified Gram-Schmidt with a
// reorthogonalization pass over a seeded matrix of standard normal deviates.
std::vector<double> random_orthogonal(int dim, RngStream& rng);

// g(x) = f(M * (scale * (x - o))) + bias. When f's optimum is at the origin
// the result carries optimum (o, f_opt + bias).
ObjectiveFunction apply_transform(const ObjectiveFunction& f, const Transform& t, double bias,
                                  const SearchSpace& outer_space, const std::string& id);

}  // namespace hideopt::bench
