#pragma once

#include <span>
#include <vector>

namespace hideopt {

// How out-of-bounds coordinates are repaired. Clamp is the default; Reflect
// mirrors the overshoot back into the box.
enum class BoundaryPolicy { Clamp, Reflect };

struct SearchSpace {
    int dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;

    static SearchSpace box(int dim, double lo, double hi);

    // Throws std::invalid_argument unless dim >= 1 and lower[j] < upper[j].
    void validate() const;

    double width(int j) const { return upper[j] - lower[j]; }
    double mean_width() const;
    bool contains(std::span<const double> x) const;
};

std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchSpace& space);
std::vector<double> reflect_to_bounds(std::span<const double> position, const SearchSpace& space);
std::vector<double> repair_to_bounds(std::span<const double> position, const SearchSpace& space,
                                     BoundaryPolicy policy);

}  // namespace hideopt
