#include "hideopt/search_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hideopt {

SearchSpace SearchSpace::box(int dim, double lo, double hi) {
    SearchSpace s;
    s.dim = dim;
    s.lower.assign(static_cast<size_t>(dim), lo);
    s.upper.assign(static_cast<size_t>(dim), hi);
    s.validate();
    return s;
}

void SearchSpace::validate() const {
    if (dim < 1) throw std::invalid_argument("SearchSpace: dim must be >= 1");
    if (lower.size() != static_cast<size_t>(dim) || upper.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("SearchSpace: bound vectors must have length dim");
    for (int j = 0; j < dim; ++j) {
        if (!(lower[j] < upper[j]))
            throw std::invalid_argument("SearchSpace: lower[" + std::to_string(j) +
                                        "] must be < upper[" + std::to_string(j) + "]");
    }
}

double SearchSpace::mean_width() const {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += width(j);
    return s / dim;
}

bool SearchSpace::contains(std::span<const double> x) const {
    if (x.size() != static_cast<size_t>(dim)) return false;
    for (int j = 0; j < dim; ++j)
        if (x[j] < lower[j] || x[j] > upper[j]) return false;
    return true;
}

static void check_length(std::span<const double> position, const SearchSpace& space) {
    if (position.size() != static_cast<size_t>(space.dim))
        throw std::invalid_argument("position length " + std::to_string(position.size()) +
                                    " does not match space dim " + std::to_string(space.dim));
}

std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchSpace& space) {
    check_length(position, space);
    std::vector<double> out(position.begin(), position.end());
    for (int j = 0; j < space.dim; ++j) {
        if (out[j] < space.lower[j])
            out[j] = space.lower[j];
        else if (out[j] > space.upper[j])
            out[j] = space.upper[j];
    }
    return out;
}

std::vector<double> reflect_to_bounds(std::span<const double> position, const SearchSpace& space) {
    check_length(position, space);
    std::vector<double> out(position.begin(), position.end());
    for (int j = 0; j < space.dim; ++j) {
        double lo = space.lower[j], hi = space.upper[j], w = hi - lo;
        double v = out[j];
        if (v >= lo && v <= hi) continue;
        // fold into a 2w period, then mirror
        double t = std::fmod(v - lo, 2.0 * w);
        if (t < 0) t += 2.0 * w;
        out[j] = t <= w ? lo + t : hi - (t - w);
    }
    return out;
}

std::vector<double> repair_to_bounds(std::span<const double> position, const SearchSpace& space,
                                     BoundaryPolicy policy) {
    return policy == BoundaryPolicy::Clamp ? clamp_to_bounds(position, space)
                                           : reflect_to_bounds(position, space);
}

}  // namespace hideopt
