#include "hideopt/bench/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace hideopt::bench {

Transform Transform::identity(int dim) {
    Transform t;
    t.dim = dim;
    t.shift.assign(static_cast<size_t>(dim), 0.0);
    t.scale = 1.0;
    return t;
}

std::vector<double> Transform::apply(std::span<const double> x) const {
    std::vector<double> y(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) y[j] = scale * (x[j] - shift[j]);
    if (rotation.empty()) return y;
    std::vector<double> z(static_cast<size_t>(dim), 0.0);
    for (int r = 0; r < dim; ++r) {
        const double* row = rotation.data() + static_cast<size_t>(r) * dim;
        double s = 0.0;
        for (int c = 0; c < dim; ++c) s += row[c] * y[c];
        z[r] = s;
    }
    return z;
}

double Transform::orthogonality_error() const {
    if (rotation.empty()) return 0.0;
    double worst = 0.0;
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            double s = 0.0;
            for (int r = 0; r < dim; ++r)
                s += rotation[static_cast<size_t>(r) * dim + a] *
                     rotation[static_cast<size_t>(r) * dim + b];
            double err = std::fabs(s - (a == b ? 1.0 : 0.0));
            if (err > worst) worst = err;
        }
    }
    return worst;
}

void Transform::validate() const {
    if (dim < 1) throw std::invalid_argument("Transform: dim must be >= 1");
    if (shift.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("Transform: shift length must equal dim");
    if (!rotation.empty() && rotation.size() != static_cast<size_t>(dim) * dim)
        throw std::invalid_argument("Transform: rotation must hold dim*dim entries");
    if (!(scale > 0.0)) throw std::invalid_argument("Transform: scale must be positive");
    if (orthogonality_error() >= 1e-10)
        throw std::invalid_argument("Transform: rotation matrix is not orthogonal");
}

std::vector<double> random_orthogonal(int dim, RngStream& rng) {
    std::vector<double> m(static_cast<size_t>(dim) * dim);
    for (auto& v : m) v = rng.normal();

    // Modified Gram-Schmidt over rows, with one reorthogonalization pass.
    auto row = [&](int r) { return m.data() + static_cast<size_t>(r) * dim; };
    for (int r = 0; r < dim; ++r) {
        double* cur = row(r);
        for (int pass = 0; pass < 2; ++pass) {
            for (int p = 0; p < r; ++p) {
                const double* prev = row(p);
                double dot = 0.0;
                for (int j = 0; j < dim; ++j) dot += cur[j] * prev[j];
                for (int j = 0; j < dim; ++j) cur[j] -= dot * prev[j];
            }
        }
        double norm = 0.0;
        for (int j = 0; j < dim; ++j) norm += cur[j] * cur[j];
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw std::runtime_error("random_orthogonal: degenerate draw");
        for (int j = 0; j < dim; ++j) cur[j] /= norm;
    }
    return m;
}

ObjectiveFunction apply_transform(const ObjectiveFunction& f, const Transform& t, double bias,
                                  const SearchSpace& outer_space, const std::string& id) {
    t.validate();
    if (t.dim != f.space.dim || t.dim != outer_space.dim)
        throw std::invalid_argument("apply_transform: dimension mismatch");

    ObjectiveFunction g;
    g.id = id;
    g.space = outer_space;
    g.bias = bias;
    auto inner = f.eval;
    Transform tc = t;
    g.eval = [inner, tc, bias](std::span<const double> x) { return inner(tc.apply(x)) + bias; };

    if (f.optimum) {
        bool at_origin = true;
        for (double v : f.optimum->position) at_origin = at_origin && v == 0.0;
        if (at_origin) {
            ObjectiveFunction::Optimum opt;
            opt.position = t.shift;
            opt.value = f.optimum->value + bias;
            g.optimum = opt;
        }
    }
    return g;
}

}  // namespace hideopt::bench
