#include "hideopt/bench/composition.hpp"

#include <cmath>
#include <stdexcept>

#include "hideopt/bench/base_functions.hpp"

namespace hideopt::bench {

std::vector<double> composition_weights(const CompositionSpec& spec, std::span<const double> x) {
    size_t n = spec.components.size();
    size_t dim = x.size();
    std::vector<double> w(n, 0.0);

    for (size_t i = 0; i < n; ++i) {
        const auto& o = spec.components[i].shift;
        double d2 = 0.0;
        for (size_t j = 0; j < dim; ++j) {
            double d = x[j] - o[j];
            d2 += d * d;
        }
        if (d2 == 0.0) {
            // exact hit: one-hot on the first matching component
            std::fill(w.begin(), w.end(), 0.0);
            w[i] = 1.0;
            return w;
        }
        double sigma = spec.components[i].sigma;
        w[i] = std::exp(-d2 / (2.0 * static_cast<double>(dim) * sigma * sigma)) / std::sqrt(d2);
    }
    double sum = 0.0;
    for (double v : w) sum += v;
    if (sum <= 0.0) {
        // all weights underflowed: fall back to uniform
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
        return w;
    }
    for (double& v : w) v /= sum;
    return w;
}

ObjectiveFunction make_composition(const CompositionSpec& spec, double bias,
                                   const SearchSpace& outer_space, const std::string& id) {
    size_t n = spec.components.size();
    if (n < 2) throw std::invalid_argument("composition: need >= 2 components");
    int dim = outer_space.dim;
    for (const auto& c : spec.components) {
        if (c.shift.size() != static_cast<size_t>(dim))
            throw std::invalid_argument("composition: shift length must equal dim");
        if (!(c.sigma > 0.0) || !(c.lambda > 0.0))
            throw std::invalid_argument("composition: sigma and lambda must be positive");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (spec.components[a].shift == spec.components[b].shift)
                throw std::invalid_argument("composition: duplicate component shifts");

    std::vector<std::function<double(std::span<const double>)>> evals;
    for (const auto& c : spec.components) evals.push_back(origin_adapter(c.function_id, dim).eval);

    ObjectiveFunction g;
    g.id = id;
    g.space = outer_space;
    g.bias = bias;
    CompositionSpec sc = spec;
    g.eval = [sc, evals, bias, dim](std::span<const double> x) {
        std::vector<double> w = composition_weights(sc, x);
        double s = bias;
        std::vector<double> local(static_cast<size_t>(dim));
        for (size_t i = 0; i < evals.size(); ++i) {
            if (w[i] == 0.0) continue;
            const auto& o = sc.components[i].shift;
            for (int j = 0; j < dim; ++j) local[j] = x[j] - o[j];
            s += w[i] * (sc.components[i].lambda * evals[i](local) + sc.components[i].bias);
        }
        return s;
    };

    // optimum: the shift of the smallest-bias component (one-hot weight there)
    size_t best = 0;
    for (size_t i = 1; i < n; ++i)
        if (spec.components[i].bias < spec.components[best].bias) best = i;
    ObjectiveFunction::Optimum opt;
    opt.position = spec.components[best].shift;
    opt.value = g.eval(opt.position);
    g.optimum = opt;
    return g;
}

}  // namespace hideopt::bench
