#include "hideopt/bench/hybrid.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hideopt/bench/base_functions.hpp"

namespace hideopt::bench {

std::vector<int> hybrid_chunk_sizes(const std::vector<double>& proportions, int dim) {
    if (proportions.empty()) throw std::invalid_argument("hybrid: no proportions");
    double sum = std::accumulate(proportions.begin(), proportions.end(), 0.0);
    if (std::fabs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("hybrid: proportions must sum to 1");
    int k = static_cast<int>(proportions.size());
    if (k > dim) throw std::invalid_argument("hybrid: more sub-functions than dimensions");
    for (double p : proportions)
        if (!(p > 0.0)) throw std::invalid_argument("hybrid: proportions must be positive");

    std::vector<int> sizes(static_cast<size_t>(k));
    std::vector<double> remainders(static_cast<size_t>(k));
    int assigned = 0;
    for (int c = 0; c < k; ++c) {
        double exact = proportions[c] * dim;
        sizes[c] = static_cast<int>(std::floor(exact));
        remainders[c] = exact - sizes[c];
        assigned += sizes[c];
    }
    // largest remainders take the leftover dimensions; ties -> lowest index
    for (int left = dim - assigned; left > 0; --left) {
        int pick = 0;
        for (int c = 1; c < k; ++c)
            if (remainders[c] > remainders[pick]) pick = c;
        ++sizes[pick];
        remainders[pick] = -1.0;
    }
    // no empty chunk: steal from the largest
    for (int c = 0; c < k; ++c) {
        if (sizes[c] > 0) continue;
        int donor = 0;
        for (int d = 1; d < k; ++d)
            if (sizes[d] > sizes[donor]) donor = d;
        if (sizes[donor] < 2) throw std::invalid_argument("hybrid: cannot give every chunk a dimension");
        --sizes[donor];
        ++sizes[c];
    }
    return sizes;
}

ObjectiveFunction make_hybrid(const HybridSpec& spec, const Transform& t, double bias,
                              const SearchSpace& outer_space, const std::string& id) {
    if (spec.sub_functions.size() != spec.proportions.size())
        throw std::invalid_argument("hybrid: sub_functions / proportions size mismatch");
    t.validate();
    int dim = outer_space.dim;
    std::vector<int> sizes = hybrid_chunk_sizes(spec.proportions, dim);

    std::vector<int> perm = spec.permutation;
    if (perm.empty()) {
        perm.resize(static_cast<size_t>(dim));
        std::iota(perm.begin(), perm.end(), 0);
    }
    if (perm.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("hybrid: permutation length must equal dim");
    {
        std::vector<bool> seen(static_cast<size_t>(dim), false);
        for (int p : perm) {
            if (p < 0 || p >= dim || seen[p])
                throw std::invalid_argument("hybrid: invalid permutation");
            seen[p] = true;
        }
    }

    struct Chunk {
        std::function<double(std::span<const double>)> eval;
        int offset;
        int size;
    };
    std::vector<Chunk> chunks;
    int offset = 0;
    for (size_t c = 0; c < spec.sub_functions.size(); ++c) {
        ObjectiveFunction base = origin_adapter(spec.sub_functions[c], sizes[c]);
        chunks.push_back({base.eval, offset, sizes[c]});
        offset += sizes[c];
    }

    ObjectiveFunction g;
    g.id = id;
    g.space = outer_space;
    g.bias = bias;
    Transform tc = t;
    g.eval = [tc, perm, chunks, bias, dim](std::span<const double> x) {
        std::vector<double> z = tc.apply(x);
        std::vector<double> zp(static_cast<size_t>(dim));
        for (int j = 0; j < dim; ++j) zp[j] = z[perm[j]];
        double s = bias;
        for (const auto& chunk : chunks)
            s += chunk.eval(std::span<const double>(zp.data() + chunk.offset,
                                                    static_cast<size_t>(chunk.size)));
        return s;
    };
    ObjectiveFunction::Optimum opt;
    opt.position = t.shift;
    opt.value = g.eval(t.shift);  // == bias up to sub-function rounding
    g.optimum = opt;
    return g;
}

}  // namespace hideopt::bench
