#include "hideopt/jade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hideopt {

void JADEParams::validate() const {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("JADEParams: p must be in (0, 1]");
    if (c < 0.0 || c > 1.0) throw std::invalid_argument("JADEParams: c must be in [0, 1]");
    if (NP < 5) throw std::invalid_argument("JADEParams: NP must be >= 5");
}

int JADEParams::pbest_pool_size() const {
    return std::max(1, static_cast<int>(std::lround(p * NP)));
}

static double clip01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

Population jade_generation(const Population& pop, const JADEParams& params, JadeState& state,
                           EvalContext& ctx, RngStream& rng) {
    params.validate();
    const SearchSpace& space = ctx.objective().space;
    int np = pop.size();
    int d = space.dim;

    // fitness-sorted index order of the snapshot (stable for ties)
    std::vector<int> order(static_cast<size_t>(np));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return fitness_key(pop.members[a]) < fitness_key(pop.members[b]);
    });
    int pool = std::min(params.pbest_pool_size(), np);

    Population next;
    next.generation = pop.generation + 1;
    next.members.reserve(pop.members.size());

    std::vector<double> success_F, success_CR;
    std::vector<Individual> replaced;

    for (int i = 0; i < np; ++i) {
        double CR_i = clip01(rng.normal(state.mu_CR, 0.1));
        double F_i;
        do {
            F_i = rng.cauchy(state.mu_F, 0.1);
        } while (F_i <= 0.0);
        if (F_i > 1.0) F_i = 1.0;

        int pbest = order[rng.uniform_int(0, pool - 1)];
        int r1;
        do {
            r1 = rng.uniform_int(0, np - 1);
        } while (r1 == i);
        int union_size = np + static_cast<int>(state.archive.size());
        int r2;
        do {
            r2 = rng.uniform_int(0, union_size - 1);
        } while (r2 == i || r2 == r1);
        const std::vector<double>& x_r2 = r2 < np ? pop.members[r2].position
                                                  : state.archive[r2 - np].position;

        const auto& x_i = pop.members[i].position;
        std::vector<double> v(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j)
            v[j] = x_i[j] + F_i * (pop.members[pbest].position[j] - x_i[j]) +
                   F_i * (pop.members[r1].position[j] - x_r2[j]);
        v = repair_to_bounds(v, space, params.boundary);

        Individual trial;
        trial.position = binomial_crossover(v, x_i, CR_i, rng);
        ctx.evaluate(trial);

        if (fitness_key(trial) < fitness_key(pop.members[i])) {
            success_F.push_back(F_i);
            success_CR.push_back(CR_i);
            replaced.push_back(pop.members[i]);
            next.members.push_back(std::move(trial));
        } else {
            next.members.push_back(pop.members[i]);
        }
    }

    if (params.archive_enabled) {
        for (auto& parent : replaced) state.archive.push_back(std::move(parent));
        while (static_cast<int>(state.archive.size()) > np) {
            int evict = rng.uniform_int(0, static_cast<int>(state.archive.size()) - 1);
            state.archive.erase(state.archive.begin() + evict);
        }
    }

    if (!success_F.empty()) {
        double sum = 0.0, sum_sq = 0.0;
        for (double f : success_F) {
            sum += f;
            sum_sq += f * f;
        }
        double lehmer = sum_sq / sum;
        double cr_mean = std::accumulate(success_CR.begin(), success_CR.end(), 0.0) /
                         static_cast<double>(success_CR.size());
        state.mu_F = (1.0 - params.c) * state.mu_F + params.c * lehmer;
        state.mu_CR = (1.0 - params.c) * state.mu_CR + params.c * cr_mean;
    }
    return next;
}

RunResult run_jade(const ObjectiveFunction& f, const JADEParams& params, const Termination& term,
                   std::uint64_t seed) {
    params.validate();
    term.validate();
    RngStream rng(seed);
    EvalContext ctx(f);
    Population pop = init_uniform_population(f.space, params.NP, ctx, rng);
    JadeState state;

    RunResult result;
    result.seed = seed;
    double best_so_far = fitness_key(best_member(pop));
    result.best = best_member(pop);
    result.trace.push_back(best_so_far);

    int gt = term.effective_generations(params.NP);
    for (int g = 0; g < gt; ++g) {
        if (term.target_fitness && best_so_far <= *term.target_fitness) break;
        pop = jade_generation(pop, params, state, ctx, rng);
        const Individual& best = best_member(pop);
        if (fitness_key(best) < best_so_far) {
            best_so_far = fitness_key(best);
            result.best = best;
        }
        result.trace.push_back(best_so_far);
    }
    result.evaluations_used = ctx.evaluations();
    result.faults = ctx.faults();
    return result;
}

}  // namespace hideopt
