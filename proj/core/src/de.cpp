#include "hideopt/de.hpp"

#include <iostream>
#include <stdexcept>

namespace hideopt {

void DEParams::validate() const {
    if (NP < 4) throw std::invalid_argument("DEParams: NP must be >= 4 (three distinct donors)");
    if (F < 0.0 || F > 2.0) throw std::invalid_argument("DEParams: F must be in [0, 2]");
    if (F > 1.0) std::cerr << "warning: F = " << F << " is above the usual [0, 1] range\n";
    if (CR < 0.0 || CR > 1.0) throw std::invalid_argument("DEParams: CR must be in [0, 1]");
}

Population init_uniform_population(const SearchSpace& space, int np, EvalContext& ctx,
                                   RngStream& rng) {
    Population pop;
    pop.members.resize(static_cast<size_t>(np));
    for (auto& ind : pop.members) {
        ind.position.resize(static_cast<size_t>(space.dim));
        for (int j = 0; j < space.dim; ++j)
            ind.position[j] = rng.uniform(space.lower[j], space.upper[j]);
        ctx.evaluate(ind);
    }
    return pop;
}

std::array<int, 3> draw_donors(int np, int i, RngStream& rng) {
    if (np < 4) throw std::invalid_argument("draw_donors: NP must be >= 4");
    std::array<int, 3> r{};
    for (int n = 0; n < 3; ++n) {
        int cand;
        bool clash;
        do {
            cand = rng.uniform_int(0, np - 1);
            clash = cand == i;
            for (int m = 0; m < n; ++m) clash = clash || cand == r[m];
        } while (clash);
        r[n] = cand;
    }
    return r;
}

std::vector<double> mutate_rand1(const Population& pop, const SearchSpace& space, int i, double F,
                                 RngStream& rng, BoundaryPolicy boundary) {
    auto [r1, r2, r3] = draw_donors(pop.size(), i, rng);
    const auto& a = pop.members[r1].position;
    const auto& b = pop.members[r2].position;
    const auto& c = pop.members[r3].position;
    std::vector<double> v(a.size());
    for (size_t j = 0; j < a.size(); ++j) v[j] = a[j] + F * (b[j] - c[j]);
    return repair_to_bounds(v, space, boundary);
}

std::vector<double> binomial_crossover(const std::vector<double>& u, const std::vector<double>& x,
                                       double CR, RngStream& rng) {
    if (u.size() != x.size() || u.empty())
        throw std::invalid_argument("binomial_crossover: mismatched or empty vectors");
    int d = static_cast<int>(u.size());
    int k = rng.uniform_int(0, d - 1);
    std::vector<double> out(u.size());
    for (int j = 0; j < d; ++j) {
        double draw = rng.uniform();
        out[j] = (draw < CR || j == k) ? u[j] : x[j];
    }
    return out;
}

Population de_generation(const Population& pop, const DEParams& params, EvalContext& ctx,
                         RngStream& rng) {
    params.validate();
    const SearchSpace& space = ctx.objective().space;
    Population next;
    next.generation = pop.generation + 1;
    next.members.reserve(pop.members.size());
    for (int i = 0; i < pop.size(); ++i) {
        std::vector<double> v = mutate_rand1(pop, space, i, params.F, rng, params.boundary);
        Individual trial;
        trial.position = binomial_crossover(v, pop.members[i].position, params.CR, rng);
        ctx.evaluate(trial);
        next.members.push_back(select_greedy(pop.members[i], trial));
    }
    return next;
}

RunResult run_de(const ObjectiveFunction& f, const DEParams& params, const Termination& term,
                 std::uint64_t seed) {
    params.validate();
    term.validate();
    RngStream rng(seed);
    EvalContext ctx(f);
    Population pop = init_uniform_population(f.space, params.NP, ctx, rng);

    RunResult result;
    result.seed = seed;
    double best_so_far = fitness_key(best_member(pop));
    result.best = best_member(pop);
    result.trace.push_back(best_so_far);

    int gt = term.effective_generations(params.NP);
    for (int g = 0; g < gt; ++g) {
        if (term.target_fitness && best_so_far <= *term.target_fitness) break;
        pop = de_generation(pop, params, ctx, rng);
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
