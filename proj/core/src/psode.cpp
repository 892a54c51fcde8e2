#include "hideopt/psode.hpp"

#include <stdexcept>

namespace hideopt {

void PSODEParams::validate() const {
    if (NP < 4) throw std::invalid_argument("PSODEParams: NP must be >= 4 (DE step donors)");
    if (w < 0.0) throw std::invalid_argument("PSODEParams: w must be >= 0");
    if (!(F_lo <= F_hi) || !(CR_lo <= CR_hi))
        throw std::invalid_argument("PSODEParams: invalid F/CR ranges");
}

Swarm init_swarm(const PSODEParams& params, EvalContext& ctx, RngStream& rng) {
    params.validate();
    const SearchSpace& space = ctx.objective().space;
    Swarm swarm;
    swarm.particles.resize(static_cast<size_t>(params.NP));
    swarm.velocities.assign(static_cast<size_t>(params.NP),
                            std::vector<double>(static_cast<size_t>(space.dim), 0.0));
    for (auto& p : swarm.particles) {
        p.position.resize(static_cast<size_t>(space.dim));
        for (int j = 0; j < space.dim; ++j)
            p.position[j] = rng.uniform(space.lower[j], space.upper[j]);
        ctx.evaluate(p);
    }
    swarm.personal_best = swarm.particles;
    swarm.global_best = swarm.particles[0];
    for (const auto& p : swarm.particles)
        if (fitness_key(p) < fitness_key(swarm.global_best)) swarm.global_best = p;
    return swarm;
}

Swarm psode_generation(const Swarm& swarm, const PSODEParams& params, EvalContext& ctx,
                       RngStream& rng) {
    params.validate();
    const SearchSpace& space = ctx.objective().space;
    int np = swarm.size();
    int d = space.dim;

    Swarm next = swarm;
    next.generation = swarm.generation + 1;

    for (int i = 0; i < np; ++i) {
        auto& v = next.velocities[i];
        auto& x = next.particles[i];
        for (int j = 0; j < d; ++j) {
            double r_p = rng.uniform();
            double r_g = rng.uniform();
            v[j] = params.w * v[j] +
                   params.phi_p * r_p * (swarm.personal_best[i].position[j] - x.position[j]) +
                   params.phi_g * r_g * (swarm.global_best.position[j] - x.position[j]);
            double vmax = 0.5 * space.width(j);
            if (v[j] > vmax) v[j] = vmax;
            if (v[j] < -vmax) v[j] = -vmax;
            x.position[j] += v[j];
        }
        x.position = repair_to_bounds(x.position, space, params.boundary);
        ctx.evaluate(x);
        if (fitness_key(x) < fitness_key(next.personal_best[i])) next.personal_best[i] = x;
    }

    // DE pass over the personal-best set, F and CR drawn once per generation.
    double F = rng.uniform(params.F_lo, params.F_hi);
    double CR = rng.uniform(params.CR_lo, params.CR_hi);
    Population pbest_pop;
    pbest_pop.members = next.personal_best;
    for (int i = 0; i < np; ++i) {
        std::vector<double> v = mutate_rand1(pbest_pop, space, i, F, rng, params.boundary);
        Individual trial;
        trial.position = binomial_crossover(v, pbest_pop.members[i].position, CR, rng);
        ctx.evaluate(trial);
        if (fitness_key(trial) < fitness_key(next.personal_best[i]))
            next.personal_best[i] = std::move(trial);
    }

    for (const auto& pb : next.personal_best)
        if (fitness_key(pb) < fitness_key(next.global_best)) next.global_best = pb;
    return next;
}

RunResult run_psode(const ObjectiveFunction& f, const PSODEParams& params, const Termination& term,
                    std::uint64_t seed) {
    params.validate();
    term.validate();
    RngStream rng(seed);
    EvalContext ctx(f);
    Swarm swarm = init_swarm(params, ctx, rng);

    RunResult result;
    result.seed = seed;
    result.best = swarm.global_best;
    result.trace.push_back(fitness_key(swarm.global_best));

    // Two evaluation waves per generation (PSO move + DE pass).
    int gt = term.max_generations;
    if (term.max_evaluations) {
        long long by_budget = *term.max_evaluations / (2LL * params.NP);
        if (by_budget < 1) by_budget = 1;
        if (by_budget < gt) gt = static_cast<int>(by_budget);
    }
    for (int g = 0; g < gt; ++g) {
        if (term.target_fitness && fitness_key(swarm.global_best) <= *term.target_fitness) break;
        swarm = psode_generation(swarm, params, ctx, rng);
        result.trace.push_back(fitness_key(swarm.global_best));
    }
    result.best = swarm.global_best;
    result.evaluations_used = ctx.evaluations();
    result.faults = ctx.faults();
    return result;
}

}  // namespace hideopt
