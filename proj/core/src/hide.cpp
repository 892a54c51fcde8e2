#include "hideopt/hide.hpp"

#include <cmath>
#include <stdexcept>

namespace hideopt {

void HIDEParams::validate() const {
    if (HC < 0.0 || HC > 1.0) throw std::invalid_argument("HIDEParams: HC must be in [0, 1]");
    if (F < 0.0 || F > 2.0) throw std::invalid_argument("HIDEParams: F must be in [0, 2]");
    if (CR < 0.0 || CR > 1.0) throw std::invalid_argument("HIDEParams: CR must be in [0, 1]");
    if (NP < 2) throw std::invalid_argument("HIDEParams: NP must be >= 2");
    if (N_l < 1 || N_l > NP) throw std::invalid_argument("HIDEParams: need 1 <= N_l <= NP");
}

double HIDEParams::resolved_spread(const SearchSpace& space) const {
    return init_spread > 0.0 ? init_spread : 0.1 * space.mean_width();
}

int nearest_leader(const Individual& member, const std::vector<Individual>& leaders) {
    if (leaders.empty()) throw std::invalid_argument("nearest_leader: empty leader list");
    int best = 0;
    double best_d2 = -1.0;
    for (int c = 0; c < static_cast<int>(leaders.size()); ++c) {
        const auto& lp = leaders[c].position;
        double d2 = 0.0;
        for (size_t j = 0; j < lp.size(); ++j) {
            double d = member.position[j] - lp[j];
            d2 += d * d;
        }
        if (best_d2 < 0.0 || d2 < best_d2) {
            best_d2 = d2;
            best = c;
        }
    }
    return best;
}

std::pair<HierarchyState, Population> init_hierarchy(const HIDEParams& params, EvalContext& ctx,
                                                     RngStream& rng) {
    params.validate();
    const SearchSpace& space = ctx.objective().space;
    double spread = params.resolved_spread(space);

    HierarchyState state;
    state.global_leader.position.resize(static_cast<size_t>(space.dim));
    for (int j = 0; j < space.dim; ++j)
        state.global_leader.position[j] = rng.uniform(space.lower[j], space.upper[j]);
    ctx.evaluate(state.global_leader);

    state.local_leaders.resize(static_cast<size_t>(params.N_l));
    for (auto& leader : state.local_leaders) {
        std::vector<double> p(static_cast<size_t>(space.dim));
        for (int j = 0; j < space.dim; ++j)
            p[j] = state.global_leader.position[j] + spread * rng.normal();
        leader.position = repair_to_bounds(p, space, params.boundary);
        ctx.evaluate(leader);
    }

    Population pop;
    pop.members.resize(static_cast<size_t>(params.NP));
    state.assignment.resize(static_cast<size_t>(params.NP));
    for (int i = 0; i < params.NP; ++i) {
        int c = i % params.N_l;
        state.assignment[i] = c;
        std::vector<double> p(static_cast<size_t>(space.dim));
        for (int j = 0; j < space.dim; ++j)
            p[j] = state.local_leaders[c].position[j] + spread * rng.normal();
        pop.members[i].position = repair_to_bounds(p, space, params.boundary);
        ctx.evaluate(pop.members[i]);
    }
    return {std::move(state), std::move(pop)};
}

std::vector<double> global_phase_mutant(const std::vector<double>& g_L,
                                        const std::vector<double>& x_L,
                                        const std::vector<double>& x_r, double F) {
    std::vector<double> u(g_L.size());
    for (size_t j = 0; j < u.size(); ++j) u[j] = g_L[j] + F * (x_L[j] - x_r[j]);
    return u;
}

std::vector<double> local_phase_mutant(const std::vector<double>& x_L,
                                       const std::vector<double>& x_i,
                                       const std::vector<double>& x_r, double F) {
    std::vector<double> u(x_L.size());
    for (size_t j = 0; j < u.size(); ++j) u[j] = x_L[j] + F * (x_i[j] - x_r[j]);
    return u;
}

// Dimension-wise alternative: keep the target coordinate with probability HC.
static std::vector<double> hc_dimwise_crossover(const std::vector<double>& u,
                                                const std::vector<double>& x, double HC,
                                                RngStream& rng) {
    std::vector<double> out(u.size());
    for (size_t j = 0; j < u.size(); ++j) out[j] = rng.uniform() < HC ? x[j] : u[j];
    return out;
}

std::vector<double> hide_trial(int i, const Population& pop, const HierarchyState& state,
                               const HIDEParams& params, int G, int G_t, EvalContext& ctx,
                               RngStream& rng) {
    if (pop.size() < 2) throw std::invalid_argument("hide_trial: NP must be >= 2");
    int r;
    do {
        r = rng.uniform_int(0, pop.size() - 1);
    } while (r == i);

    const auto& x_i = pop.members[i].position;
    const auto& x_r = pop.members[r].position;
    const auto& x_L = state.local_leaders[state.assignment[i]].position;

    std::vector<double> u =
        global_phase(G, G_t, params.HC)
            ? global_phase_mutant(state.global_leader.position, x_L, x_r, params.F)
            : local_phase_mutant(x_L, x_i, x_r, params.F);
    u = repair_to_bounds(u, ctx.objective().space, params.boundary);

    return params.crossover == HideCrossover::Binomial
               ? binomial_crossover(u, x_i, params.CR, rng)
               : hc_dimwise_crossover(u, x_i, params.HC, rng);
}

std::pair<Population, HierarchyState> hide_generation(const Population& pop,
                                                      const HierarchyState& state,
                                                      const HIDEParams& params, int G, int G_t,
                                                      EvalContext& ctx, RngStream& rng) {
    HierarchyState next_state = state;
    for (int i = 0; i < pop.size(); ++i)
        next_state.assignment[i] = nearest_leader(pop.members[i], next_state.local_leaders);

    Population next;
    next.generation = pop.generation + 1;
    next.members.reserve(pop.members.size());
    for (int i = 0; i < pop.size(); ++i) {
        Individual trial;
        trial.position = hide_trial(i, pop, next_state, params, G, G_t, ctx, rng);
        ctx.evaluate(trial);
        next.members.push_back(select_greedy(pop.members[i], trial));
    }

    // Cluster best including the incumbent leader; empty clusters keep theirs.
    for (int c = 0; c < params.N_l; ++c) {
        Individual* best = &next_state.local_leaders[c];
        for (int i = 0; i < next.size(); ++i) {
            if (next_state.assignment[i] != c) continue;
            if (fitness_key(next.members[i]) < fitness_key(*best)) best = &next.members[i];
        }
        if (best != &next_state.local_leaders[c]) next_state.local_leaders[c] = *best;
    }
    for (const auto& leader : next_state.local_leaders)
        if (fitness_key(leader) < fitness_key(next_state.global_leader))
            next_state.global_leader = leader;

    return {std::move(next), std::move(next_state)};
}

RunResult run_hide(const ObjectiveFunction& f, const HIDEParams& params, const Termination& term,
                   std::uint64_t seed, const HierarchyObserver& observer) {
    params.validate();
    term.validate();
    RngStream rng(seed);
    EvalContext ctx(f);
    auto [state, pop] = init_hierarchy(params, ctx, rng);

    // Fold population bests into the hierarchy so the global leader is the
    // best point evaluated so far.
    for (int c = 0; c < params.N_l; ++c) {
        for (int i = 0; i < pop.size(); ++i) {
            if (state.assignment[i] != c) continue;
            if (fitness_key(pop.members[i]) < fitness_key(state.local_leaders[c]))
                state.local_leaders[c] = pop.members[i];
        }
    }
    for (const auto& leader : state.local_leaders)
        if (fitness_key(leader) < fitness_key(state.global_leader)) state.global_leader = leader;

    RunResult result;
    result.seed = seed;
    result.trace.push_back(fitness_key(state.global_leader));
    if (observer) observer(0, state);

    int gt = term.effective_generations(params.NP);
    for (int g = 0; g < gt; ++g) {
        if (term.target_fitness && fitness_key(state.global_leader) <= *term.target_fitness) break;
        auto [next, next_state] = hide_generation(pop, state, params, g, gt, ctx, rng);
        pop = std::move(next);
        state = std::move(next_state);
        result.trace.push_back(fitness_key(state.global_leader));
        if (observer) observer(g + 1, state);
    }
    result.best = state.global_leader;
    result.evaluations_used = ctx.evaluations();
    result.faults = ctx.faults();
    return result;
}

}  // namespace hideopt
