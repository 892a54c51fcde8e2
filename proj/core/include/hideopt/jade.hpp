#pragma once

#include <cstdint>

#include "hideopt/de.hpp"

namespace hideopt {

// JADE: current-to-pbest/1 with per-member parameter sampling and adaptive
// means (Zhang & Sanderson style).
struct JADEParams {
    double p = 0.05;
    double c = 0.1;
    int NP = 100;
    bool archive_enabled = true;
    BoundaryPolicy boundary = BoundaryPolicy::Clamp;

    void validate() const;
    int pbest_pool_size() const;  // max(1, round(p * NP))
};

struct JadeState {
    double mu_F = 0.5;
    double mu_CR = 0.5;
    std::vector<Individual> archive;
};

// Per-member draw sequence: CR_i = clip(normal(mu_CR, 0.1), [0,1]); F_i by
// Cauchy(mu_F, 0.1) redrawn while <= 0, truncated to 1; pbest index uniform
// over the top pool; r1 by rejection over the population (!= i); r2 by
// rejection over population-plus-archive (!= i, != r1); then binomial
// crossover draws. After the member loop the archive is trimmed to NP by
// uniform random eviction and (mu_F, mu_CR) move at rate c toward the Lehmer
// and arithmetic means of the successful F_i / CR_i.
Population jade_generation(const Population& pop, const JADEParams& params, JadeState& state,
                           EvalContext& ctx, RngStream& rng);

RunResult run_jade(const ObjectiveFunction& f, const JADEParams& params, const Termination& term,
                   std::uint64_t seed);

}  // namespace hideopt
