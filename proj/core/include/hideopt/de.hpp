#pragma once

#include <array>
#include <cstdint>

#include "hideopt/objective.hpp"
#include "hideopt/rng.hpp"
#include "hideopt/run_result.hpp"
#include "hideopt/termination.hpp"

namespace hideopt {

struct DEParams {
    double F = 0.5;
    double CR = 0.9;
    int NP = 100;
    BoundaryPolicy boundary = BoundaryPolicy::Clamp;

    void validate() const;
};

// Uniform-random population in bounds, all members evaluated.
Population init_uniform_population(const SearchSpace& space, int np, EvalContext& ctx,
                                   RngStream& rng);

// Three donor indices, mutually distinct and distinct from i, drawn by
// rejection from uniform_int(0, NP-1). Requires NP >= 4.
std::array<int, 3> draw_donors(int np, int i, RngStream& rng);

// v = x_r1 + F * (x_r2 - x_r3), repaired to bounds.
std::vector<double> mutate_rand1(const Population& pop, const SearchSpace& space, int i, double F,
                                 RngStream& rng, BoundaryPolicy boundary = BoundaryPolicy::Clamp);

// Draw sequence: k = uniform_int(0, d-1), then one uniform() per dimension j
// (drawn even when j == k); out[j] = u[j] if draw < CR or j == k, else x[j].
std::vector<double> binomial_crossover(const std::vector<double>& u, const std::vector<double>& x,
                                       double CR, RngStream& rng);

// One synchronous rand/1/bin generation: every trial is built from and
// compared against the generation-start population.
Population de_generation(const Population& pop, const DEParams& params, EvalContext& ctx,
                         RngStream& rng);

RunResult run_de(const ObjectiveFunction& f, const DEParams& params, const Termination& term,
                 std::uint64_t seed);

}  // namespace hideopt
