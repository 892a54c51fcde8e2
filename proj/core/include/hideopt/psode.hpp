#pragma once

#include <cstdint>

#include "hideopt/de.hpp"

namespace hideopt {

// PSO-DE hybrid: a constriction-style PSO sweep over the particles followed
// by a rand/1/bin DE step over the personal-best set each generation.
struct PSODEParams {
    double w = 0.7298;
    double phi_p = 1.49618;
    double phi_g = 1.49618;
    double F_lo = 0.9, F_hi = 1.0;    // F drawn uniformly per generation
    double CR_lo = 0.95, CR_hi = 1.0; // CR drawn uniformly per generation
    int NP = 100;
    BoundaryPolicy boundary = BoundaryPolicy::Clamp;

    void validate() const;
};

struct Swarm {
    std::vector<Individual> particles;
    std::vector<std::vector<double>> velocities;
    std::vector<Individual> personal_best;
    Individual global_best;
    int generation = 0;

    int size() const { return static_cast<int>(particles.size()); }
};

// Uniform positions, zero velocities, personal bests = initial positions.
Swarm init_swarm(const PSODEParams& params, EvalContext& ctx, RngStream& rng);

// Draw sequence: per particle, per dimension r_p then r_g; velocities are
// clamped to half the bound width per dimension; positions repaired; after
// all moves F then CR are drawn once and the DE step runs over the
// personal-best set with greedy acceptance into the personal bests.
Swarm psode_generation(const Swarm& swarm, const PSODEParams& params, EvalContext& ctx,
                       RngStream& rng);

RunResult run_psode(const ObjectiveFunction& f, const PSODEParams& params, const Termination& term,
                    std::uint64_t seed);

}  // namespace hideopt
