#pragma once

#include <cstdint>
#include <functional>

#include "hideopt/de.hpp"

namespace hideopt {

// Which crossover closes a HIDE trial. HCDimwise is the default: each
// coordinate keeps the target value with probability HC and takes the mutant
// value otherwise (no forced dimension). Binomial is the alternative mode,
// reusing the classical-DE operator gated by CR.
//
// HCDimwise is the default because with binomial-CR at CR=0.9 every
// early-phase trial is ~90% mutant and all mutants are centred on the global
// leader, so the population spread contracts by roughly a factor F per
// generation while the leader improves far more slowly; the population
// collapses to a degenerate point set before the phase switch and the late
// phase cannot recover. Retaining each target coordinate with probability HC
// keeps enough per-coordinate diversity for the late phase to converge.
enum class HideCrossover { HCDimwise, Binomial };

struct HIDEParams {
    double HC = 0.27;
    double F = 0.48;
    double CR = 0.9;
    int N_l = 5;
    int NP = 100;
    // Standard deviation of the hierarchical init; <= 0 means 10% of the
    // mean bound width.
    double init_spread = -1.0;
    HideCrossover crossover = HideCrossover::HCDimwise;
    BoundaryPolicy boundary = BoundaryPolicy::Clamp;

    void validate() const;
    double resolved_spread(const SearchSpace& space) const;
};

struct HierarchyState {
    Individual global_leader;
    std::vector<Individual> local_leaders;
    std::vector<int> assignment;  // member index -> local leader index
};

// True when generation G runs the global-leader phase: G < HC * G_t (strict).
inline bool global_phase(int G, int G_t, double HC) {
    return static_cast<double>(G) < HC * static_cast<double>(G_t);
}

// Index of the leader nearest in Euclidean distance; ties -> lowest index.
int nearest_leader(const Individual& member, const std::vector<Individual>& leaders);

// Draw sequence: global leader uses dim uniforms; each local leader dim
// normals; each member dim normals, members assigned round-robin
// (member m seeds around leader m % N_l) and that seeding recorded as the
// initial assignment.
std::pair<HierarchyState, Population> init_hierarchy(const HIDEParams& params, EvalContext& ctx,
                                                     RngStream& rng);

// Phase mutants.
std::vector<double> global_phase_mutant(const std::vector<double>& g_L,
                                        const std::vector<double>& x_L,
                                        const std::vector<double>& x_r, double F);
std::vector<double> local_phase_mutant(const std::vector<double>& x_L,
                                       const std::vector<double>& x_i,
                                       const std::vector<double>& x_r, double F);

// Builds one trial: draws r != i by rejection, picks the phase mutant by
// global_phase(G, G_t, HC), repairs it to bounds, then crosses it with x_i.
// Crossover draws: HCDimwise uses one uniform() per dimension (keep x_i[j]
// when the draw is < HC, no forced dimension); Binomial follows the
// binomial_crossover contract in de.hpp (k, then one uniform per dimension).
std::vector<double> hide_trial(int i, const Population& pop, const HierarchyState& state,
                               const HIDEParams& params, int G, int G_t, EvalContext& ctx,
                               RngStream& rng);

// One synchronous generation: nearest-leader assignment is recomputed first,
// trials are compared against the generation-start snapshot, and leaders are
// updated afterwards (cluster best including the incumbent, then the global
// leader as the best of itself and all local leaders).
std::pair<Population, HierarchyState> hide_generation(const Population& pop,
                                                      const HierarchyState& state,
                                                      const HIDEParams& params, int G, int G_t,
                                                      EvalContext& ctx, RngStream& rng);

using HierarchyObserver = std::function<void(int generation, const HierarchyState&)>;

RunResult run_hide(const ObjectiveFunction& f, const HIDEParams& params, const Termination& term,
                   std::uint64_t seed, const HierarchyObserver& observer = {});

}  // namespace hideopt
