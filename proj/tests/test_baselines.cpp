#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hideopt/bench/suite.hpp"
#include "hideopt/jade.hpp"
#include "hideopt/psode.hpp"

using namespace hideopt;

namespace {

ObjectiveFunction sphere2() {
    ObjectiveFunction f;
    f.id = "sphere2";
    f.space = SearchSpace::box(2, -10.0, 10.0);
    f.eval = [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };
    return f;
}

}  // namespace

TEST_CASE("jade params") {
    JADEParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.pbest_pool_size() == 5);  // round(0.05 * 100)
    p.p = 0.001;
    CHECK(p.pbest_pool_size() == 1);  // floors at one member
    p.NP = 4;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.NP = 10;
    p.c = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("jade generation matches a straight-line transcription") {
    ObjectiveFunction f = sphere2();
    JADEParams params;
    params.NP = 6;

    EvalContext ctx(f);
    RngStream rng(41);
    Population pop = init_uniform_population(f.space, 6, ctx, rng);
    JadeState state;

    // Parallel stream transcription of the per-member draw order.
    RngStream rng2(41);
    {
        EvalContext burn(f);
        auto unused = init_uniform_population(f.space, 6, burn, rng2);
    }
    std::vector<int> order(6);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pop.members[a].fitness < pop.members[b].fitness;
    });
    int pool = 1;  // round(0.05 * 6) = 0 -> floored to 1

    std::vector<std::vector<double>> expect_pos;
    std::vector<double> expect_fit, succ_F, succ_CR;
    for (int i = 0; i < 6; ++i) {
        double CR_i = 0.5 + 0.1 * rng2.normal();
        CR_i = std::min(1.0, std::max(0.0, CR_i));
        double F_i;
        do {
            F_i = rng2.cauchy(0.5, 0.1);
        } while (F_i <= 0.0);
        F_i = std::min(1.0, F_i);

        int pbest = order[rng2.uniform_int(0, pool - 1)];
        int r1;
        do {
            r1 = rng2.uniform_int(0, 5);
        } while (r1 == i);
        int r2;
        do {
            r2 = rng2.uniform_int(0, 5);  // archive empty on the first pass
        } while (r2 == i || r2 == r1);

        std::vector<double> v(2);
        for (int j = 0; j < 2; ++j)
            v[j] = pop.members[i].position[j] +
                   F_i * (pop.members[pbest].position[j] - pop.members[i].position[j]) +
                   F_i * (pop.members[r1].position[j] - pop.members[r2].position[j]);
        for (int j = 0; j < 2; ++j) v[j] = std::min(10.0, std::max(-10.0, v[j]));

        int k = rng2.uniform_int(0, 1);
        std::vector<double> trial(2);
        for (int j = 0; j < 2; ++j) {
            double draw = rng2.uniform();
            trial[j] = (draw < CR_i || j == k) ? v[j] : pop.members[i].position[j];
        }
        double tf = f.eval(trial);
        if (tf < pop.members[i].fitness) {
            expect_pos.push_back(trial);
            expect_fit.push_back(tf);
            succ_F.push_back(F_i);
            succ_CR.push_back(CR_i);
        } else {
            expect_pos.push_back(pop.members[i].position);
            expect_fit.push_back(pop.members[i].fitness);
        }
    }

    Population next = jade_generation(pop, params, state, ctx, rng);
    for (int i = 0; i < 6; ++i) {
        CHECK(next.members[i].fitness == doctest::Approx(expect_fit[i]).epsilon(1e-12));
        for (int j = 0; j < 2; ++j)
            CHECK(next.members[i].position[j] ==
                  doctest::Approx(expect_pos[i][j]).epsilon(1e-12));
    }

    CHECK(state.archive.size() == succ_F.size());
    if (!succ_F.empty()) {
        double sum = 0.0, sum_sq = 0.0;
        for (double v : succ_F) {
            sum += v;
            sum_sq += v * v;
        }
        double lehmer = sum_sq / sum;
        double cr_mean =
            std::accumulate(succ_CR.begin(), succ_CR.end(), 0.0) / succ_CR.size();
        CHECK(state.mu_F == doctest::Approx(0.9 * 0.5 + 0.1 * lehmer).epsilon(1e-12));
        CHECK(state.mu_CR == doctest::Approx(0.9 * 0.5 + 0.1 * cr_mean).epsilon(1e-12));
    } else {
        CHECK(state.mu_F == 0.5);
        CHECK(state.mu_CR == 0.5);
    }
}

TEST_CASE("jade archive never exceeds NP") {
    ObjectiveFunction f = bench::suite_function("f1", 10);
    JADEParams params;
    params.NP = 20;
    EvalContext ctx(f);
    RngStream rng(8);
    Population pop = init_uniform_population(f.space, 20, ctx, rng);
    JadeState state;
    for (int g = 0; g < 60; ++g) {
        pop = jade_generation(pop, params, state, ctx, rng);
        CHECK(static_cast<int>(state.archive.size()) <= 20);
    }
    CHECK_FALSE(state.archive.empty());

    // With the archive disabled nothing accumulates.
    JADEParams no_arch = params;
    no_arch.archive_enabled = false;
    EvalContext ctx2(f);
    RngStream rng2(8);
    Population pop2 = init_uniform_population(f.space, 20, ctx2, rng2);
    JadeState state2;
    for (int g = 0; g < 10; ++g) pop2 = jade_generation(pop2, no_arch, state2, ctx2, rng2);
    CHECK(state2.archive.empty());
}

TEST_CASE("run_jade: deterministic and monotone") {
    ObjectiveFunction f = bench::suite_function("f1", 10);
    JADEParams params;
    Termination term;
    term.max_generations = 50;
    RunResult a = run_jade(f, params, term, 3);
    RunResult b = run_jade(f, params, term, 3);
    CHECK(a.trace == b.trace);
    for (size_t g = 1; g < a.trace.size(); ++g) CHECK(a.trace[g] <= a.trace[g - 1]);
}

TEST_CASE("psode params and defaults") {
    PSODEParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.w == doctest::Approx(0.7298));
    CHECK(p.phi_p == doctest::Approx(1.49618));
    CHECK(p.phi_g == doctest::Approx(1.49618));
    p.F_lo = 1.1;  // above F_hi
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("psode generation matches a straight-line transcription") {
    ObjectiveFunction f = sphere2();
    PSODEParams params;
    params.NP = 6;

    EvalContext ctx(f);
    RngStream rng(51);
    Swarm swarm = init_swarm(params, ctx, rng);

    RngStream rng2(51);
    {
        EvalContext burn(f);
        auto unused = init_swarm(params, burn, rng2);
    }

    // Transcribe the PSO sweep.
    auto pos = swarm.particles;
    auto vel = swarm.velocities;
    auto pbest = swarm.personal_best;
    auto gbest = swarm.global_best;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 2; ++j) {
            double r_p = rng2.uniform();
            double r_g = rng2.uniform();
            vel[i][j] = params.w * vel[i][j] +
                        params.phi_p * r_p * (pbest[i].position[j] - pos[i].position[j]) +
                        params.phi_g * r_g * (gbest.position[j] - pos[i].position[j]);
            vel[i][j] = std::min(10.0, std::max(-10.0, vel[i][j]));  // 0.5 * width(=20)
            pos[i].position[j] += vel[i][j];
            pos[i].position[j] = std::min(10.0, std::max(-10.0, pos[i].position[j]));
        }
        pos[i].fitness = f.eval(pos[i].position);
        if (pos[i].fitness < pbest[i].fitness) pbest[i] = pos[i];
    }
    // Transcribe the DE pass over the personal bests.
    double F = 0.9 + 0.1 * rng2.uniform();
    double CR = 0.95 + 0.05 * rng2.uniform();
    auto snapshot = pbest;
    for (int i = 0; i < 6; ++i) {
        int r[3];
        for (int n = 0; n < 3; ++n) {
            bool clash;
            do {
                r[n] = rng2.uniform_int(0, 5);
                clash = r[n] == i;
                for (int m = 0; m < n; ++m) clash = clash || r[n] == r[m];
            } while (clash);
        }
        std::vector<double> v(2);
        for (int j = 0; j < 2; ++j)
            v[j] = snapshot[r[0]].position[j] +
                   F * (snapshot[r[1]].position[j] - snapshot[r[2]].position[j]);
        for (int j = 0; j < 2; ++j) v[j] = std::min(10.0, std::max(-10.0, v[j]));
        int k = rng2.uniform_int(0, 1);
        std::vector<double> trial(2);
        for (int j = 0; j < 2; ++j) {
            double draw = rng2.uniform();
            trial[j] = (draw < CR || j == k) ? v[j] : snapshot[i].position[j];
        }
        double tf = f.eval(trial);
        if (tf < pbest[i].fitness) {
            pbest[i].position = trial;
            pbest[i].fitness = tf;
        }
    }
    for (const auto& pb : pbest)
        if (pb.fitness < gbest.fitness) gbest = pb;

    Swarm next = psode_generation(swarm, params, ctx, rng);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(next.particles[i].position[j] ==
                  doctest::Approx(pos[i].position[j]).epsilon(1e-12));
            CHECK(next.personal_best[i].position[j] ==
                  doctest::Approx(pbest[i].position[j]).epsilon(1e-12));
        }
    }
    CHECK(next.global_best.fitness == doctest::Approx(gbest.fitness).epsilon(1e-12));
}

TEST_CASE("psode accounting: two evaluation waves per generation") {
    ObjectiveFunction f = bench::suite_function("f1", 10);
    PSODEParams params;
    params.NP = 20;
    Termination term;
    term.max_generations = 10;
    RunResult r = run_psode(f, params, term, 4);
    CHECK(r.evaluations_used == 20 + 10 * 2 * 20);

    term.max_evaluations = 20 + 5 * 2 * 20;  // budget for five generations
    RunResult s = run_psode(f, params, term, 4);
    CHECK(s.trace.size() <= 7);  // conversion rounds down: at most 5-6 updates
}

TEST_CASE("run_psode: deterministic and monotone") {
    ObjectiveFunction f = bench::suite_function("f5", 10);
    PSODEParams params;
    Termination term;
    term.max_generations = 40;
    RunResult a = run_psode(f, params, term, 12);
    RunResult b = run_psode(f, params, term, 12);
    CHECK(a.trace == b.trace);
    for (size_t g = 1; g < a.trace.size(); ++g) CHECK(a.trace[g] <= a.trace[g - 1]);
}
