// Microbenchmarks: catalog evaluation throughput and per-generation cost of
// the optimizers at the default population size.

#include <benchmark/benchmark.h>

#include "hideopt/bench/suite.hpp"
#include "hideopt/de.hpp"
#include "hideopt/hide.hpp"
#include "hideopt/jade.hpp"
#include "hideopt/psode.hpp"

using namespace hideopt;

namespace {

void BM_SuiteEval(benchmark::State& state, const std::string& fn) {
    int dim = static_cast<int>(state.range(0));
    ObjectiveFunction f = bench::suite_function(fn, dim);
    RngStream rng(1);
    std::vector<double> x(dim);
    for (double& c : x) c = -100.0 + 200.0 * rng.uniform();
    for (auto _ : state) benchmark::DoNotOptimize(f.eval(x));
    state.SetItemsProcessed(state.iterations());
}

void BM_DeGeneration(benchmark::State& state) {
    int dim = static_cast<int>(state.range(0));
    ObjectiveFunction f = bench::suite_function("f5", dim);
    DEParams params;
    EvalContext ctx(f);
    RngStream rng(1);
    Population pop = init_uniform_population(f.space, params.NP, ctx, rng);
    for (auto _ : state) {
        pop = de_generation(pop, params, ctx, rng);
        benchmark::DoNotOptimize(pop);
    }
}

void BM_HideGeneration(benchmark::State& state) {
    int dim = static_cast<int>(state.range(0));
    ObjectiveFunction f = bench::suite_function("f5", dim);
    HIDEParams params;
    EvalContext ctx(f);
    RngStream rng(1);
    auto [st, pop] = init_hierarchy(params, ctx, rng);
    int g = 0;
    for (auto _ : state) {
        auto [next, ns] = hide_generation(pop, st, params, g % 1000, 1000, ctx, rng);
        pop = std::move(next);
        st = std::move(ns);
        ++g;
        benchmark::DoNotOptimize(pop);
    }
}

void BM_JadeGeneration(benchmark::State& state) {
    int dim = static_cast<int>(state.range(0));
    ObjectiveFunction f = bench::suite_function("f5", dim);
    JADEParams params;
    EvalContext ctx(f);
    RngStream rng(1);
    Population pop = init_uniform_population(f.space, params.NP, ctx, rng);
    JadeState st;
    for (auto _ : state) {
        pop = jade_generation(pop, params, st, ctx, rng);
        benchmark::DoNotOptimize(pop);
    }
}

void BM_PsodeGeneration(benchmark::State& state) {
    int dim = static_cast<int>(state.range(0));
    ObjectiveFunction f = bench::suite_function("f5", dim);
    PSODEParams params;
    EvalContext ctx(f);
    RngStream rng(1);
    Swarm swarm = init_swarm(params, ctx, rng);
    for (auto _ : state) {
        swarm = psode_generation(swarm, params, ctx, rng);
        benchmark::DoNotOptimize(swarm);
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_SuiteEval, f1_unimodal, std::string("f1"))->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_SuiteEval, f13_hybrid, std::string("f13"))->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_SuiteEval, f25_composition, std::string("f25"))->Arg(10)->Arg(30);
BENCHMARK(BM_DeGeneration)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HideGeneration)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_JadeGeneration)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PsodeGeneration)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
