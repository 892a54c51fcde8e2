// hideopt command line: single runs, multi-algorithm comparisons, benchmark
// catalog inspection, and w/t/l recomputation from stored reports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hideopt/bench/suite.hpp"
#include "hideopt/harness/experiment.hpp"
#include "hideopt/harness/report_io.hpp"
#include "hideopt/harness/traces.hpp"
#include "hideopt/hide.hpp"

namespace {

using namespace hideopt;
using nlohmann::json;

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stod(token));
    }
    return out;
}

struct RunOptions {
    std::string algo = "hide";
    std::string fn = "f1";
    int dim = 10;
    std::uint64_t seed = 1;
    int generations = 1000;
    int np = 100;
    std::string out_dir = ".";
    std::uint64_t suite_seed = bench::kDefaultSuiteSeed;
    std::string params_json;
    std::string hide_log;
};

int do_run(const RunOptions& opt) {
    json params = opt.params_json.empty() ? json::object() : json::parse(opt.params_json);
    params["NP"] = opt.np;

    ObjectiveFunction f = bench::suite_function(opt.fn, opt.dim, opt.suite_seed);
    Termination term;
    term.max_generations = opt.generations;

    RunResult result;
    if (!opt.hide_log.empty()) {
        if (opt.algo != "hide")
            throw std::runtime_error("--hide-log is only meaningful with --algo hide");
        HIDEParams p;
        if (params.contains("HC")) p.HC = params["HC"].get<double>();
        if (params.contains("F")) p.F = params["F"].get<double>();
        if (params.contains("CR")) p.CR = params["CR"].get<double>();
        if (params.contains("N_l")) p.N_l = params["N_l"].get<int>();
        if (params.contains("crossover"))
            p.crossover = params["crossover"].get<std::string>() == "binomial"
                              ? HideCrossover::Binomial
                              : HideCrossover::HCDimwise;
        p.NP = opt.np;
        std::ofstream log(opt.hide_log);
        if (!log) throw std::runtime_error("cannot open " + opt.hide_log);
        auto observer = [&log](int g, const HierarchyState& state) {
            json rec{{"generation", g},
                     {"global_leader", state.global_leader.position},
                     {"global_fitness", state.global_leader.fitness},
                     {"assignment", state.assignment}};
            json leaders = json::array();
            for (const auto& l : state.local_leaders) leaders.push_back(l.position);
            rec["local_leaders"] = leaders;
            log << rec.dump() << "\n";
        };
        result = run_hide(f, p, term, opt.seed, observer);
    } else {
        harness::Runner runner = harness::make_runner(opt.algo, params);
        result = runner(f, term, opt.seed);
    }

    std::filesystem::create_directories(opt.out_dir);
    std::string trace_path = opt.out_dir + "/trace_" + opt.algo + "_" + opt.fn + "_d" +
                             std::to_string(opt.dim) + "_s" + std::to_string(opt.seed) + ".csv";
    harness::write_run_trace(trace_path, result.trace);

    std::printf("algorithm: %s\n", opt.algo.c_str());
    std::printf("function: %s (dim %d)\n", opt.fn.c_str(), opt.dim);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(opt.seed));
    std::printf("generations: %d\n", static_cast<int>(result.trace.size()) - 1);
    std::printf("evaluations: %lld\n", result.evaluations_used);
    std::printf("final best: %.17g\n", result.trace.back());
    std::printf("trace: %s\n", trace_path.c_str());
    return 0;
}

int do_compare(const std::string& config_path, int jobs_override,
               const std::string& out_override) {
    harness::ExperimentConfig config = harness::load_config(config_path);
    if (jobs_override > 0) config.jobs = jobs_override;
    if (!out_override.empty()) config.output_dir = out_override;

    harness::ExperimentReport report = harness::run_experiment(config);
    harness::WTLSummary best = harness::compute_wtl(report, harness::Metric::Best);
    harness::WTLSummary mean = harness::compute_wtl(report, harness::Metric::Mean);

    std::filesystem::create_directories(config.output_dir);
    std::string report_path = config.output_dir + "/report.json";
    harness::save_report(report, report_path);
    harness::export_traces(report, config.output_dir);

    std::string table = harness::render_table(report, best, mean);
    std::ofstream(config.output_dir + "/tables.txt") << table;
    std::cout << table << harness::render_wtl(best) << harness::render_wtl(mean);
    std::cout << "report: " << report_path << "\n";
    return 0;
}

int do_bench_list(int dim, std::uint64_t suite_seed) {
    auto entries = bench::suite(dim, suite_seed);
    for (const auto& entry : entries)
        std::printf("%-5s %-12s %s\n", entry.function.id.c_str(), bench::to_string(entry.cls),
                    entry.description.c_str());
    return 0;
}

int do_bench_probe(const std::string& fn, int dim, const std::string& at, bool at_optimum,
                   std::uint64_t suite_seed) {
    ObjectiveFunction f = bench::suite_function(fn, dim, suite_seed);
    std::vector<double> x;
    if (at_optimum) {
        if (!f.optimum) throw std::runtime_error(fn + " has no recorded optimum");
        x = f.optimum->position;
    } else {
        x = parse_point(at);
        if (static_cast<int>(x.size()) != dim)
            throw std::runtime_error("--at needs exactly " + std::to_string(dim) + " values");
    }
    std::printf("%.17g\n", f.eval(x));
    return 0;
}

int do_report(const std::string& in_path, const std::string& metric, double tolerance) {
    harness::ExperimentReport report = harness::load_report(in_path);
    harness::Metric m = metric == "mean" ? harness::Metric::Mean : harness::Metric::Best;
    harness::WTLSummary summary = harness::compute_wtl(report, m, tolerance);
    std::cout << harness::render_wtl(summary);
    for (const auto& outcome : summary.outcomes) {
        std::cout << "  " << outcome.function_id << ": ";
        for (size_t k = 0; k < outcome.best_algorithms.size(); ++k)
            std::cout << (k ? ", " : "") << summary.algorithms[outcome.best_algorithms[k]];
        std::cout << (outcome.best_algorithms.size() > 1 ? " (tie)" : "") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hideopt — hierarchy influenced differential evolution toolkit"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run_cmd = app.add_subcommand("run", "single algorithm/function run");
    run_cmd->add_option("--algo", run_opt.algo, "de | jade | psode | hide");
    run_cmd->add_option("--fn", run_opt.fn, "function id (f1..f30 or base id)");
    run_cmd->add_option("--dim", run_opt.dim, "dimensionality");
    run_cmd->add_option("--seed", run_opt.seed, "RNG seed");
    run_cmd->add_option("--generations", run_opt.generations, "generation budget");
    run_cmd->add_option("--np", run_opt.np, "population size");
    run_cmd->add_option("--out", run_opt.out_dir, "output directory");
    run_cmd->add_option("--suite-seed", run_opt.suite_seed, "benchmark suite seed");
    run_cmd->add_option("--params", run_opt.params_json, "algorithm parameter overrides (JSON)");
    run_cmd->add_option("--hide-log", run_opt.hide_log,
                        "write per-generation hierarchy state (JSONL, hide only)");

    std::string config_path;
    int jobs = 0;
    std::string out_dir;
    auto* compare_cmd = app.add_subcommand("compare", "full experiment from a config file");
    compare_cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
    compare_cmd->add_option("--jobs", jobs, "parallel run count (overrides config)");
    compare_cmd->add_option("--out", out_dir, "output directory (overrides config)");

    auto* bench_cmd = app.add_subcommand("bench", "benchmark catalog utilities");
    bench_cmd->require_subcommand(1);
    int bench_dim = 10;
    std::uint64_t bench_suite_seed = hideopt::bench::kDefaultSuiteSeed;
    auto* list_cmd = bench_cmd->add_subcommand("list", "list the 30-function catalog");
    list_cmd->add_option("--dim", bench_dim, "dimensionality");
    list_cmd->add_option("--suite-seed", bench_suite_seed, "benchmark suite seed");

    std::string probe_fn = "f1", probe_at;
    bool probe_at_optimum = false;
    auto* probe_cmd = bench_cmd->add_subcommand("probe", "evaluate a function at a point");
    probe_cmd->add_option("--fn", probe_fn, "function id")->required();
    probe_cmd->add_option("--dim", bench_dim, "dimensionality");
    probe_cmd->add_option("--at", probe_at, "comma-separated coordinates");
    probe_cmd->add_flag("--at-optimum", probe_at_optimum, "probe the recorded optimum");
    probe_cmd->add_option("--suite-seed", bench_suite_seed, "benchmark suite seed");

    std::string report_in, report_metric = "best";
    double report_tol = 1e-8;
    auto* report_cmd = app.add_subcommand("report", "recompute w/t/l from a stored report");
    report_cmd->add_option("--in", report_in, "report.json path")->required();
    report_cmd->add_option("--metric", report_metric, "best | mean");
    report_cmd->add_option("--tolerance", report_tol, "tie tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) return do_run(run_opt);
        if (*compare_cmd) return do_compare(config_path, jobs, out_dir);
        if (*list_cmd) return do_bench_list(bench_dim, bench_suite_seed);
        if (*probe_cmd)
            return do_bench_probe(probe_fn, bench_dim, probe_at, probe_at_optimum,
                                  bench_suite_seed);
        if (*report_cmd) return do_report(report_in, report_metric, report_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
