#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hideopt/harness/experiment.hpp"
#include "hideopt/harness/registry.hpp"
#include "hideopt/harness/report_io.hpp"
#include "hideopt/harness/traces.hpp"
#include "hideopt/harness/wtl.hpp"

using namespace hideopt;
using namespace hideopt::harness;
namespace fs = std::filesystem;

TEST_CASE("registry: names, overrides, rejection of unknowns") {
    CHECK(algorithm_names() == std::vector<std::string>{"de", "jade", "psode", "hide"});
    CHECK_THROWS_AS(make_runner("cmaes"), std::invalid_argument);
    CHECK_THROWS_AS(make_runner("de", {{"alpha", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_runner("hide", {{"crossover", "triangular"}}), std::invalid_argument);
    CHECK_NOTHROW(make_runner("hide", {{"crossover", "dimwise"}}));
    CHECK_NOTHROW(make_runner("hide", {{"crossover", "binomial"}, {"HC", 0.3}}));

    ObjectiveFunction f = bench::suite_function("f1", 10);
    Termination term;
    term.max_generations = 20;

    // an override must change behaviour, and the default must match the
    // explicitly spelled-out default
    Runner de_default = make_runner("de");
    Runner de_same = make_runner("de", {{"F", 0.5}, {"CR", 0.9}, {"NP", 100}});
    Runner de_small = make_runner("de", {{"NP", 30}});
    RunResult a = de_default(f, term, 7);
    RunResult b = de_same(f, term, 7);
    RunResult c = de_small(f, term, 7);
    CHECK(a.trace == b.trace);
    CHECK(a.trace != c.trace);
    CHECK(c.evaluations_used == 30 + 20 * 30);
}

TEST_CASE("compute_wtl: leading group semantics") {
    std::vector<std::string> algos{"A", "B", "C"};
    std::vector<std::string> fns{"f1", "f2", "f3"};
    std::vector<std::vector<double>> vals{
        {1.0, 2.0, 3.0},              // A wins alone
        {5.0, 5.0 + 1e-10, 7.0},      // A and B tie within tolerance
        {9.0, 8.0, 8.0},              // B and C tie
    };
    WTLSummary s = compute_wtl(algos, fns, vals, Metric::Mean, 1e-8);
    REQUIRE(s.counts.size() == 3);
    CHECK(s.counts[0].w == 1);
    CHECK(s.counts[0].t == 1);
    CHECK(s.counts[0].l == 1);
    CHECK(s.counts[1].w == 0);
    CHECK(s.counts[1].t == 2);
    CHECK(s.counts[1].l == 1);
    CHECK(s.counts[2].w == 0);
    CHECK(s.counts[2].t == 1);
    CHECK(s.counts[2].l == 2);
    CHECK(s.outcomes[0].best_algorithms == std::vector<int>{0});
    CHECK(s.outcomes[2].best_algorithms == std::vector<int>{1, 2});
    CHECK(std::string(to_string(Metric::Mean)) == "mean");
}

TEST_CASE("experiment: thread count does not change the report") {
    ExperimentConfig cfg;
    cfg.algorithms = {{"de", "", {{"NP", 20}}}, {"hide", "", {{"NP", 20}, {"N_l", 2}}}};
    cfg.functions = {{"f1", 10, {}, {}}, {"f5", 10, {}, {}}};
    cfg.runs = 3;
    cfg.termination.max_generations = 30;
    cfg.base_seed = 11;
    cfg.trace_stride = 5;

    cfg.jobs = 1;
    ExperimentReport serial = run_experiment(cfg);
    cfg.jobs = 3;
    ExperimentReport parallel = run_experiment(cfg);

    REQUIRE(serial.cells.size() == 4);
    REQUIRE(parallel.cells.size() == 4);
    for (size_t i = 0; i < serial.cells.size(); ++i) {
        CHECK(serial.cells[i].stats.per_run_finals == parallel.cells[i].stats.per_run_finals);
        CHECK(serial.cells[i].mean_trace == parallel.cells[i].mean_trace);
        CHECK(serial.cells[i].stats.per_run_finals.size() == 3);
    }

    const Cell* cell = serial.find("de", "f1", 10);
    REQUIRE(cell != nullptr);
    CHECK(cell->stats.best <= cell->stats.mean + 1e-12);
    CHECK(cell->trace_generations.front() == 0);
    CHECK(cell->trace_generations.back() == 30);
    CHECK(serial.find("de", "f9", 10) == nullptr);

    // per-run stats are consistent with the raw finals
    double mean = 0.0;
    for (double v : cell->stats.per_run_finals) mean += v;
    mean /= cell->stats.per_run_finals.size();
    CHECK(cell->stats.mean == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("config and report round-trip through json") {
    ExperimentConfig cfg;
    cfg.algorithms = {{"hideA", "hide", {{"HC", 0.3}}}, {"de", "", {}}};
    cfg.functions = {{"f2", 10, {}, {}}};
    cfg.runs = 2;
    cfg.termination.max_generations = 10;
    cfg.base_seed = 5;
    cfg.trace_stride = 2;
    cfg.jobs = 2;

    nlohmann::json j = config_to_json(cfg);
    ExperimentConfig back = config_from_json(j);
    CHECK(back.algorithms.size() == 2);
    CHECK(back.algorithms[0].name == "hideA");
    CHECK(back.algorithms[0].registry_key() == "hide");
    CHECK(back.algorithms[0].params.at("HC") == 0.3);
    CHECK(back.runs == 2);
    CHECK(back.base_seed == 5);

    // unknown top-level keys are ignored so configs can carry notes
    nlohmann::json annotated = j;
    annotated["notes"] = "free-form commentary";
    CHECK_NOTHROW(config_from_json(annotated));

    ExperimentReport rep = run_experiment(cfg);
    nlohmann::json rj = report_to_json(rep);
    ExperimentReport rback = report_from_json(rj);
    REQUIRE(rback.cells.size() == rep.cells.size());
    for (size_t i = 0; i < rep.cells.size(); ++i) {
        CHECK(rback.cells[i].stats.per_run_finals == rep.cells[i].stats.per_run_finals);
        CHECK(rback.cells[i].mean_trace == rep.cells[i].mean_trace);
    }

    fs::path dir = fs::temp_directory_path() / "hideopt_harness_test";
    fs::create_directories(dir);
    std::string rpath = (dir / "report.json").string();
    save_report(rep, rpath);
    ExperimentReport loaded = load_report(rpath);
    CHECK(loaded.cells.size() == rep.cells.size());

    WTLSummary best = compute_wtl(rep, Metric::Best);
    WTLSummary mean = compute_wtl(rep, Metric::Mean);
    std::string table = render_table(rep, best, mean);
    CHECK(table.find("f2") != std::string::npos);
    CHECK(table.find("hideA") != std::string::npos);
    std::string wtl = render_wtl(best);
    CHECK(wtl.find("w/t/l") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("trace export: one csv per function with aligned columns") {
    ExperimentConfig cfg;
    cfg.algorithms = {{"de", "", {{"NP", 10}}}, {"jade", "", {{"NP", 10}}}};
    cfg.functions = {{"sphere", 3, {}, {}}};
    cfg.runs = 2;
    cfg.termination.max_generations = 8;
    cfg.trace_stride = 4;
    ExperimentReport rep = run_experiment(cfg);

    fs::path dir = fs::temp_directory_path() / "hideopt_traces_test";
    fs::create_directories(dir);
    auto paths = export_traces(rep, dir.string());
    REQUIRE(paths.size() == 1);

    std::ifstream in(paths[0]);
    std::string header;
    std::getline(in, header);
    CHECK(header == "generation,de,jade");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);  // generations 0, 4, 8

    std::string single = (dir / "single.csv").string();
    write_run_trace(single, {3.0, 2.0, 1.0});
    std::ifstream sin(single);
    std::getline(sin, header);
    CHECK(header == "generation,best_fitness");
    fs::remove_all(dir);
}

TEST_CASE("resolve_function: suite ids, base ids, external data") {
    ObjectiveFunction f = resolve_function({"f3", 10, {}, {}}, bench::kDefaultSuiteSeed);
    CHECK(f.bias == doctest::Approx(300.0));
    ObjectiveFunction raw = resolve_function({"ackley", 5, {}, {}}, bench::kDefaultSuiteSeed);
    CHECK(raw.space.dim == 5);

    fs::path dir = fs::temp_directory_path() / "hideopt_resolve_test";
    fs::create_directories(dir);
    std::string path = (dir / "inst.txt").string();
    bench::CecData data;
    data.transform = bench::Transform::identity(4);
    data.transform.shift = {1.0, 2.0, 3.0, 4.0};
    bench::save_cec_data(path, data);

    FunctionSpec spec{"ext1", 4, path, std::string("rastrigin")};
    ObjectiveFunction ext = resolve_function(spec, bench::kDefaultSuiteSeed);
    CHECK(ext.eval(std::vector<double>{1.0, 2.0, 3.0, 4.0}) == doctest::Approx(0.0));

    FunctionSpec broken{"ext2", 4, path, {}};  // data file without a base id
    CHECK_THROWS(resolve_function(broken, bench::kDefaultSuiteSeed));
    fs::remove_all(dir);
}

TEST_CASE("config validation rejects nonsense") {
    ExperimentConfig cfg;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // no algorithms

    cfg.algorithms = {{"de", "", {}}};
    cfg.functions = {{"f1", 10, {}, {}}};
    CHECK_NOTHROW(cfg.validate());
    cfg.runs = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.runs = 5;
    cfg.trace_stride = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.trace_stride = 1;
    cfg.jobs = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
