#include "hideopt/harness/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hideopt::harness {

using nlohmann::json;

json config_to_json(const ExperimentConfig& config) {
    json algorithms = json::array();
    for (const auto& a : config.algorithms) {
        json ja{{"name", a.name}};
        if (!a.algorithm.empty() && a.algorithm != a.name) ja["algorithm"] = a.algorithm;
        if (!a.params.is_null() && !a.params.empty()) ja["params"] = a.params;
        algorithms.push_back(std::move(ja));
    }
    json functions = json::array();
    for (const auto& f : config.functions) {
        json jf{{"id", f.id}, {"dim", f.dim}};
        if (f.data_file) jf["data_file"] = *f.data_file;
        if (f.base_id) jf["base_id"] = *f.base_id;
        functions.push_back(std::move(jf));
    }
    json termination{{"max_generations", config.termination.max_generations}};
    if (config.termination.max_evaluations)
        termination["max_evaluations"] = *config.termination.max_evaluations;
    if (config.termination.target_fitness)
        termination["target_fitness"] = *config.termination.target_fitness;

    return json{{"algorithms", algorithms},
                {"functions", functions},
                {"runs", config.runs},
                {"termination", termination},
                {"base_seed", config.base_seed},
                {"output_dir", config.output_dir},
                {"trace_stride", config.trace_stride},
                {"jobs", config.jobs},
                {"suite_seed", config.suite_seed}};
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig config;
    for (const auto& ja : j.at("algorithms")) {
        AlgorithmSpec a;
        a.name = ja.at("name").get<std::string>();
        if (ja.contains("algorithm")) a.algorithm = ja.at("algorithm").get<std::string>();
        if (ja.contains("params")) a.params = ja.at("params");
        config.algorithms.push_back(std::move(a));
    }
    for (const auto& jf : j.at("functions")) {
        FunctionSpec f;
        f.id = jf.at("id").get<std::string>();
        f.dim = jf.at("dim").get<int>();
        if (jf.contains("data_file")) f.data_file = jf.at("data_file").get<std::string>();
        if (jf.contains("base_id")) f.base_id = jf.at("base_id").get<std::string>();
        config.functions.push_back(std::move(f));
    }
    if (j.contains("runs")) config.runs = j.at("runs").get<int>();
    if (j.contains("termination")) {
        const auto& jt = j.at("termination");
        if (jt.contains("max_generations"))
            config.termination.max_generations = jt.at("max_generations").get<int>();
        if (jt.contains("max_evaluations"))
            config.termination.max_evaluations = jt.at("max_evaluations").get<long long>();
        if (jt.contains("target_fitness"))
            config.termination.target_fitness = jt.at("target_fitness").get<double>();
    }
    if (j.contains("base_seed")) config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("output_dir")) config.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("trace_stride")) config.trace_stride = j.at("trace_stride").get<int>();
    if (j.contains("jobs")) config.jobs = j.at("jobs").get<int>();
    if (j.contains("suite_seed")) config.suite_seed = j.at("suite_seed").get<std::uint64_t>();
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    json j;
    in >> j;
    return config_from_json(j);
}

json report_to_json(const ExperimentReport& report) {
    json cells = json::array();
    for (const auto& cell : report.cells) {
        cells.push_back(json{{"algorithm", cell.algorithm},
                             {"function", cell.function_id},
                             {"dim", cell.dim},
                             {"best", cell.stats.best},
                             {"mean", cell.stats.mean},
                             {"stddev", cell.stats.stddev},
                             {"per_run_finals", cell.stats.per_run_finals},
                             {"failed_runs", cell.stats.failed_runs},
                             {"trace_generations", cell.trace_generations},
                             {"mean_trace", cell.mean_trace},
                             {"wall_time_s", cell.wall_time_s}});
    }
    return json{{"config", config_to_json(report.config)}, {"cells", cells}};
}

ExperimentReport report_from_json(const json& j) {
    ExperimentReport report;
    report.config = config_from_json(j.at("config"));
    for (const auto& jc : j.at("cells")) {
        Cell cell;
        cell.algorithm = jc.at("algorithm").get<std::string>();
        cell.function_id = jc.at("function").get<std::string>();
        cell.dim = jc.at("dim").get<int>();
        cell.stats.best = jc.at("best").get<double>();
        cell.stats.mean = jc.at("mean").get<double>();
        cell.stats.stddev = jc.at("stddev").get<double>();
        cell.stats.per_run_finals = jc.at("per_run_finals").get<std::vector<double>>();
        cell.stats.failed_runs = jc.at("failed_runs").get<int>();
        cell.trace_generations = jc.at("trace_generations").get<std::vector<int>>();
        cell.mean_trace = jc.at("mean_trace").get<std::vector<double>>();
        cell.wall_time_s = jc.at("wall_time_s").get<double>();
        report.cells.push_back(std::move(cell));
    }
    return report;
}

void save_report(const ExperimentReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report for writing: " + path);
    out << report_to_json(report).dump(2) << "\n";
}

ExperimentReport load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report: " + path);
    json j;
    in >> j;
    return report_from_json(j);
}

std::string render_wtl(const WTLSummary& summary) {
    std::ostringstream out;
    out << "w/t/l (" << to_string(summary.metric) << ", tolerance " << summary.tolerance << ")\n";
    for (size_t a = 0; a < summary.algorithms.size(); ++a) {
        out << "  " << std::left << std::setw(12) << summary.algorithms[a] << summary.counts[a].w
            << "/" << summary.counts[a].t << "/" << summary.counts[a].l << "\n";
    }
    return out.str();
}

std::string render_table(const ExperimentReport& report, const WTLSummary& best,
                         const WTLSummary& mean) {
    std::ostringstream out;
    out << std::left << std::setw(10) << "fn";
    for (const auto& a : report.config.algorithms)
        out << std::setw(15) << (a.name + " best") << std::setw(15) << (a.name + " mean");
    out << "\n";

    for (const auto& fs : report.config.functions) {
        out << std::left << std::setw(10) << (fs.id + "/" + std::to_string(fs.dim));
        for (const auto& a : report.config.algorithms) {
            const Cell* cell = report.find(a.name, fs.id, fs.dim);
            out << std::setw(15) << std::setprecision(8) << cell->stats.best << std::setw(15)
                << std::setprecision(8) << cell->stats.mean;
        }
        out << "\n";
    }
    out << std::left << std::setw(10) << "w/t/l";
    for (size_t a = 0; a < report.config.algorithms.size(); ++a) {
        auto fmt = [](const WTLEntry& e) {
            return std::to_string(e.w) + "/" + std::to_string(e.t) + "/" + std::to_string(e.l);
        };
        out << std::setw(15) << fmt(best.counts[a]) << std::setw(15) << fmt(mean.counts[a]);
    }
    out << "\n";
    return out.str();
}

}  // namespace hideopt::harness
