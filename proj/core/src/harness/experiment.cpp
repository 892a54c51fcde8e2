#include "hideopt/harness/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <thread>

namespace hideopt::harness {

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw std::invalid_argument("config: no algorithms");
    if (functions.empty()) throw std::invalid_argument("config: no functions");
    if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
    if (trace_stride < 1) throw std::invalid_argument("config: trace_stride must be >= 1");
    if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
    termination.validate();
    for (size_t a = 0; a < algorithms.size(); ++a) {
        make_runner(algorithms[a].registry_key(), algorithms[a].params);  // resolvable?
        for (size_t b = a + 1; b < algorithms.size(); ++b)
            if (algorithms[a].name == algorithms[b].name)
                throw std::invalid_argument("config: duplicate algorithm name " +
                                            algorithms[a].name);
    }
    for (const auto& fs : functions) resolve_function(fs, suite_seed);
}

ObjectiveFunction resolve_function(const FunctionSpec& spec, std::uint64_t suite_seed) {
    if (spec.data_file) {
        if (!spec.base_id)
            throw std::invalid_argument("function " + spec.id + ": data_file needs base_id");
        bench::CecData data = bench::load_cec_data(*spec.data_file, spec.dim);
        return bench::function_from_cec_data(*spec.base_id, data, spec.dim, 0.0, spec.id);
    }
    return bench::suite_function(spec.id, spec.dim, suite_seed);
}

const Cell* ExperimentReport::find(const std::string& algorithm, const std::string& function_id,
                                   int dim) const {
    for (const auto& cell : cells)
        if (cell.algorithm == algorithm && cell.function_id == function_id && cell.dim == dim)
            return &cell;
    return nullptr;
}

namespace {

struct RunSlot {
    double final_fitness = 0.0;
    std::vector<double> trace;
    bool failed = false;
};

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();

    struct Task {
        size_t cell;
        int run;
    };

    size_t n_cells = config.algorithms.size() * config.functions.size();
    std::vector<ObjectiveFunction> objectives;
    objectives.reserve(config.functions.size());
    for (const auto& fs : config.functions) objectives.push_back(resolve_function(fs, config.suite_seed));

    std::vector<Runner> runners;
    runners.reserve(config.algorithms.size());
    for (const auto& as : config.algorithms) runners.push_back(make_runner(as.registry_key(), as.params));

    std::vector<std::vector<RunSlot>> slots(n_cells,
                                            std::vector<RunSlot>(static_cast<size_t>(config.runs)));
    std::vector<Task> tasks;
    tasks.reserve(n_cells * static_cast<size_t>(config.runs));
    for (size_t c = 0; c < n_cells; ++c)
        for (int r = 0; r < config.runs; ++r) tasks.push_back({c, r});
    std::vector<double> task_wall(tasks.size(), 0.0);

    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            size_t ai = task.cell / config.functions.size();
            size_t fi = task.cell % config.functions.size();
            RunSlot& slot = slots[task.cell][static_cast<size_t>(task.run)];
            auto start = std::chrono::steady_clock::now();
            try {
                RunResult result = runners[ai](objectives[fi], config.termination,
                                               config.base_seed + static_cast<std::uint64_t>(task.run));
                slot.final_fitness = result.trace.back();
                slot.trace = std::move(result.trace);
            } catch (const std::exception& e) {
                std::cerr << "warning: run failed (" << config.algorithms[ai].name << ", "
                          << config.functions[fi].id << ", run " << task.run << "): " << e.what()
                          << "\n";
                slot.failed = true;
            }
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            task_wall[t] = elapsed.count();
        }
    };

    int jobs = std::min<int>(config.jobs, static_cast<int>(tasks.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<double> cell_wall(n_cells, 0.0);
    for (size_t t = 0; t < tasks.size(); ++t) cell_wall[tasks[t].cell] += task_wall[t];

    ExperimentReport report;
    report.config = config;
    report.cells.reserve(n_cells);
    for (size_t c = 0; c < n_cells; ++c) {
        size_t ai = c / config.functions.size();
        size_t fi = c % config.functions.size();
        Cell cell;
        cell.algorithm = config.algorithms[ai].name;
        cell.function_id = config.functions[fi].id;
        cell.dim = config.functions[fi].dim;
        cell.wall_time_s = cell_wall[c];

        std::vector<const RunSlot*> ok;
        for (const auto& slot : slots[c]) {
            if (slot.failed)
                ++cell.stats.failed_runs;
            else
                ok.push_back(&slot);
        }
        if (ok.empty()) throw std::runtime_error("all runs failed for cell " + cell.function_id);

        double sum = 0.0, best = ok.front()->final_fitness;
        for (const auto* slot : ok) {
            cell.stats.per_run_finals.push_back(slot->final_fitness);
            sum += slot->final_fitness;
            if (slot->final_fitness < best) best = slot->final_fitness;
        }
        double n = static_cast<double>(ok.size());
        cell.stats.best = best;
        cell.stats.mean = sum / n;
        double var = 0.0;
        for (const auto* slot : ok) {
            double d = slot->final_fitness - cell.stats.mean;
            var += d * d;
        }
        cell.stats.stddev = std::sqrt(var / n);

        size_t trace_len = ok.front()->trace.size();
        for (size_t g = 0; g < trace_len; g += static_cast<size_t>(config.trace_stride)) {
            double m = 0.0;
            for (const auto* slot : ok) m += slot->trace[std::min(g, slot->trace.size() - 1)];
            cell.trace_generations.push_back(static_cast<int>(g));
            cell.mean_trace.push_back(m / n);
        }
        report.cells.push_back(std::move(cell));
    }
    return report;
}

}  // namespace hideopt::harness
