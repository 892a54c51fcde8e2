#include "hideopt/harness/wtl.hpp"

#include <algorithm>
#include <stdexcept>

namespace hideopt::harness {

const char* to_string(Metric m) { return m == Metric::Best ? "best" : "mean"; }

WTLSummary compute_wtl(const std::vector<std::string>& algorithms,
                       const std::vector<std::string>& function_ids,
                       const std::vector<std::vector<double>>& values_per_function, Metric metric,
                       double tolerance) {
    if (algorithms.size() < 2) throw std::invalid_argument("compute_wtl: need >= 2 algorithms");
    if (function_ids.size() != values_per_function.size())
        throw std::invalid_argument("compute_wtl: function id / value row count mismatch");

    WTLSummary summary;
    summary.metric = metric;
    summary.tolerance = tolerance;
    summary.algorithms = algorithms;
    summary.counts.assign(algorithms.size(), {});

    for (size_t fi = 0; fi < values_per_function.size(); ++fi) {
        const auto& row = values_per_function[fi];
        if (row.size() != algorithms.size())
            throw std::invalid_argument("compute_wtl: row " + function_ids[fi] +
                                        " has wrong algorithm count");
        double min_v = row[0];
        for (double v : row) min_v = std::min(min_v, v);

        FunctionOutcome outcome;
        outcome.function_id = function_ids[fi];
        for (size_t a = 0; a < row.size(); ++a)
            if (row[a] <= min_v + tolerance) outcome.best_algorithms.push_back(static_cast<int>(a));

        bool unique = outcome.best_algorithms.size() == 1;
        for (size_t a = 0; a < row.size(); ++a) {
            bool leading = row[a] <= min_v + tolerance;
            if (leading && unique)
                ++summary.counts[a].w;
            else if (leading)
                ++summary.counts[a].t;
            else
                ++summary.counts[a].l;
        }
        summary.outcomes.push_back(std::move(outcome));
    }
    return summary;
}

WTLSummary compute_wtl(const ExperimentReport& report, Metric metric, double tolerance) {
    std::vector<std::string> algorithms;
    for (const auto& a : report.config.algorithms) algorithms.push_back(a.name);

    std::vector<std::string> function_ids;
    std::vector<std::vector<double>> values;
    for (const auto& fs : report.config.functions) {
        std::vector<double> row;
        for (const auto& a : report.config.algorithms) {
            const Cell* cell = report.find(a.name, fs.id, fs.dim);
            if (!cell)
                throw std::invalid_argument("compute_wtl: missing cell " + a.name + "/" + fs.id);
            row.push_back(metric == Metric::Best ? cell->stats.best : cell->stats.mean);
        }
        function_ids.push_back(fs.id);
        values.push_back(std::move(row));
    }
    WTLSummary summary = compute_wtl(algorithms, function_ids, values, metric, tolerance);
    for (size_t fi = 0; fi < report.config.functions.size(); ++fi)
        summary.outcomes[fi].dim = report.config.functions[fi].dim;
    return summary;
}

}  // namespace hideopt::harness
