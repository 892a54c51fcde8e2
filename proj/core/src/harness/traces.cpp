#include "hideopt/harness/traces.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <stdexcept>

namespace hideopt::harness {

namespace {

// printf with %.17g keeps trace files byte-stable across runs and platforms.
void print_value(std::FILE* out, double v) { std::fprintf(out, "%.17g", v); }

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};

using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_for_write(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

}  // namespace

std::vector<std::string> export_traces(const ExperimentReport& report,
                                       const std::string& output_dir) {
    std::filesystem::create_directories(output_dir);
    std::vector<std::string> written;

    for (const auto& fs : report.config.functions) {
        std::vector<const Cell*> cells;
        for (const auto& as : report.config.algorithms) {
            const Cell* cell = report.find(as.name, fs.id, fs.dim);
            if (!cell) throw std::runtime_error("export_traces: missing cell for " + fs.id);
            cells.push_back(cell);
        }
        std::string path =
            output_dir + "/trace_" + fs.id + "_d" + std::to_string(fs.dim) + ".csv";
        FilePtr out = open_for_write(path);

        std::fprintf(out.get(), "generation");
        for (const auto& as : report.config.algorithms)
            std::fprintf(out.get(), ",%s", as.name.c_str());
        std::fprintf(out.get(), "\n");

        size_t rows = cells.front()->trace_generations.size();
        for (size_t g = 0; g < rows; ++g) {
            std::fprintf(out.get(), "%d", cells.front()->trace_generations[g]);
            for (const Cell* cell : cells) {
                std::fprintf(out.get(), ",");
                print_value(out.get(), cell->mean_trace[std::min(g, cell->mean_trace.size() - 1)]);
            }
            std::fprintf(out.get(), "\n");
        }
        written.push_back(path);
    }
    return written;
}

void write_run_trace(const std::string& path, const std::vector<double>& trace) {
    FilePtr out = open_for_write(path);
    std::fprintf(out.get(), "generation,best_fitness\n");
    for (size_t g = 0; g < trace.size(); ++g) {
        std::fprintf(out.get(), "%zu,", g);
        print_value(out.get(), trace[g]);
        std::fprintf(out.get(), "\n");
    }
}

}  // namespace hideopt::harness
