#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "hideopt/individual.hpp"
#include "hideopt/search_space.hpp"

namespace hideopt {

// Immutable, deterministic scalar field (minimization convention).
struct ObjectiveFunction {
    struct Optimum {
        std::vector<double> position;
        double value = 0.0;
    };

    std::string id;
    SearchSpace space;
    double bias = 0.0;
    std::function<double(std::span<const double>)> eval;
    std::optional<Optimum> optimum;

    double operator()(std::span<const double> x) const { return eval(x); }
};

// Per-run evaluation accounting. Non-finite objective values are recorded as
// faults and stored as +infinity so greedy selection rejects them.
class EvalContext {
public:
    explicit EvalContext(const ObjectiveFunction& f) : f_(&f) {}

    void evaluate(Individual& ind) {
        double v = f_->eval(ind.position);
        ++evaluations_;
        if (!std::isfinite(v)) {
            ++faults_;
            v = std::numeric_limits<double>::infinity();
        }
        ind.fitness = v;
        ind.evaluated = true;
    }

    const ObjectiveFunction& objective() const { return *f_; }
    long long evaluations() const { return evaluations_; }
    long long faults() const { return faults_; }

private:
    const ObjectiveFunction* f_;
    long long evaluations_ = 0;
    long long faults_ = 0;
};

}  // namespace hideopt
