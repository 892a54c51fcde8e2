#include "hideopt/bench/base_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace hideopt::bench {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kE = 2.7182818284590452353602874713527;
constexpr double kSchwefelConst = 418.9828872724339;
constexpr double kSchwefelOpt = 420.9687462275036;

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double bent_cigar(std::span<const double> x) {
    double s = x[0] * x[0];
    for (size_t i = 1; i < x.size(); ++i) s += 1e6 * x[i] * x[i];
    return s;
}

double zakharov(std::span<const double> x) {
    double s1 = 0.0, s2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        s1 += x[i] * x[i];
        s2 += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        double a = x[i + 1] - x[i] * x[i];
        double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
    return s;
}

double ackley(std::span<const double> x) {
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    double n = static_cast<double>(x.size());
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + kE;
}

double griewank(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

double schwefel(std::span<const double> x) {
    // Outside |v| <= 500 the bare v*sin(sqrt|v|) surface develops minima far
    // below zero; wrap the argument and add a quadratic penalty instead so the
    // recorded optimum stays the global one under shifted/scaled composition.
    double d = static_cast<double>(x.size());
    double s = kSchwefelConst * d;
    for (double v : x) {
        double g;
        if (std::fabs(v) <= 500.0) {
            g = v * std::sin(std::sqrt(std::fabs(v)));
        } else if (v > 500.0) {
            double w = 500.0 - std::fmod(v, 500.0);
            g = w * std::sin(std::sqrt(std::fabs(w))) -
                (v - 500.0) * (v - 500.0) / (10000.0 * d);
        } else {
            double w = std::fmod(-v, 500.0) - 500.0;
            g = w * std::sin(std::sqrt(std::fabs(w))) -
                (v + 500.0) * (v + 500.0) / (10000.0 * d);
        }
        s -= g;
    }
    return s;
}

double levy(std::span<const double> x) {
    auto w = [](double v) { return 1.0 + (v - 1.0) / 4.0; };
    double w1 = w(x[0]);
    double s = std::sin(kPi * w1) * std::sin(kPi * w1);
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        double wi = w(x[i]);
        double t = std::sin(kPi * wi + 1.0);
        s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * t * t);
    }
    double wd = w(x[x.size() - 1]);
    double t = std::sin(2.0 * kPi * wd);
    s += (wd - 1.0) * (wd - 1.0) * (1.0 + t * t);
    return s;
}

double schaffer_f6(double a, double b) {
    double r2 = a * a + b * b;
    double num = std::sin(std::sqrt(r2));
    num = num * num - 0.5;
    double den = 1.0 + 0.001 * r2;
    return 0.5 + num / (den * den);
}

double expanded_schaffer_f6(std::span<const double> x) {
    size_t n = x.size();
    if (n == 1) return schaffer_f6(x[0], x[0]);
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += schaffer_f6(x[i], x[(i + 1) % n]);
    return s;
}

double high_conditioned_elliptic(std::span<const double> x) {
    size_t n = x.size();
    if (n == 1) return x[0] * x[0];
    double s = 0.0;
    for (size_t i = 0; i < n; ++i)
        s += std::pow(1e6, static_cast<double>(i) / static_cast<double>(n - 1)) * x[i] * x[i];
    return s;
}

double discus(std::span<const double> x) {
    double s = 1e6 * x[0] * x[0];
    for (size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
    return s;
}

struct BaseDef {
    const char* id;
    double (*eval)(std::span<const double>);
    double domain;         // canonical box half-width
    double optimum_coord;  // canonical optimum = optimum_coord * ones
    double adapter_scale;  // domain rescale for a [-100,100] outer box
    int min_dim;
};

const BaseDef kCatalog[] = {
    {"sphere", sphere, 100.0, 0.0, 1.0, 1},
    {"bent_cigar", bent_cigar, 100.0, 0.0, 1.0, 2},
    {"zakharov", zakharov, 10.0, 0.0, 1.0, 1},
    {"rosenbrock", rosenbrock, 5.0, 1.0, 2.048 / 100.0, 2},
    {"rastrigin", rastrigin, 5.12, 0.0, 5.12 / 100.0, 1},
    {"ackley", ackley, 32.768, 0.0, 1.0, 1},
    {"griewank", griewank, 600.0, 0.0, 6.0, 1},
    {"schwefel", schwefel, 500.0, kSchwefelOpt, 10.0, 1},
    {"levy", levy, 10.0, 1.0, 5.12 / 100.0, 1},
    {"expanded_schaffer_f6", expanded_schaffer_f6, 100.0, 0.0, 1.0, 2},
    {"high_conditioned_elliptic", high_conditioned_elliptic, 100.0, 0.0, 1.0, 2},
    {"discus", discus, 100.0, 0.0, 1.0, 2},
};

const BaseDef& find_def(const std::string& id) {
    for (const auto& def : kCatalog)
        if (id == def.id) return def;
    throw std::invalid_argument("unknown base function id: " + id);
}

}  // namespace

const std::vector<std::string>& base_function_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& def : kCatalog) out.emplace_back(def.id);
        return out;
    }();
    return ids;
}

ObjectiveFunction base_function(const std::string& id, int dim) {
    const BaseDef& def = find_def(id);
    if (dim < def.min_dim)
        throw std::invalid_argument(std::string(def.id) + " requires dim >= " +
                                    std::to_string(def.min_dim));
    ObjectiveFunction f;
    f.id = def.id;
    f.space = SearchSpace::box(dim, -def.domain, def.domain);
    f.bias = 0.0;
    f.eval = def.eval;
    ObjectiveFunction::Optimum opt;
    opt.position.assign(static_cast<size_t>(dim), def.optimum_coord);
    opt.value = def.eval(opt.position);
    f.optimum = opt;
    return f;
}

double origin_adapter_scale(const std::string& id) { return find_def(id).adapter_scale; }

ObjectiveFunction origin_adapter(const std::string& id, int dim) {
    // Chunked hybrids may hand any base a 1-D slice; every formula above
    // degrades gracefully there, so only dim < 1 is rejected.
    const BaseDef& def = find_def(id);
    if (dim < 1) throw std::invalid_argument("origin_adapter: dim must be >= 1");
    double scale = def.adapter_scale;
    double offset = def.optimum_coord;
    auto eval = def.eval;

    ObjectiveFunction f;
    f.id = id;
    f.space = SearchSpace::box(dim, -100.0, 100.0);
    f.bias = 0.0;
    if (scale == 1.0 && offset == 0.0) {
        f.eval = eval;
    } else {
        f.eval = [eval, scale, offset, dim](std::span<const double> z) {
            std::vector<double> y(static_cast<size_t>(dim));
            for (int j = 0; j < dim; ++j) y[j] = scale * z[j] + offset;
            return eval(y);
        };
    }
    ObjectiveFunction::Optimum opt;
    opt.position.assign(static_cast<size_t>(dim), 0.0);
    opt.value = eval(std::vector<double>(static_cast<size_t>(dim), offset));
    f.optimum = opt;
    return f;
}

}  // namespace hideopt::bench
