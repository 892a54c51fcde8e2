#include "hideopt/bench/suite.hpp"

#include <cctype>
#include <iostream>
#include <stdexcept>

#include "hideopt/bench/base_functions.hpp"

namespace hideopt::bench {

const char* to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::Unimodal: return "unimodal";
        case FunctionClass::Multimodal: return "multimodal";
        case FunctionClass::Hybrid: return "hybrid";
        case FunctionClass::Composition: return "composition";
    }
    return "?";
}

namespace {

std::vector<double> draw_shift(int dim, RngStream& rng) {
    std::vector<double> o(static_cast<size_t>(dim));
    for (auto& v : o) v = rng.uniform(-80.0, 80.0);
    return o;
}

std::vector<int> draw_permutation(int dim, RngStream& rng) {
    std::vector<int> perm(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) perm[j] = j;
    for (int j = dim - 1; j > 0; --j) {
        int k = rng.uniform_int(0, j);
        std::swap(perm[j], perm[k]);
    }
    return perm;
}

struct HybridDef {
    std::vector<std::string> bases;
    std::vector<double> proportions;
};

struct CompDef {
    std::vector<std::string> bases;
    std::vector<double> sigmas;
    std::vector<double> lambdas;
};

const std::vector<std::pair<std::string, std::string>>& unimodal_defs() {
    static const std::vector<std::pair<std::string, std::string>> defs = {
        {"sphere", "shifted rotated sphere"},
        {"bent_cigar", "shifted rotated bent cigar"},
        {"zakharov", "shifted rotated zakharov"},
    };
    return defs;
}

const std::vector<std::pair<std::string, std::string>>& multimodal_defs() {
    static const std::vector<std::pair<std::string, std::string>> defs = {
        {"rosenbrock", "shifted rotated rosenbrock"},
        {"rastrigin", "shifted rotated rastrigin"},
        {"ackley", "shifted rotated ackley"},
        {"griewank", "shifted rotated griewank"},
        {"schwefel", "shifted rotated schwefel"},
        {"levy", "shifted rotated levy"},
        {"expanded_schaffer_f6", "shifted rotated expanded schaffer F6"},
    };
    return defs;
}

const std::vector<HybridDef>& hybrid_defs() {
    static const std::vector<HybridDef> defs = {
        {{"zakharov", "rosenbrock", "rastrigin"}, {0.2, 0.4, 0.4}},
        {{"high_conditioned_elliptic", "schwefel", "bent_cigar"}, {0.3, 0.3, 0.4}},
        {{"bent_cigar", "rosenbrock", "expanded_schaffer_f6"}, {0.3, 0.3, 0.4}},
        {{"high_conditioned_elliptic", "ackley", "schwefel", "rastrigin"}, {0.2, 0.2, 0.2, 0.4}},
        {{"bent_cigar", "griewank", "rastrigin", "levy"}, {0.2, 0.2, 0.3, 0.3}},
        {{"ackley", "expanded_schaffer_f6", "rosenbrock", "sphere"}, {0.2, 0.2, 0.3, 0.3}},
        {{"discus", "ackley", "griewank", "rastrigin", "levy"}, {0.1, 0.2, 0.2, 0.2, 0.3}},
        {{"zakharov", "ackley", "high_conditioned_elliptic", "discus"}, {0.2, 0.2, 0.3, 0.3}},
        {{"bent_cigar", "rastrigin", "griewank", "rosenbrock", "expanded_schaffer_f6"},
         {0.2, 0.2, 0.2, 0.2, 0.2}},
        {{"sphere", "schwefel", "rastrigin", "levy", "zakharov"}, {0.1, 0.2, 0.2, 0.2, 0.3}},
    };
    return defs;
}

const std::vector<CompDef>& composition_defs() {
    static const std::vector<CompDef> defs = {
        {{"rosenbrock", "high_conditioned_elliptic", "rastrigin"},
         {10, 20, 30},
         {1, 1e-6, 1}},
        {{"rastrigin", "griewank", "schwefel"}, {10, 20, 30}, {1, 10, 1}},
        {{"rosenbrock", "ackley", "schwefel", "rastrigin"}, {10, 20, 30, 40}, {1, 10, 1, 1}},
        {{"ackley", "high_conditioned_elliptic", "griewank", "rastrigin"},
         {10, 20, 30, 40},
         {10, 1e-6, 10, 1}},
        {{"rastrigin", "schwefel", "levy", "bent_cigar"}, {10, 20, 30, 40}, {1, 1, 10, 1e-6}},
        {{"expanded_schaffer_f6", "sphere", "griewank", "rosenbrock", "rastrigin"},
         {10, 20, 30, 40, 50},
         {5, 1, 10, 1, 1}},
        {{"griewank", "rosenbrock", "ackley", "schwefel", "rastrigin"},
         {10, 20, 30, 40, 50},
         {10, 1, 10, 1, 1}},
        {{"ackley", "griewank", "discus", "rosenbrock"}, {10, 20, 30, 40}, {10, 10, 1e-6, 1}},
        {{"rastrigin", "expanded_schaffer_f6", "levy", "schwefel"},
         {10, 20, 30, 40},
         {1, 5, 10, 1}},
        {{"sphere", "rastrigin", "griewank", "ackley", "schwefel"},
         {10, 20, 30, 40, 50},
         {1, 1, 10, 10, 1}},
    };
    return defs;
}

}  // namespace

SuiteInternals suite_internals(int dim, std::uint64_t suite_seed) {
    if (dim < 5) throw std::invalid_argument("suite: dim must be >= 5");

    RngStream rng(suite_seed);
    SuiteInternals st;

    auto draw_transform = [&](double scale) {
        Transform t;
        t.dim = dim;
        t.shift = draw_shift(dim, rng);
        t.rotation = random_orthogonal(dim, rng);
        t.scale = scale;
        return t;
    };

    for (const auto& [base, desc] : unimodal_defs())
        st.transforms.push_back(draw_transform(origin_adapter_scale(base)));
    for (const auto& [base, desc] : multimodal_defs())
        st.transforms.push_back(draw_transform(origin_adapter_scale(base)));
    for (size_t h = 0; h < hybrid_defs().size(); ++h) {
        // Per-chunk rescale lives in the origin adapters, so scale is 1 here.
        st.transforms.push_back(draw_transform(1.0));
        st.hybrid_permutations.push_back(draw_permutation(dim, rng));
    }
    for (const auto& def : composition_defs()) {
        CompositionSpec spec;
        for (size_t c = 0; c < def.bases.size(); ++c) {
            CompositionComponent comp;
            comp.function_id = def.bases[c];
            comp.sigma = def.sigmas[c];
            comp.lambda = def.lambdas[c];
            comp.bias = 100.0 * static_cast<double>(c);
            comp.shift = draw_shift(dim, rng);
            spec.components.push_back(std::move(comp));
        }
        st.compositions.push_back(std::move(spec));
    }
    return st;
}

std::vector<SuiteEntry> suite(int dim, std::uint64_t suite_seed) {
    if (dim >= 5 && dim != 10 && dim != 30 && dim != 50 && dim != 100)
        std::cerr << "notice: suite dim " << dim << " is outside the usual {10, 30, 50, 100}\n";

    SuiteInternals st = suite_internals(dim, suite_seed);
    SearchSpace space = SearchSpace::box(dim, -100.0, 100.0);
    std::vector<SuiteEntry> out;
    out.reserve(30);
    int index = 0;

    auto next_id = [&index] { return "f" + std::to_string(index + 1); };

    for (const auto& [base, desc] : unimodal_defs()) {
        double bias = 100.0 * (index + 1);
        ObjectiveFunction f = apply_transform(origin_adapter(base, dim), st.transforms[index],
                                              bias, space, next_id());
        out.push_back({std::move(f), FunctionClass::Unimodal, desc});
        ++index;
    }
    for (const auto& [base, desc] : multimodal_defs()) {
        double bias = 100.0 * (index + 1);
        ObjectiveFunction f = apply_transform(origin_adapter(base, dim), st.transforms[index],
                                              bias, space, next_id());
        out.push_back({std::move(f), FunctionClass::Multimodal, desc});
        ++index;
    }
    for (size_t h = 0; h < hybrid_defs().size(); ++h) {
        const auto& def = hybrid_defs()[h];
        HybridSpec spec;
        spec.sub_functions = def.bases;
        spec.proportions = def.proportions;
        spec.permutation = st.hybrid_permutations[h];
        double bias = 100.0 * (index + 1);
        std::string desc = "hybrid of";
        for (const auto& b : def.bases) desc += " " + b;
        ObjectiveFunction f = make_hybrid(spec, st.transforms[index], bias, space, next_id());
        out.push_back({std::move(f), FunctionClass::Hybrid, desc});
        ++index;
    }
    for (size_t k = 0; k < composition_defs().size(); ++k) {
        const auto& def = composition_defs()[k];
        double bias = 100.0 * (index + 1);
        std::string desc = "composition of";
        for (const auto& b : def.bases) desc += " " + b;
        ObjectiveFunction f = make_composition(st.compositions[k], bias, space, next_id());
        out.push_back({std::move(f), FunctionClass::Composition, desc});
        ++index;
    }
    return out;
}

ObjectiveFunction suite_function(const std::string& id, int dim, std::uint64_t suite_seed) {
    if (id.size() >= 2 && id[0] == 'f') {
        bool numeric = true;
        for (size_t p = 1; p < id.size(); ++p) numeric = numeric && std::isdigit(id[p]);
        if (numeric) {
            int n = std::stoi(id.substr(1));
            if (n < 1 || n > 30)
                throw std::invalid_argument("suite_function: id out of range: " + id);
            return suite(dim, suite_seed)[static_cast<size_t>(n - 1)].function;
        }
    }
    return base_function(id, dim);  // raw catalog entry on its canonical domain
}

ObjectiveFunction function_from_cec_data(const std::string& base_id, const CecData& data, int dim,
                                         double bias, const std::string& id) {
    SearchSpace space = SearchSpace::box(dim, -100.0, 100.0);
    Transform t = data.transform;
    t.scale = origin_adapter_scale(base_id);
    if (data.permutation) {
        HybridSpec spec;
        spec.sub_functions = {base_id};
        spec.proportions = {1.0};
        spec.permutation = *data.permutation;
        return make_hybrid(spec, t, bias, space, id);
    }
    return apply_transform(origin_adapter(base_id, dim), t, bias, space, id);
}

}  // namespace hideopt::bench
