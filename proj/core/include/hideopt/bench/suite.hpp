#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hideopt/bench/cec_loader.hpp"
#include "hideopt/bench/composition.hpp"
#include "hideopt/bench/hybrid.hpp"

namespace hideopt::bench {

inline constexpr std::uint64_t kDefaultSuiteSeed = 2017;

enum class FunctionClass { Unimodal, Multimodal, Hybrid, Composition };

const char* to_string(FunctionClass c);

struct SuiteEntry {
    ObjectiveFunction function;
    FunctionClass cls;
    std::string description;
};

// Fixed 30-function catalog on [-100,100]^dim: f1-f3 unimodal (shifted,
// rotated), f4-f10 multimodal, f11-f20 hybrid, f21-f30 composition; bias of
// f_n is 100*n. Transforms are generated deterministically from the suite
// seed. dims outside {10,30,50,100} are allowed with a stderr notice.
std::vector<SuiteEntry> suite(int dim, std::uint64_t suite_seed = kDefaultSuiteSeed);

// The deterministic construction recipe behind suite(): the shift/rotation
// transforms of f1-f20 (hybrid permutations alongside) and the composition
// specs of f21-f30. Exposed so integrity checks and tooling can inspect the
// exact instances the catalog evaluates.
struct SuiteInternals {
    std::vector<Transform> transforms;              // f1..f20, in order
    std::vector<std::vector<int>> hybrid_permutations;  // f11..f20, in order
    std::vector<CompositionSpec> compositions;      // f21..f30, in order
};
SuiteInternals suite_internals(int dim, std::uint64_t suite_seed = kDefaultSuiteSeed);

// Single entry by id ("f1".."f30"); also accepts a raw base-function id on
// its canonical domain. Throws on anything else.
ObjectiveFunction suite_function(const std::string& id, int dim,
                                 std::uint64_t suite_seed = kDefaultSuiteSeed);

// Base function behind externally supplied shift/rotation data.
ObjectiveFunction function_from_cec_data(const std::string& base_id, const CecData& data, int dim,
                                         double bias, const std::string& id);

}  // namespace hideopt::bench
