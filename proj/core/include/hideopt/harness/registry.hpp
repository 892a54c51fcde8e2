#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hideopt/objective.hpp"
#include "hideopt/run_result.hpp"
#include "hideopt/termination.hpp"

namespace hideopt::harness {

using Runner =
    std::function<RunResult(const ObjectiveFunction&, const Termination&, std::uint64_t seed)>;

// Known names: "de", "jade", "psode", "hide". params overrides the built-in
// defaults field by field (e.g. {"F":0.5,"CR":0.9,"NP":100}); unknown keys are
// rejected. Throws std::invalid_argument for an unknown algorithm.
Runner make_runner(const std::string& name, const nlohmann::json& params = {});

const std::vector<std::string>& algorithm_names();

}  // namespace hideopt::harness
