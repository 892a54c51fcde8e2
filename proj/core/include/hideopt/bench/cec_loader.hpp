#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hideopt/bench/transform.hpp"

namespace hideopt::bench {

struct CecData {
    Transform transform;
    std::optional<std::vector<int>> permutation;  // 0-based after load (files are 1-based)
};

// File layout: whitespace-separated reals — shift (dim values), rotation
// matrix (dim*dim values, row-major), then an optional permutation of dim
// 1-based integers. Diagnostics name the expected vs found element counts;
// the rotation is validated for orthogonality.
CecData load_cec_data(const std::string& path, int dim);

void save_cec_data(const std::string& path, const CecData& data);

}  // namespace hideopt::bench
