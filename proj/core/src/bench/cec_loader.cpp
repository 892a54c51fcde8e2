#include "hideopt/bench/cec_loader.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hideopt::bench {

CecData load_cec_data(const std::string& path, int dim) {
    if (dim < 1) throw std::invalid_argument("load_cec_data: dim must be >= 1");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_cec_data: cannot open " + path);

    std::vector<double> values;
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw std::runtime_error("load_cec_data: non-numeric token in " + path);

    size_t d = static_cast<size_t>(dim);
    size_t base = d + d * d;
    size_t with_perm = base + d;
    if (values.size() != base && values.size() != with_perm) {
        std::ostringstream msg;
        msg << "load_cec_data: " << path << " holds " << values.size()
            << " values; expected " << base << " (shift + rotation) or " << with_perm
            << " (with permutation) for dim " << dim;
        throw std::runtime_error(msg.str());
    }

    CecData data;
    data.transform.dim = dim;
    data.transform.shift.assign(values.begin(), values.begin() + d);
    data.transform.rotation.assign(values.begin() + d, values.begin() + base);
    data.transform.scale = 1.0;
    data.transform.validate();

    if (values.size() == with_perm) {
        std::vector<int> perm(d);
        std::vector<bool> seen(d, false);
        for (size_t j = 0; j < d; ++j) {
            double raw = values[base + j];
            int p = static_cast<int>(raw);
            if (static_cast<double>(p) != raw || p < 1 || p > dim || seen[p - 1])
                throw std::runtime_error("load_cec_data: invalid permutation entry in " + path);
            seen[p - 1] = true;
            perm[j] = p - 1;  // files are 1-based
        }
        data.permutation = std::move(perm);
    }
    return data;
}

void save_cec_data(const std::string& path, const CecData& data) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_cec_data: cannot open " + path);
    out.precision(17);
    int dim = data.transform.dim;
    for (int j = 0; j < dim; ++j) out << data.transform.shift[j] << (j + 1 < dim ? ' ' : '\n');
    std::vector<double> m = data.transform.rotation;
    if (m.empty()) {  // materialize the implicit identity
        m.assign(static_cast<size_t>(dim) * dim, 0.0);
        for (int j = 0; j < dim; ++j) m[static_cast<size_t>(j) * dim + j] = 1.0;
    }
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            out << m[static_cast<size_t>(r) * dim + c] << (c + 1 < dim ? ' ' : '\n');
    if (data.permutation) {
        for (int j = 0; j < dim; ++j)
            out << (*data.permutation)[j] + 1 << (j + 1 < dim ? ' ' : '\n');
    }
    if (!out) throw std::runtime_error("save_cec_data: write failed for " + path);
}

}  // namespace hideopt::bench
