#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hideopt {

// Seeded random stream backed by std::mt19937_64, whose output sequence is
// fully specified by the standard. The derived uniform/integer/normal draws
// below are pinned here so that identical seeds give identical traces on
// every platform:
//   uniform():          (next64() >> 11) * 2^-53, in [0, 1)
//   uniform_int(lo,hi): lo + floor(uniform() * (hi - lo + 1)), inclusive
//   normal():           Box-Muller, u1 redrawn until > 0, then
//                       sqrt(-2 ln u1) * cos(2 pi u2); no caching
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive on both ends.
    int uniform_int(int lo, int hi) {
        int n = hi - lo + 1;
        int k = static_cast<int>(uniform() * n);
        return lo + (k < n ? k : n - 1);
    }

    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // mu + gamma * tan(pi * (u - 1/2))
    double cauchy(double mu, double gamma) {
        constexpr double pi = 3.1415926535897932384626433832795;
        return mu + gamma * std::tan(pi * (uniform() - 0.5));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace hideopt
