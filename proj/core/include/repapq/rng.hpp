#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace repapq {

// Deterministic RNG used everywhere a seed is surfaced.  mt19937_64 output is
// pinned by the standard and the float transforms below avoid the
// implementation-defined std::*_distribution, so a given seed produces the
// same stream on any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    uint64_t uniform_below(uint64_t n) { return static_cast<uint64_t>(uniform() * static_cast<double>(n)); }

    // standard normal via Box-Muller, one spare cached
    float gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = static_cast<float>(r * std::sin(a));
        has_spare_ = true;
        return static_cast<float>(r * std::cos(a));
    }

    float gaussian(float mean, float stddev) { return mean + stddev * gaussian(); }

    // derive an independent stream, e.g. one per parallel chunk
    Rng fork(uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    }

private:
    std::mt19937_64 eng_;
    float spare_ = 0.0f;
    bool has_spare_ = false;
};

}  // namespace repapq
