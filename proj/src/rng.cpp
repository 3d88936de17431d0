#include "lossymz/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lossymz {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // One extra splitmix step decorrelates (seed, index) pairs.
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
    return mix();
}

double uniform01(SplitMix64& rng) {
    // 53 random bits into (0,1); the +0.5 offset excludes exact 0.
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

namespace {

long poisson_inversion(double mean, SplitMix64& rng) {
    const double u = uniform01(rng);
    double p = std::exp(-mean);
    double cdf = p;
    long k = 0;
    while (u > cdf) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        if (k > 1000) break;  // numerically unreachable for mean < 10
    }
    return k;
}

// PTRS transformed rejection (W. Hoermann, "The transformed rejection
// method for generating Poisson random variables", 1993). Valid for mean >= 10.
long poisson_ptrs(double mean, SplitMix64& rng) {
    const double log_mean = std::log(mean);
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = uniform01(rng) - 0.5;
        const double v = uniform01(rng);
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<long>(k);
        }
    }
}

}  // namespace

long poisson_sample(double mean, SplitMix64& rng) {
    if (mean < 0.0 || !std::isfinite(mean))
        throw std::domain_error("poisson_sample: mean must be finite and non-negative");
    if (mean == 0.0) return 0;
    return mean < 10.0 ? poisson_inversion(mean, rng) : poisson_ptrs(mean, rng);
}

}  // namespace lossymz
