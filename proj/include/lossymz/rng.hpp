#pragma once

#include <cstdint>

namespace lossymz {

// splitmix64 (Steele/Lea/Flood). Small, splittable, and fully specified,
// so seeded runs are reproducible bit-exactly on a given platform.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~static_cast<std::uint64_t>(0); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream seed from (base seed, worker index), so
// partitioned work gives the same results for any worker count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform double in (0,1).
double uniform01(SplitMix64& rng);

// Poisson draw: CDF inversion for mean < 10, PTRS transformed rejection
// (Hoermann 1993) above.
long poisson_sample(double mean, SplitMix64& rng);

}  // namespace lossymz
