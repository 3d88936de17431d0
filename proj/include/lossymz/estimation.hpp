#pragma once

#include <cstdint>
#include <vector>

#include "lossymz/classical_mz.hpp"
#include "lossymz/rng.hpp"

namespace lossymz {

struct CountPair {
    long n1 = 0;
    long n2 = 0;
};

// Poisson draws at the fringe means n1(phi), n2(phi).
CountPair simulate_counts(const FringeModel& model, double phi_true, SplitMix64& rng);

struct MleResult {
    double phase = 0.0;
    bool defined = false;  // false when all counts are zero
};

// Maximum-likelihood phase from pooled Poisson count pairs, bracketed
// golden-section search on a single monotonicity branch (default (0, pi)),
// resolved to 1e-8. The pooled log-likelihood depends on the counts only
// through the two detector sums, and is unimodal on the branch.
MleResult mle_phase(const std::vector<CountPair>& counts, const FringeModel& family,
                    double phi_lo = 0.0, double phi_hi = 3.14159265358979323846);

struct SimulationConfig {
    FringeModel model{0.0, 0.0};
    double true_phase = 0.0;
    long pairs_per_estimate = 1;  // count pairs pooled into each MLE
    long repetitions = 1;         // independent estimates
    std::uint64_t seed = 0;
};

struct SimulationRun {
    SimulationConfig config;
    std::vector<double> estimates;  // length = repetitions
    long undefined_estimates = 0;   // all-zero-count repetitions, skipped
};

// Runs `repetitions` independent experiments of `pairs_per_estimate` count
// pairs each. Repetition i uses the stream derive_seed(seed, i), so the
// result is identical for any partitioning across workers.
SimulationRun run_simulation(const SimulationConfig& config);

struct SimulationReport {
    double empirical_std = 0.0;  // over the repetition estimates
    double empirical_mean = 0.0;
    double crb = 0.0;            // 1/sqrt(pairs_per_estimate * F)
    double ratio = 0.0;          // empirical_std / crb
};

SimulationReport summarize(const SimulationRun& run);

}  // namespace lossymz
