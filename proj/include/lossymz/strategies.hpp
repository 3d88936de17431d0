#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lossymz/fisher.hpp"

namespace lossymz {

enum class Strategy { classical, noon, optimal, multipass };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct StrategyResult {
    Strategy strategy = Strategy::classical;
    long long resource_n = 0;            // photons, or photons x passes
    double transmission = 1.0;
    double fisher = 0.0;
    double delta_phi = 0.0;              // 1/sqrt(fisher)
    std::vector<double> probe_weights;   // optimal strategy: w_k = |x_k|^2
    int passes = 0;                      // multipass strategy: chosen p
    bool converged = true;
};

struct ProbeOptions {
    int starts = 32;
    int max_iterations = 200;
    double tolerance = 1e-10;
    std::uint64_t seed = 0x6c6f73737900ull;
};

// Shot-noise-limited interferometer optimized for the given loss (classical
// reference curve), resource counted in mean input photons.
StrategyResult classical_precision(long long input_photons, double eta);

// N00N probe through the lossy shifter; closed form 2 N^2 eta^N / (1 + eta^N).
StrategyResult noon_precision(int total_photons, double eta);

// QFI of an N-photon probe with sensing-arm weights w (w on the simplex),
// sent through the lossy phase shifter. Depends on |x_k|^2 only.
double qfi_from_weights(const std::vector<double>& weights, double eta);

// Maximizes qfi_from_weights over the (N+1)-simplex by multi-start projected
// gradient ascent (the objective is concave in the weights, the starts guard
// against flat-boundary stalls).
StrategyResult optimize_probe(int total_photons, double eta, const ProbeOptions& options = {});

// Closed-form optimum of the single-photon split: 4 eta / (1 + sqrt(eta))^2.
double single_photon_optimal_fisher(double eta);

// Fisher information of one photon making `passes` trips through the lossy
// shifter, split optimized: passes^2 x single-photon optimum at eta^passes.
double multipass_fisher(int passes, double eta);

// Best fixed pass count for a resource budget of N photon-passes. By default
// the photon count m = N/p is treated as real (Fisher information is
// additive); integer_photons uses m = floor(N/p) instead. Smallest p wins
// ties.
StrategyResult best_multipass(long long resource, double eta, bool integer_photons = false);

}  // namespace lossymz
