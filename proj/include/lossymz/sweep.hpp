#pragma once

#include <string>
#include <vector>

#include "lossymz/strategies.hpp"

namespace lossymz {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { csv, json };

// Declarative precision-vs-resource sweep. Default transmissions follow the
// four reference curves (100%, 90%, 80%, 60%).
struct SweepConfig {
    std::vector<double> etas{1.0, 0.9, 0.8, 0.6};
    std::vector<long long> n_values;
    std::vector<Strategy> strategies{Strategy::classical, Strategy::noon,
                                     Strategy::optimal, Strategy::multipass};
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    // Classical rows re-labelled with detected mean counts N0*sqrt(eta).
    bool detected_counts_axis = false;
    std::uint64_t seed = 0;
};

// Roughly log-spaced integers from lo to hi inclusive, deduplicated.
std::vector<long long> log_spaced(long long lo, long long hi, int count);

// One StrategyResult per (strategy, eta, N), sorted by (strategy name, eta, N).
std::vector<StrategyResult> run_sweep(const SweepConfig& config);

// CSV with header strategy,eta,N,fisher,delta_phi; 12 significant digits,
// '\n' line endings. With detected_counts the classical N column is the
// detected mean count N0*sqrt(eta).
std::string sweep_to_csv(const std::vector<StrategyResult>& rows,
                         bool detected_counts = false);

// JSON object {meta:{version, config}, rows:[...]}.
std::string sweep_to_json(const std::vector<StrategyResult>& rows, const SweepConfig& config);

// gnuplot script plotting delta_phi vs N from the CSV, one curve per
// (strategy, eta), log-log axes.
std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path);

// Poincare-picture patch: mean vector of length N/2 in the equatorial plane,
// uncertainty semi-axes sqrt(N)/2 scaled by 10^(+-s/20) for s dB of
// squeezing (area preserved).
struct PoincarePatch {
    double center_x = 0.0;
    double center_y = 0.0;
    double center_length = 0.0;
    double axis_minor = 0.0;
    double axis_major = 0.0;
    double orientation = 0.0;  // angle of the minor axis, radians
};

PoincarePatch poincare_patch(long long total_photons, double squeezing_db, double angle);

}  // namespace lossymz
