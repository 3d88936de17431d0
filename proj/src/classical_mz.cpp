#include "lossymz/classical_mz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lossymz/optim.hpp"

namespace lossymz {

FringeModel::FringeModel(double total_mean_counts_, double visibility_)
    : total_mean_counts(total_mean_counts_), visibility(visibility_) {
    if (total_mean_counts < 0.0)
        throw std::domain_error("FringeModel: mean counts must be non-negative");
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw std::domain_error("FringeModel: visibility must lie in [0,1]");
}

double FringeModel::mean_n1(double phi) const {
    return 0.5 * total_mean_counts * (1.0 + visibility * std::cos(phi));
}

double FringeModel::mean_n2(double phi) const {
    return 0.5 * total_mean_counts * (1.0 - visibility * std::cos(phi));
}

FringeModel fringe_from_setting(const InterferometerSetting& s) {
    if (s.input_mean_photons < 0.0)
        throw std::domain_error("fringe_from_setting: input intensity must be non-negative");
    if (!(s.sensing_fraction >= 0.0 && s.sensing_fraction <= 1.0))
        throw std::domain_error("fringe_from_setting: sensing fraction must lie in [0,1]");
    if (!(s.transmission > 0.0 && s.transmission <= 1.0))
        throw std::domain_error("fringe_from_setting: transmission must lie in (0,1]");

    const double sensing = s.sensing_fraction * s.transmission;   // surviving intensity
    const double reference = 1.0 - s.sensing_fraction;
    const double total = sensing + reference;
    const double vis = total > 0.0 ? 2.0 * std::sqrt(sensing * reference) / total : 0.0;
    return FringeModel(s.input_mean_photons * total, vis);
}

double poisson_cfi(const FringeModel& m, double phi) {
    // Sum (dn_i)^2 / n_i over both detectors, with 0/0 -> 0 at a dark fringe.
    const double half = 0.5 * m.total_mean_counts;
    const double slope = half * m.visibility * std::sin(phi);
    double fisher = 0.0;
    for (const double sign : {+1.0, -1.0}) {
        const double mean = half * (1.0 + sign * m.visibility * std::cos(phi));
        if (mean > 0.0)
            fisher += slope * slope / mean;
        // mean == 0 forces V = 1 and cos(phi) = -sign, hence slope == 0 too.
    }
    return fisher;
}

ClassicalOptimum optimize_classical(double eta, double input_photons) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("optimize_classical: transmission must lie in (0,1]");
    if (!(input_photons > 0.0))
        throw std::domain_error("optimize_classical: input intensity must be positive");

    const auto fisher_at = [&](double tau, double phi) {
        InterferometerSetting s{input_photons, tau, eta, phi};
        return poisson_cfi(fringe_from_setting(s), phi);
    };

    // Coarse 512x512 grid over tau x phi, phi restricted to (0, pi).
    const int grid = 512;
    double best_tau = 0.5, best_phi = std::numbers::pi / 2.0;
    double best = fisher_at(best_tau, best_phi);
    for (int i = 0; i <= grid; ++i) {
        const double tau = static_cast<double>(i) / grid;
        for (int j = 1; j < grid; ++j) {
            const double phi = std::numbers::pi * static_cast<double>(j) / grid;
            const double f = fisher_at(tau, phi);
            if (f > best) {
                best = f;
                best_tau = tau;
                best_phi = phi;
            }
        }
    }

    // Coordinate-wise golden-section refinement around the grid winner.
    for (int round = 0; round < 6; ++round) {
        const double dt = 2.0 / grid, dp = 2.0 * std::numbers::pi / grid;
        auto [tau, ft] = golden_max(
            [&](double t) { return fisher_at(t, best_phi); },
            std::max(0.0, best_tau - dt), std::min(1.0, best_tau + dt), 1e-12);
        best_tau = tau;
        auto [phi, fp] = golden_max(
            [&](double p) { return fisher_at(best_tau, p); },
            std::max(1e-9, best_phi - dp), std::min(std::numbers::pi - 1e-9, best_phi + dp),
            1e-12);
        best_phi = phi;
        best = fp;
        (void)ft;
    }

    ClassicalOptimum out;
    out.tau_star = best_tau;
    out.phi_star = best_phi;
    out.fisher_max = best;
    out.delta_phi = 1.0 / std::sqrt(best);
    return out;
}

}  // namespace lossymz
