#pragma once

namespace lossymz {

// Mean-photocount fringe of a coherent-light Mach-Zehnder:
//   n1(phi) = (N/2)(1 + V cos phi),  n2(phi) = (N/2)(1 - V cos phi).
// Detector counts are independent Poissonian.
struct FringeModel {
    double total_mean_counts = 0.0;  // N
    double visibility = 0.0;         // V in [0,1]

    FringeModel(double total_mean_counts, double visibility);

    double mean_n1(double phi) const;
    double mean_n2(double phi) const;
};

// Physical knobs of the lossy interferometer: input intensity, fraction tau
// sent to the sensing arm, arm transmission eta, operating phase.
struct InterferometerSetting {
    double input_mean_photons = 0.0;
    double sensing_fraction = 0.5;
    double transmission = 1.0;
    double operating_phase = 0.0;
};

// Two-beam interference on a balanced output coupler:
//   N = N0 (tau eta + 1 - tau),  V = 2 sqrt(tau eta (1 - tau)) / (tau eta + 1 - tau).
FringeModel fringe_from_setting(const InterferometerSetting& s);

// Poisson-count Fisher information, F(phi) = N V^2 sin^2 phi / (1 - V^2 cos^2 phi).
// The zero-mean detector at V = 1, phi in {0, pi} contributes 0 (both count
// mean and its derivative vanish there).
double poisson_cfi(const FringeModel& m, double phi);

struct ClassicalOptimum {
    double tau_star = 0.0;
    double phi_star = 0.0;
    double fisher_max = 0.0;
    double delta_phi = 0.0;
};

// Maximizes poisson_cfi over (tau, phi) at fixed input intensity by a
// 512x512 grid followed by coordinate-wise golden-section refinement.
ClassicalOptimum optimize_classical(double eta, double input_photons);

}  // namespace lossymz
