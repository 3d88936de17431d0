#pragma once

#include <complex>
#include <vector>

namespace lossymz {

using cplx = std::complex<double>;

// Pure N-photon state of the two interferometer arms, stored as amplitudes
// x_0..x_N over the kets |k, N-k>, k = photons in the sensing (phase + loss)
// arm, index ascending. Immutable after construction; all operations below
// are pure functions.
class TwoModeFockState {
public:
    // Amplitudes must have length N+1 >= 1 and unit norm within 1e-12.
    explicit TwoModeFockState(std::vector<cplx> amplitudes);

    int total_photons() const { return static_cast<int>(amps_.size()) - 1; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(int k) const { return amps_.at(static_cast<std::size_t>(k)); }
    // |x_k|^2
    double weight(int k) const { return std::norm(amps_.at(static_cast<std::size_t>(k))); }

private:
    std::vector<cplx> amps_;
};

// Normalizes and wraps an arbitrary nonzero amplitude vector.
TwoModeFockState normalized_state(std::vector<cplx> amplitudes);

// Single photon split between the arms: |x_1|^2 = sensing_weight.
TwoModeFockState make_single_photon_split(double sensing_weight);

// (|N0> + |0N>)/sqrt(2).
TwoModeFockState make_noon(int total_photons);

// x_k <- exp(i k phi) x_k.
TwoModeFockState apply_phase(const TwoModeFockState& state, double phi);

// |<a|b>|^2; requires equal photon number.
double overlap_sq(const TwoModeFockState& a, const TwoModeFockState& b);

// overlap_sq(a,b)^copies, the overlap of `copies` identical preparations.
double overlap_sq_copies(const TwoModeFockState& a, const TwoModeFockState& b, int copies);

}  // namespace lossymz
