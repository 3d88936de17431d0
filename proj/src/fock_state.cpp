#include "lossymz/fock_state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lossymz {

namespace {

double norm_sq(const std::vector<cplx>& amps) {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
}

}  // namespace

TwoModeFockState::TwoModeFockState(std::vector<cplx> amplitudes)
    : amps_(std::move(amplitudes)) {
    if (amps_.empty())
        throw std::domain_error("TwoModeFockState: amplitude vector must have length N+1 >= 1");
    if (std::abs(norm_sq(amps_) - 1.0) > 1e-12)
        throw std::domain_error("TwoModeFockState: amplitudes not normalized");
}

TwoModeFockState normalized_state(std::vector<cplx> amplitudes) {
    const double n = std::sqrt(norm_sq(amplitudes));
    if (n == 0.0)
        throw std::domain_error("normalized_state: zero vector");
    for (cplx& a : amplitudes) a /= n;
    return TwoModeFockState(std::move(amplitudes));
}

TwoModeFockState make_single_photon_split(double sensing_weight) {
    if (!(sensing_weight >= 0.0 && sensing_weight <= 1.0))
        throw std::domain_error("make_single_photon_split: weight must lie in [0,1]");
    return TwoModeFockState({std::sqrt(1.0 - sensing_weight), std::sqrt(sensing_weight)});
}

TwoModeFockState make_noon(int total_photons) {
    if (total_photons < 1)
        throw std::domain_error("make_noon: N must be >= 1");
    std::vector<cplx> amps(static_cast<std::size_t>(total_photons) + 1, cplx(0.0));
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = r;
    amps.back() = r;
    return TwoModeFockState(std::move(amps));
}

TwoModeFockState apply_phase(const TwoModeFockState& state, double phi) {
    std::vector<cplx> amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k)
        amps[k] *= std::polar(1.0, static_cast<double>(k) * phi);
    return TwoModeFockState(std::move(amps));
}

double overlap_sq(const TwoModeFockState& a, const TwoModeFockState& b) {
    if (a.total_photons() != b.total_photons())
        throw std::domain_error("overlap_sq: photon numbers differ");
    cplx inner(0.0);
    const auto& xa = a.amplitudes();
    const auto& xb = b.amplitudes();
    for (std::size_t k = 0; k < xa.size(); ++k)
        inner += std::conj(xa[k]) * xb[k];
    return std::norm(inner);
}

double overlap_sq_copies(const TwoModeFockState& a, const TwoModeFockState& b, int copies) {
    if (copies < 1)
        throw std::domain_error("overlap_sq_copies: copies must be >= 1");
    return std::pow(overlap_sq(a, b), copies);
}

}  // namespace lossymz
