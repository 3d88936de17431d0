#include "lossymz/fisher.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lossymz {

CfiResult cfi(const ParametricDistribution& dist, double phi) {
    const std::vector<double> p = dist.prob(phi);
    const std::vector<double> dp = dist.dprob(phi);
    if (p.size() != dp.size())
        throw std::domain_error("cfi: prob and dprob sizes differ");

    double psum = 0.0, dsum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        psum += p[i];
        dsum += dp[i];
    }
    if (std::abs(psum - 1.0) > 1e-10)
        throw std::domain_error("cfi: probabilities do not sum to 1");
    if (std::abs(dsum) > 1e-10)
        throw std::domain_error("cfi: derivative does not sum to 0");

    CfiResult result;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            result.value += dp[i] * dp[i] / p[i];
        } else if (dp[i] != 0.0) {
            // Supersensitive point: an outcome switching on from zero
            // probability carries formally infinite information.
            result.value = std::numeric_limits<double>::infinity();
            result.supersensitive = true;
            return result;
        }
    }
    return result;
}

double qfi_blocks(const BlockDecomposition& decomp) {
    double fisher = 0.0;
    for (const Block& blk : decomp.blocks) {
        if (blk.empty) continue;
        double mean = 0.0, mean_sq = 0.0;
        for (std::size_t i = 0; i < blk.phase_exponents.size(); ++i) {
            const double k = static_cast<double>(blk.phase_exponents[i]);
            mean += blk.cond_weights[i] * k;
            mean_sq += blk.cond_weights[i] * k * k;
        }
        fisher += 4.0 * blk.weight * (mean_sq - mean * mean);
    }
    return fisher;
}

double qfi_oracle(const TwoModeFockState& state, const LossChannel& channel, double phi) {
    const int n = state.total_photons();
    if (n > 30)
        throw std::domain_error("qfi_oracle: dense eigendecomposition guarded to N <= 30");
    const double eta = channel.transmission;

    // Basis: (l, k) with l lost photons and pre-loss sensing-arm number k,
    // k = l..N. Environment states for different l are orthogonal, so rho is
    // block diagonal in l.
    const int dim = (n + 1) * (n + 2) / 2;
    std::vector<std::pair<int, int>> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (int l = 0; l <= n; ++l)
        for (int k = l; k <= n; ++k) basis.emplace_back(l, k);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd drho = Eigen::MatrixXcd::Zero(dim, dim);
    const cplx iunit(0.0, 1.0);
    for (int a = 0; a < dim; ++a) {
        const auto [la, ka] = basis[static_cast<std::size_t>(a)];
        for (int b = 0; b < dim; ++b) {
            const auto [lb, kb] = basis[static_cast<std::size_t>(b)];
            if (la != lb) continue;
            const cplx amp = state.amplitude(ka) * std::conj(state.amplitude(kb)) *
                             std::sqrt(binomial_loss_weight(ka, la, eta) *
                                       binomial_loss_weight(kb, lb, eta)) *
                             std::polar(1.0, static_cast<double>(ka - kb) * phi);
            rho(a, b) = amp;
            drho(a, b) = iunit * static_cast<double>(ka - kb) * amp;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    const Eigen::VectorXd lambda = solver.eigenvalues();
    const Eigen::MatrixXcd vecs = solver.eigenvectors();
    const Eigen::MatrixXcd drho_eig = vecs.adjoint() * drho * vecs;

    double fisher = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double denom = lambda(i) + lambda(j);
            if (denom < 1e-12) continue;  // null-space artifacts
            fisher += 2.0 * std::norm(drho_eig(i, j)) / denom;
        }
    }
    return fisher;
}

double cramer_rao(double fisher, long repetitions) {
    if (!(fisher > 0.0))
        throw std::domain_error("cramer_rao: Fisher information must be positive");
    if (repetitions < 1)
        throw std::domain_error("cramer_rao: repetitions must be >= 1");
    return 1.0 / std::sqrt(static_cast<double>(repetitions) * fisher);
}

}  // namespace lossymz
