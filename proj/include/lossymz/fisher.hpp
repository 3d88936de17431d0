#pragma once

#include <functional>
#include <vector>

#include "lossymz/loss_channel.hpp"

namespace lossymz {

// Finite-outcome statistics depending on a phase parameter. prob(phi) must
// sum to 1 within 1e-10 and dprob(phi) to 0 within 1e-10.
struct ParametricDistribution {
    std::function<std::vector<double>(double)> prob;
    std::function<std::vector<double>(double)> dprob;
};

struct CfiResult {
    double value = 0.0;
    // True when some outcome has p = 0 but p' != 0; value is +inf then.
    bool supersensitive = false;
};

// Classical Fisher information F(phi) = sum_k p_k'^2 / p_k. Outcomes with
// p = 0 and p' = 0 contribute zero.
CfiResult cfi(const ParametricDistribution& dist, double phi);

// Quantum Fisher information of an orthogonal pure-block mixture with
// phase-free weights: F_Q = 4 sum_l p_l Var_{q(.|l)}(k). Phase-independent.
double qfi_blocks(const BlockDecomposition& decomp);

// Independent cross-check: builds the full lossy density matrix rho(phi) and
// its analytic derivative, eigendecomposes, and sums
// 2 |<i|d_phi rho|j>|^2 / (lambda_i + lambda_j) over lambda_i + lambda_j >= 1e-12.
// Guarded to N <= 30 (dense eigensolve).
double qfi_oracle(const TwoModeFockState& state, const LossChannel& channel, double phi);

// Cramer-Rao bound 1/sqrt(repetitions * fisher).
double cramer_rao(double fisher, long repetitions = 1);

}  // namespace lossymz
