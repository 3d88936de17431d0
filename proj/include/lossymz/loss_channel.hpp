#pragma once

#include <vector>

#include "lossymz/fock_state.hpp"

namespace lossymz {

// Photon loss in the sensing arm, intensity transmission eta in (0,1].
struct LossChannel {
    double transmission;

    explicit LossChannel(double eta);
};

// One orthogonal pure component of the lossy output, labelled by the number
// of photons lost. The component lives in the (N - lost)-photon sector, so
// different blocks never interfere. Phase enters only through the integer
// exponents k (the pre-loss sensing-arm photon numbers); the weights are
// phase-free.
struct Block {
    int lost_photons = 0;
    double weight = 0.0;                  // p_l
    std::vector<int> phase_exponents;     // k = lost_photons..N
    std::vector<double> cond_weights;     // q_{k|l}, aligned with phase_exponents
    bool empty = true;                    // p_l == 0
};

struct BlockDecomposition {
    int total_photons = 0;
    std::vector<Block> blocks;  // indices l = 0..N, empty blocks retained
};

// Binomial damping weight b_{k,l} = C(k,l) eta^(k-l) (1-eta)^l, the
// probability that l of k photons are lost. Convention 0^0 = 1, so eta = 1
// gives b_{k,0} = 1.
double binomial_loss_weight(int k, int l, double eta);

// Phase-then-loss decomposition of a probe state:
//   p_l     = sum_{k>=l} |x_k|^2 b_{k,l}
//   q_{k|l} = |x_k|^2 b_{k,l} / p_l        (for p_l > 0)
BlockDecomposition decompose(const TwoModeFockState& state, const LossChannel& channel);

}  // namespace lossymz
