#include "lossymz/loss_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace lossymz {

LossChannel::LossChannel(double eta) : transmission(eta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("LossChannel: transmission must lie in (0,1]");
}

double binomial_loss_weight(int k, int l, double eta) {
    if (l < 0 || l > k)
        throw std::domain_error("binomial_loss_weight: need 0 <= l <= k");
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("binomial_loss_weight: transmission must lie in (0,1]");
    // 0^0 = 1 keeps the lossless case exact.
    const double surv = (k - l == 0) ? 1.0 : std::pow(eta, k - l);
    const double lost = (l == 0) ? 1.0 : std::pow(1.0 - eta, l);
    double binom = 1.0;
    for (int i = 1; i <= l; ++i)
        binom = binom * static_cast<double>(k - l + i) / static_cast<double>(i);
    return binom * surv * lost;
}

BlockDecomposition decompose(const TwoModeFockState& state, const LossChannel& channel) {
    const int n = state.total_photons();
    const double eta = channel.transmission;

    BlockDecomposition out;
    out.total_photons = n;
    out.blocks.resize(static_cast<std::size_t>(n) + 1);

    for (int l = 0; l <= n; ++l) {
        Block& blk = out.blocks[static_cast<std::size_t>(l)];
        blk.lost_photons = l;
        double p = 0.0;
        for (int k = l; k <= n; ++k) {
            const double w = state.weight(k) * binomial_loss_weight(k, l, eta);
            blk.phase_exponents.push_back(k);
            blk.cond_weights.push_back(w);
            p += w;
        }
        blk.weight = p;
        blk.empty = (p == 0.0);
        if (!blk.empty) {
            for (double& q : blk.cond_weights) q /= p;
        }
    }
    return out;
}

}  // namespace lossymz
