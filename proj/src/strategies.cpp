#include "lossymz/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lossymz/classical_mz.hpp"
#include "lossymz/rng.hpp"

namespace lossymz {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::classical: return "classical";
        case Strategy::noon: return "noon";
        case Strategy::optimal: return "optimal";
        case Strategy::multipass: return "multipass";
    }
    throw std::logic_error("strategy_name: unknown tag");
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "classical") return Strategy::classical;
    if (name == "noon") return Strategy::noon;
    if (name == "optimal") return Strategy::optimal;
    if (name == "multipass") return Strategy::multipass;
    throw std::domain_error("unknown strategy: " + name);
}

StrategyResult classical_precision(long long input_photons, double eta) {
    if (input_photons < 1)
        throw std::domain_error("classical_precision: need at least one photon");
    const ClassicalOptimum opt = optimize_classical(eta, static_cast<double>(input_photons));
    StrategyResult r;
    r.strategy = Strategy::classical;
    r.resource_n = input_photons;
    r.transmission = eta;
    r.fisher = opt.fisher_max;
    r.delta_phi = opt.delta_phi;
    return r;
}

StrategyResult noon_precision(int total_photons, double eta) {
    const TwoModeFockState state = make_noon(total_photons);
    const double fisher = qfi_blocks(decompose(state, LossChannel(eta)));
    StrategyResult r;
    r.strategy = Strategy::noon;
    r.resource_n = total_photons;
    r.transmission = eta;
    r.fisher = fisher;
    r.delta_phi = 1.0 / std::sqrt(fisher);
    return r;
}

namespace {

// b_{k,l} table for k,l = 0..n.
std::vector<std::vector<double>> loss_table(int n, double eta) {
    std::vector<std::vector<double>> b(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        b[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(k) + 1);
        for (int l = 0; l <= k; ++l)
            b[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                binomial_loss_weight(k, l, eta);
    }
    return b;
}

double qfi_weights_impl(const std::vector<double>& w,
                        const std::vector<std::vector<double>>& b) {
    const int n = static_cast<int>(w.size()) - 1;
    double fisher = 0.0;
    for (int l = 0; l <= n; ++l) {
        double p = 0.0, s1 = 0.0, s2 = 0.0;
        for (int k = l; k <= n; ++k) {
            const double t = w[static_cast<std::size_t>(k)] *
                             b[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            p += t;
            s1 += t * k;
            s2 += t * static_cast<double>(k) * k;
        }
        if (p > 0.0) fisher += 4.0 * (s2 - s1 * s1 / p);
    }
    return fisher;
}

// dF/dw_k = 4 sum_l b_{k,l} (k - mu_l)^2, mu_l the mean exponent in block l.
std::vector<double> qfi_weights_grad(const std::vector<double>& w,
                                     const std::vector<std::vector<double>>& b) {
    const int n = static_cast<int>(w.size()) - 1;
    std::vector<double> mu(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<bool> live(static_cast<std::size_t>(n) + 1, false);
    for (int l = 0; l <= n; ++l) {
        double p = 0.0, s1 = 0.0;
        for (int k = l; k <= n; ++k) {
            const double t = w[static_cast<std::size_t>(k)] *
                             b[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            p += t;
            s1 += t * k;
        }
        if (p > 0.0) {
            mu[static_cast<std::size_t>(l)] = s1 / p;
            live[static_cast<std::size_t>(l)] = true;
        }
    }
    std::vector<double> grad(w.size(), 0.0);
    for (int k = 0; k <= n; ++k) {
        double g = 0.0;
        for (int l = 0; l <= k; ++l) {
            if (!live[static_cast<std::size_t>(l)]) continue;
            const double d = static_cast<double>(k) - mu[static_cast<std::size_t>(l)];
            g += b[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] * d * d;
        }
        grad[static_cast<std::size_t>(k)] = 4.0 * g;
    }
    return grad;
}

// Euclidean projection onto the probability simplex (Duchi et al. 2008).
std::vector<double> project_simplex(std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, theta = 0.0;
    int rho = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cum += u[i];
        const double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) {
            rho = static_cast<int>(i + 1);
            theta = t;
        }
    }
    (void)rho;
    for (double& x : v) x = std::max(x - theta, 0.0);
    return v;
}

struct AscentOutcome {
    std::vector<double> weights;
    double fisher = 0.0;
    bool converged = false;
};

AscentOutcome projected_ascent(std::vector<double> w,
                               const std::vector<std::vector<double>>& b,
                               const ProbeOptions& opt) {
    double f = qfi_weights_impl(w, b);
    bool converged = false;
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        const std::vector<double> g = qfi_weights_grad(w, b);
        double step = 1.0;
        std::vector<double> w_next;
        double f_next = f;
        bool improved = false;
        while (step > 1e-14) {
            std::vector<double> trial(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) trial[i] = w[i] + step * g[i];
            trial = project_simplex(std::move(trial));
            const double ft = qfi_weights_impl(trial, b);
            if (ft > f) {
                w_next = std::move(trial);
                f_next = ft;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) {
            converged = true;  // no uphill move left
            break;
        }
        const double gain = f_next - f;
        w = std::move(w_next);
        f = f_next;
        if (gain < opt.tolerance) {
            converged = true;
            break;
        }
    }
    return {std::move(w), f, converged};
}

double binom_coeff(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

}  // namespace

double qfi_from_weights(const std::vector<double>& weights, double eta) {
    if (weights.empty())
        throw std::domain_error("qfi_from_weights: empty weight vector");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw std::domain_error("qfi_from_weights: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::domain_error("qfi_from_weights: weights must sum to 1");
    const int n = static_cast<int>(weights.size()) - 1;
    return qfi_weights_impl(weights, loss_table(n, eta));
}

StrategyResult optimize_probe(int total_photons, double eta, const ProbeOptions& options) {
    if (total_photons < 1)
        throw std::domain_error("optimize_probe: N must be >= 1");
    const auto b = loss_table(total_photons, eta);
    const std::size_t dim = static_cast<std::size_t>(total_photons) + 1;

    std::vector<std::vector<double>> starts;
    starts.emplace_back(dim, 1.0 / static_cast<double>(dim));  // uniform
    {
        std::vector<double> noon(dim, 0.0);  // N00N weights
        noon.front() = 0.5;
        noon.back() = 0.5;
        starts.push_back(std::move(noon));
    }
    {
        // Independent-photon (binomial) weights at the single-photon optimum split.
        const double t = 1.0 / (1.0 + std::sqrt(eta));
        std::vector<double> binom(dim, 0.0);
        for (int k = 0; k <= total_photons; ++k)
            binom[static_cast<std::size_t>(k)] =
                binom_coeff(total_photons, k) * std::pow(t, k) *
                std::pow(1.0 - t, total_photons - k);
        starts.push_back(std::move(binom));
    }
    for (int s = static_cast<int>(starts.size()); s < options.starts; ++s) {
        SplitMix64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(s)));
        std::vector<double> w(dim);
        double sum = 0.0;
        for (double& x : w) {
            x = -std::log(uniform01(rng));  // Dirichlet(1,...,1)
            sum += x;
        }
        for (double& x : w) x /= sum;
        starts.push_back(std::move(w));
    }

    AscentOutcome best;
    best.fisher = -1.0;
    for (auto& start : starts) {
        AscentOutcome out = projected_ascent(std::move(start), b, options);
        if (out.fisher > best.fisher) best = std::move(out);
    }

    StrategyResult r;
    r.strategy = Strategy::optimal;
    r.resource_n = total_photons;
    r.transmission = eta;
    r.fisher = best.fisher;
    r.delta_phi = 1.0 / std::sqrt(best.fisher);
    r.probe_weights = std::move(best.weights);
    r.converged = best.converged;
    return r;
}

double single_photon_optimal_fisher(double eta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("single_photon_optimal_fisher: transmission out of range");
    const double root = std::sqrt(eta);
    return 4.0 * eta / ((1.0 + root) * (1.0 + root));
}

double multipass_fisher(int passes, double eta) {
    if (passes < 1)
        throw std::domain_error("multipass_fisher: passes must be >= 1");
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("multipass_fisher: transmission out of range");
    // p passes traverse the attenuator p times: effective transmission eta^p,
    // phase exponent p.
    const double p = static_cast<double>(passes);
    return p * p * single_photon_optimal_fisher(std::pow(eta, p));
}

StrategyResult best_multipass(long long resource, double eta, bool integer_photons) {
    if (resource < 1)
        throw std::domain_error("best_multipass: resource must be >= 1");
    long long best_p = 1;
    double best_f = -1.0;
    for (long long p = 1; p <= resource; ++p) {
        const double photons = integer_photons
                                   ? static_cast<double>(resource / p)
                                   : static_cast<double>(resource) / static_cast<double>(p);
        if (photons < 1.0) break;
        const double f = photons * multipass_fisher(static_cast<int>(p), eta);
        if (f > best_f) {  // strict: smallest p among maximizers
            best_f = f;
            best_p = p;
        }
    }
    StrategyResult r;
    r.strategy = Strategy::multipass;
    r.resource_n = resource;
    r.transmission = eta;
    r.fisher = best_f;
    r.delta_phi = 1.0 / std::sqrt(best_f);
    r.passes = static_cast<int>(best_p);
    return r;
}

}  // namespace lossymz
