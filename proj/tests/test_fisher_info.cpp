#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "lossymz/classical_mz.hpp"
#include "lossymz/fisher.hpp"
#include "lossymz/rng.hpp"

using namespace lossymz;

namespace {

TwoModeFockState random_state(int n, SplitMix64& rng) {
    std::vector<cplx> amps(static_cast<std::size_t>(n) + 1);
    for (cplx& a : amps)
        a = cplx(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    return normalized_state(std::move(amps));
}

ParametricDistribution binary_fringe() {
    return {[](double phi) {
                return std::vector<double>{std::cos(phi / 2) * std::cos(phi / 2),
                                           std::sin(phi / 2) * std::sin(phi / 2)};
            },
            [](double phi) {
                return std::vector<double>{-0.5 * std::sin(phi), 0.5 * std::sin(phi)};
            }};
}

double poisson_pmf(long k, double mean) {
    return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
}

// Truncated two-detector Poisson model; independent oracle for poisson_cfi.
ParametricDistribution truncated_poisson_pair(double total, double vis, long cutoff) {
    const auto probs = [=](double phi) {
        const double m1 = 0.5 * total * (1.0 + vis * std::cos(phi));
        const double m2 = 0.5 * total * (1.0 - vis * std::cos(phi));
        std::vector<double> p;
        double sum = 0.0;
        for (long a = 0; a <= cutoff; ++a)
            for (long b = 0; b <= cutoff; ++b) {
                p.push_back(poisson_pmf(a, m1) * poisson_pmf(b, m2));
                sum += p.back();
            }
        for (double& x : p) x /= sum;  // truncation error ~e^-cutoff
        return p;
    };
    return {probs, [=](double phi) {
                // analytic: d p(a,b) = p * [(a/m1 - 1) m1' + (b/m2 - 1) m2'],
                // then projected so the truncated vector still sums to zero
                const double m1 = 0.5 * total * (1.0 + vis * std::cos(phi));
                const double m2 = 0.5 * total * (1.0 - vis * std::cos(phi));
                const double dm = 0.5 * total * vis * std::sin(phi);
                const std::vector<double> p = probs(phi);
                std::vector<double> d(p.size());
                std::size_t i = 0;
                double total_d = 0.0;
                for (long a = 0; a <= cutoff; ++a)
                    for (long b = 0; b <= cutoff; ++b) {
                        d[i] = p[i] * ((a / m1 - 1.0) * (-dm) + (b / m2 - 1.0) * dm);
                        total_d += d[i];
                        ++i;
                    }
                for (std::size_t j = 0; j < d.size(); ++j) d[j] -= total_d * p[j];
                return d;
            }};
}

}  // namespace

TEST_CASE("cfi of the binary fringe is 1 everywhere") {
    const auto dist = binary_fringe();
    for (double phi = 0.2; phi < 3.0; phi += 0.4) {
        const CfiResult r = cfi(dist, phi);
        CHECK(!r.supersensitive);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("cfi of a constant distribution is 0") {
    ParametricDistribution dist{
        [](double) { return std::vector<double>{0.25, 0.25, 0.5}; },
        [](double) { return std::vector<double>{0.0, 0.0, 0.0}; }};
    CHECK(cfi(dist, 1.3).value == 0.0);
}

TEST_CASE("cfi matches the Poisson fringe closed form") {
    const double total = 7.5, vis = 0.9;
    const auto dist = truncated_poisson_pair(total, vis, 40);
    for (const double phi : {0.8, std::numbers::pi / 2}) {
        const FringeModel model(total, vis);
        CHECK(cfi(dist, phi).value == doctest::Approx(poisson_cfi(model, phi)).epsilon(1e-4));
    }
}

TEST_CASE("supersensitive point is flagged, not thrown") {
    // outcome switching on from p = 0 with nonzero derivative
    ParametricDistribution dist{
        [](double) { return std::vector<double>{1.0, 0.0}; },
        [](double) { return std::vector<double>{-0.3, 0.3}; }};
    const CfiResult r = cfi(dist, 0.0);
    CHECK(r.supersensitive);
    CHECK(std::isinf(r.value));
}

TEST_CASE("cfi additivity over independent copies") {
    const auto single = binary_fringe();
    const int copies = 3;
    ParametricDistribution product{
        [=](double phi) {
            const auto p = single.prob(phi);
            std::vector<double> out;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c) out.push_back(p[a] * p[b] * p[c]);
            return out;
        },
        [=](double phi) {
            const auto p = single.prob(phi);
            const auto d = single.dprob(phi);
            std::vector<double> out;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        out.push_back(d[a] * p[b] * p[c] + p[a] * d[b] * p[c] +
                                      p[a] * p[b] * d[c]);
            return out;
        }};
    const double phi = 1.1;
    CHECK(cfi(product, phi).value ==
          doctest::Approx(copies * cfi(single, phi).value).epsilon(1e-9));
}

TEST_CASE("qfi of lossless noon is N^2") {
    for (int n = 1; n <= 12; ++n) {
        const double f = qfi_blocks(decompose(make_noon(n), LossChannel(1.0)));
        CHECK(f == doctest::Approx(static_cast<double>(n) * n).epsilon(1e-12));
    }
}

TEST_CASE("one-term states carry no phase information") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<cplx> amps(static_cast<std::size_t>(n) + 1, cplx(0.0));
            amps[static_cast<std::size_t>(k)] = 1.0;
            const TwoModeFockState s{std::move(amps)};
            CHECK(qfi_blocks(decompose(s, LossChannel(0.7))) == doctest::Approx(0.0));
            CHECK(qfi_blocks(decompose(s, LossChannel(1.0))) == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("noon closed form under loss") {
    for (int n = 1; n <= 12; ++n) {
        for (const double eta : {0.6, 0.8, 0.9, 1.0}) {
            const double f = qfi_blocks(decompose(make_noon(n), LossChannel(eta)));
            const double closed =
                2.0 * n * n * std::pow(eta, n) / (1.0 + std::pow(eta, n));
            CHECK(f == doctest::Approx(closed).epsilon(1e-10));
        }
    }
}

TEST_CASE("lossless qfi is 4 Var(k)") {
    SplitMix64 rng(0x4fa1u);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(uniform01(rng) * 6);
        const auto s = random_state(n, rng);
        double mean = 0.0, mean_sq = 0.0;
        for (int k = 0; k <= n; ++k) {
            mean += k * s.weight(k);
            mean_sq += static_cast<double>(k) * k * s.weight(k);
        }
        const double expected = 4.0 * (mean_sq - mean * mean);
        CHECK(qfi_blocks(decompose(s, LossChannel(1.0))) ==
              doctest::Approx(expected).epsilon(1e-11));
        CHECK(qfi_oracle(s, LossChannel(1.0), 0.4) ==
              doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("oracle examples") {
    CHECK(qfi_oracle(make_single_photon_split(0.5), LossChannel(1.0), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // N00N(3) at eta = 0.8: 2 * 9 * 0.512 / 1.512
    CHECK(qfi_oracle(make_noon(3), LossChannel(0.8), 0.3) ==
          doctest::Approx(9.216 / 1.512).epsilon(1e-10));
}

TEST_CASE("oracle guard refuses large N") {
    CHECK_THROWS_AS(qfi_oracle(make_noon(31), LossChannel(0.9), 0.0), std::domain_error);
}

TEST_CASE("block formula agrees with the eigendecomposition oracle") {
    SplitMix64 rng(0x0aceu);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(uniform01(rng) * 6);
        const auto s = random_state(n, rng);
        const double phi = 2.0 * std::numbers::pi * uniform01(rng);
        const double eta = std::vector<double>{0.6, 0.8, 0.9, 1.0}[trial % 4];
        const double blocks = qfi_blocks(decompose(s, LossChannel(eta)));
        const double oracle = qfi_oracle(s, LossChannel(eta), phi);
        CHECK(std::abs(blocks - oracle) <= 1e-8);
    }
}

TEST_CASE("oracle is phase independent") {
    SplitMix64 rng(0x1234u);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_state(4, rng);
        const double f0 = qfi_oracle(s, LossChannel(0.7), 0.0);
        const double f1 = qfi_oracle(s, LossChannel(0.7), 2.1);
        CHECK(f0 == doctest::Approx(f1).epsilon(1e-9));
    }
}

TEST_CASE("qfi is non-increasing with loss") {
    SplitMix64 rng(0xdeafu);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(uniform01(rng) * 6);
        const auto s = random_state(n, rng);
        double prev = -1.0;
        for (double eta = 0.1; eta <= 1.0 + 1e-12; eta += 0.05) {
            const double f = qfi_blocks(decompose(s, LossChannel(std::min(eta, 1.0))));
            CHECK(f >= prev - 1e-10);
            prev = f;
        }
    }
}

TEST_CASE("measured cfi never exceeds the qfi bound") {
    // Single photon, split t, lossy sensing arm, balanced recombination:
    // outcomes {detector1, detector2, photon lost}.
    for (const double t : {0.2, 0.5, 0.75}) {
        for (const double eta : {0.6, 0.8, 1.0}) {
            ParametricDistribution dist{
                [=](double phi) {
                    const double cross = std::sqrt(t * eta * (1.0 - t)) * std::cos(phi);
                    return std::vector<double>{0.5 * (t * eta + 1.0 - t) + cross,
                                               0.5 * (t * eta + 1.0 - t) - cross,
                                               t * (1.0 - eta)};
                },
                [=](double phi) {
                    const double d = -std::sqrt(t * eta * (1.0 - t)) * std::sin(phi);
                    return std::vector<double>{d, -d, 0.0};
                }};
            const double qfi =
                qfi_blocks(decompose(make_single_photon_split(t), LossChannel(eta)));
            double best_cfi = 0.0;
            for (double phi = 0.05; phi < std::numbers::pi; phi += 0.01)
                best_cfi = std::max(best_cfi, cfi(dist, phi).value);
            CHECK(best_cfi <= qfi + 1e-9);
        }
    }
}

TEST_CASE("cramer_rao") {
    CHECK(cramer_rao(16.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(cramer_rao(2.0, 8) == doctest::Approx(0.25).epsilon(1e-15));
    for (int n = 1; n <= 9; ++n) {
        CHECK(cramer_rao(static_cast<double>(n)) ==
              doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-15));
        CHECK(cramer_rao(static_cast<double>(n) * n) ==
              doctest::Approx(1.0 / n).epsilon(1e-15));
    }
    CHECK_THROWS_AS(cramer_rao(0.0), std::domain_error);
    CHECK_THROWS_AS(cramer_rao(-1.0), std::domain_error);
    CHECK_THROWS_AS(cramer_rao(1.0, 0), std::domain_error);
}

TEST_CASE("cfi validates distribution sanity") {
    ParametricDistribution bad{
        [](double) { return std::vector<double>{0.6, 0.6}; },
        [](double) { return std::vector<double>{0.0, 0.0}; }};
    CHECK_THROWS_AS(cfi(bad, 0.0), std::domain_error);
}
