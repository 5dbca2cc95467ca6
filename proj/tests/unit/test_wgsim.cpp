// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ampcap/capacity.hpp"
#include "ampcap/errors.hpp"
#include "ampcap/parallel.hpp"
#include "ampcap/stats.hpp"
#include "ampcap/wgsim.hpp"

using namespace ampcap;
using namespace ampcap::wgsim;

TEST_CASE("mode counting") {
    CHECK(propagating_modes({10, 5, 0.0, 0.0, 0.0, 0}) == 10);
    CHECK(propagating_modes({1, 5, 0.0, 0.0, 0.0, 0}) == 1);
    CHECK(propagating_modes({10, 5, 0.0, 0.0, 3.5, 0}) < 10);
    CHECK(default_mode({10, 5, 0.0, 0.0, 0.0, 0}) == 5);
    CHECK_THROWS_AS(scattering_matrix({3, 5, 0.0, 0.0, 10.0, 0}), DimensionError);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(LatticeSpec({0, 5, 0.0, 0.0, 0.0, 0}).validate(), DimensionError);
    CHECK_THROWS_AS(LatticeSpec({3, 0, 0.0, 0.0, 0.0, 0}).validate(), DimensionError);
    CHECK_THROWS_AS(LatticeSpec({3, 5, -1.0, 0.0, 0.0, 0}).validate(), DomainError);
    CHECK_THROWS_AS(LatticeSpec({3, 5, 1.0, -0.1, 0.0, 0}).validate(), DomainError);
}

TEST_CASE("clean strip transmits perfectly") {
    for (int w : {1, 4, 10}) {
        const auto s = scattering_matrix({w, 30, 0.0, 0.0, 0.0, 0});
        const int n = s.n_modes();
        CHECK(unitarity_violation(s) < 1e-12);
        CHECK(s.transmission().cwiseAbs2().sum() == doctest::Approx(n).epsilon(1e-12));
        CHECK(s.reflection().cwiseAbs2().sum() < 1e-12);
    }
}

TEST_CASE("passive disordered strip is unitary and reciprocal") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto s = scattering_matrix({10, 80, 1.5, 0.0, 0.1, seed});
        const auto& m = s.matrix();
        CHECK(unitarity_violation(s) < 1e-10);
        CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("same seed gives the same sample") {
    const auto a = scattering_matrix({6, 40, 1.0, 0.0, 0.0, 99});
    const auto b = scattering_matrix({6, 40, 1.0, 0.0, 0.0, 99});
    const auto c = scattering_matrix({6, 40, 1.0, 0.0, 0.0, 100});
    CHECK(a.matrix() == b.matrix());
    CHECK(a.matrix() != c.matrix());
}

TEST_CASE("gain makes the scattering matrix super-unitary") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = scattering_matrix({10, 100, 1.0, 1e-3, 0.0, seed});
        CHECK(min_eigenvalue_excess(s) > 0.0);
        CHECK(is_super_unitary(s));
        for (int beta = 0; beta < s.n_modes(); ++beta) {
            CHECK(fd_noise_weight(s, beta) > 0.0);
        }
    }
}

TEST_CASE("single-site strip on its lasing pole is rejected") {
    CHECK_THROWS_AS(scattering_matrix({1, 1, 0.0, 2.0, 0.0, 0}), LasingInstabilityError);
    CHECK_NOTHROW(scattering_matrix({1, 1, 0.0, 1.5, 0.0, 0}));
}

TEST_CASE("ensemble statistics") {
    const LatticeSpec spec{8, 60, 1.0, 0.0, 0.0, 7};
    const auto st = run_ensemble(spec, 64);
    CHECK(st.n_samples == 64);
    CHECK(st.n_modes == 8);
    CHECK(st.alpha == 4);
    CHECK(st.beta == 4);
    REQUIRE(st.tau_samples.size() == 64);
    CHECK(st.tau_bar_hat == doctest::Approx(summarize(st.tau_samples).mean));
    for (std::size_t i = 0; i < st.n_samples; ++i) {
        CHECK(st.seeds[i] == sample_seed(7, i));
        CHECK(st.sigma_samples[i] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(st.tau_samples[i] <= st.sigma_samples[i] + 1e-12);
    }
    CHECK(st.max_unitarity_violation < 1e-10);
    CHECK_THROWS_AS(run_ensemble(spec, 4, 8, 0), DimensionError);
    CHECK_THROWS_AS(run_ensemble(spec, 0), DomainError);
}

TEST_CASE("ensemble is independent of the thread count") {
    const unsigned saved = thread_count();
    const LatticeSpec spec{6, 40, 1.0, 1e-3, 0.0, 3};
    set_thread_count(1);
    const auto one = run_ensemble(spec, 33);
    set_thread_count(5);
    const auto five = run_ensemble(spec, 33);
    set_thread_count(saved);
    CHECK(one.tau_samples == five.tau_samples);
    CHECK(one.sigma_samples == five.sigma_samples);
    CHECK(one.tau_bar_hat == five.tau_bar_hat);
}

TEST_CASE("ensemble reports the failing sample on lasing") {
    try {
        (void)run_ensemble({1, 1, 0.0, 2.0, 0.0, 0}, 3);
        FAIL("expected lasing");
    } catch (const LasingInstabilityError& e) {
        CHECK(e.sample_index() == 0);
    }
}

TEST_CASE("mean free path calibration") {
    const std::vector<int> lengths{50, 100, 200};
    const auto fit = calibrate_mfp({10, 100, 1.0, 0.0, 0.0, 11}, lengths, 200);
    CHECK(fit.n_modes == 10);
    CHECK(fit.mfp > 8.0);
    CHECK(fit.mfp < 14.0);
    CHECK(fit.residual < 0.1);
    CHECK(fit.per_length_mfp.size() == 3);
    // Conductance falls with length.
    CHECK(fit.mean_conductance[0] > fit.mean_conductance[1]);
    CHECK(fit.mean_conductance[1] > fit.mean_conductance[2]);

    CHECK_THROWS_AS(calibrate_mfp({10, 100, 0.0, 0.0, 0.0, 11}, lengths, 10), FitQualityError);
    CHECK_THROWS_AS(calibrate_mfp({10, 100, 1.0, 1e-3, 0.0, 11}, lengths, 10), DomainError);
}

TEST_CASE("signal-to-noise samples and histogram") {
    const auto st = run_ensemble({8, 60, 1.0, 0.0, 0.0, 21}, 100);
    const auto snr = snr_samples(st, 5.0);
    REQUIRE(snr.size() == 100);
    for (std::size_t i = 0; i < snr.size(); ++i) {
        CHECK(snr[i] == doctest::Approx(5.0 * st.tau_samples[i] / st.sigma_samples[i]));
    }
    const auto hist = snr_histogram(st, 5.0, 10);
    REQUIRE(hist.size() == 10);
    std::size_t total = 0;
    for (const auto& b : hist) {
        total += b.count;
    }
    CHECK(total == 100);
    const auto cap = mean_heterodyne_capacity(st, 5.0);
    CHECK(cap.n_samples == 100);
    CHECK(cap.mean > 0.0);
}

TEST_CASE("transmission falls off ohmically with length") {
    // L * tau_bar_hat is constant up to noise and boundary corrections. An off-diagonal
    // mode pair avoids the coherent forward component of the diagonal element.
    std::vector<double> products;
    for (int len : {50, 100, 200}) {
        const auto st = run_ensemble({10, len, 1.0, 0.0, 0.0, 31}, 400, 2, 7);
        products.push_back(len * st.tau_bar_hat);
    }
    const double mean = (products[0] + products[1] + products[2]) / 3.0;
    for (double v : products) {
        CHECK(std::abs(v / mean - 1.0) < 0.15);
    }
}

TEST_CASE("mean free path fit is seed-stable and shrinks with disorder") {
    const std::vector<int> lengths{50, 100, 200};
    const auto a = calibrate_mfp({10, 100, 1.0, 0.0, 0.0, 1001}, lengths, 200);
    const auto b = calibrate_mfp({10, 100, 1.0, 0.0, 0.0, 2002}, lengths, 200);
    CHECK(std::abs(a.mfp / b.mfp - 1.0) < 0.2);
    const auto strong = calibrate_mfp({10, 100, 2.0, 0.0, 0.0, 1001}, std::vector<int>{20, 30, 40}, 200);
    CHECK(strong.mfp < a.mfp);
}

TEST_CASE("receiver noise weight grows with gain") {
    std::vector<McEstimate> sig;
    for (double gain : {0.0, 2e-3, 4e-3}) {
        sig.push_back(summarize(run_ensemble({10, 60, 1.0, gain, 0.0, 41}, 300).sigma_samples));
    }
    for (std::size_t k = 1; k < sig.size(); ++k) {
        const double se = std::hypot(sig[k].std_error, sig[k - 1].std_error);
        CHECK(sig[k].mean - sig[k - 1].mean > 4.0 * se);
    }
}

TEST_CASE("single-sample histogram") {
    const auto st = run_ensemble({4, 10, 1.0, 0.0, 0.0, 1}, 1);
    const auto hist = snr_histogram(st, 2.0);
    REQUIRE(hist.size() == 1);
    CHECK(hist[0].count == 1);
}

TEST_CASE("amplifying ensemble against the matched closed form") {
    const auto st = run_ensemble({10, 70, 1.0, 2e-3, 0.0, 51}, 1000);
    const double p = 20.0;
    const auto cap = mean_heterodyne_capacity(st, p);
    const double closed = c_heterodyne_avg(p * st.tau_bar_hat / st.sigma_bar_hat).bits;
    CHECK(std::abs(cap.mean / closed - 1.0) < 0.1);
    // Same-sample plumbing: mean of log2(1 + R) over the per-sample SNRs.
    const auto snr = snr_samples(st, p);
    std::vector<double> logs;
    for (double r : snr) {
        logs.push_back(std::log2(1.0 + r));
    }
    const auto direct = summarize(logs);
    CHECK(std::abs(direct.mean - cap.mean) <= 4.0 * direct.std_error);
}
