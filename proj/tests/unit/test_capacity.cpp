// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "ampcap/capacity.hpp"
#include "ampcap/errors.hpp"
#include "ampcap/medium.hpp"
#include "ampcap/oracle.hpp"
#include "ampcap/specfun.hpp"

using namespace ampcap;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Average over an exponential transmission with no excess noise, in closed form.
double holevo_noamp_closed(double a) {
    return a / specfun::ln2 * (specfun::exp_gamma0(1.0 / a) - std::log(a) + specfun::euler_gamma);
}

}  // namespace

TEST_CASE("heterodyne instance capacity") {
    CHECK(c_heterodyne_instance(0.0).bits == 0.0);
    CHECK(rel(c_heterodyne_instance(1.0).bits, 1.0) < 1e-15);
    CHECK(rel(c_heterodyne_instance(1e-12).bits, 1e-12 / specfun::ln2) < 1e-11);
    CHECK(c_heterodyne_instance(1.0).method == Method::heterodyne_instance);
    CHECK_THROWS_AS(c_heterodyne_instance(-1.0), DomainError);
}

TEST_CASE("heterodyne Rayleigh average reference values") {
    CHECK(rel(c_heterodyne_avg(1.0).bits, 0.86034738227088595) < 1e-13);
    CHECK(rel(c_heterodyne_avg(1e4).bits, 12.456356041494459) < 1e-13);
    CHECK(rel(c_heterodyne_avg(1e-6).bits, 1.4426935981968079e-6) < 1e-12);
    CHECK(rel(c_heterodyne_avg(1e6).bits, 19.098842933575371) < 1e-13);
    CHECK(rel(c_heterodyne_avg(0.17317071954915415).bits, 0.21677588675861317) < 1e-13);
    CHECK(c_heterodyne_avg(0.0).bits == 0.0);
    CHECK_THROWS_AS(c_heterodyne_avg(-1e-3), DomainError);
}

TEST_CASE("fading costs capacity relative to a fixed channel") {
    for (double r = 1e-4; r < 1e5; r *= 3.7) {
        CHECK(c_heterodyne_avg(r).bits < c0_reference(r).bits);
    }
}

TEST_CASE("threshold capacity") {
    CHECK(rel(c_infinity(1.0).bits, 0.5212870037159069) < 1e-13);
    CHECK(c_infinity(1.0).method == Method::c_infinity);
    CHECK(c_infinity(3.0).bits == c_heterodyne_avg(1.5).bits);
    CHECK_THROWS_AS(c_infinity(0.0), DomainError);
}

TEST_CASE("heterodyne average approaches threshold value") {
    for (double m : {0.01, 0.05, 0.14}) {
        const double target = c_infinity(10.0).bits;
        double prev = 1.0;
        for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
            const double d = std::abs(c_heterodyne_avg(r_eff({10, kPi - eps, m, 100.0})).bits - target);
            CHECK(d < prev);
            prev = d;
        }
        CHECK(prev < 1e-6);
    }
}

TEST_CASE("Holevo instance capacity") {
    CHECK(rel(c_holevo_instance(1.0, 1.0, 1.0).bits, 2.0) < 1e-15);  // g(1) = 2
    CHECK(rel(c_holevo_instance(0.5, 3.0, 4.0).bits, specfun::g_entropy(4.0) - specfun::g_entropy(2.0)) < 1e-15);
    CHECK(c_holevo_instance(0.0, 2.0, 4.0).bits == 0.0);
    CHECK_THROWS_AS(c_holevo_instance(0.5, 0.9, 1.0), DomainError);
    CHECK_THROWS_AS(c_holevo_instance(-0.5, 1.0, 1.0), DomainError);
}

TEST_CASE("Holevo bound dominates heterodyne detection per instance") {
    for (double tau = 1e-3; tau < 10.0; tau *= 2.3) {
        for (double sigma : {1.0, 1.01, 2.0, 50.0}) {
            for (double p : {1e-2, 1.0, 1e3}) {
                CHECK(c_holevo_instance(tau, sigma, p).bits >= c_heterodyne_instance(tau * p / sigma).bits);
            }
        }
    }
}

TEST_CASE("Holevo average reference values") {
    CHECK(rel(c_holevo_avg(0.020943951023931955, 1.2094395102393195, 10.0).bits, 0.39503675875773636) < 1e-12);
    CHECK(rel(c_holevo_avg(0.1, 3.0, 50.0).bits, 1.3386084523618582) < 1e-12);
    CHECK(rel(c_holevo_avg(1e-3, 1.0000001, 1e3).bits, 1.6930912592378127) < 1e-10);
    CHECK(rel(c_holevo_avg(2.0, 40.0, 0.01).bits, 0.0007301479727932347) < 1e-11);
    const MediumParams p{10, kPi / 2, 0.1, 10.0};
    CHECK(rel(c_holevo_avg(p).bits, 0.39503675875773636) < 1e-12);
}

TEST_CASE("Holevo average without gain") {
    for (double a : {1e-4, 0.1333, 5.0, 1e4}) {
        const double closed = holevo_noamp_closed(a);
        CAPTURE(a);
        CHECK(rel(c_holevo_noamp(a, 1.0, {1e-13, 1e-13, 20000}).bits, closed) < 1e-11);
        // Tiny excess noise takes the quadrature path and shifts the value by O(s ln s).
        CHECK(rel(c_holevo_avg(a, 1.0 + 1e-12, 1.0).bits, closed) < 1e-7);
        CHECK(c_holevo_avg(a, 1.0 + 1e-12, 1.0).bits < closed);
    }
    CHECK(rel(c_holevo_noamp(0.1333, 1.0, {1e-13, 1e-13, 20000}).bits, 0.52142636168344) < 1e-12);
    CHECK(rel(c_holevo_avg({10, 0.0, 0.1, 10.0}).bits, holevo_noamp_closed(4.0 / 3.0 * 0.1)) < 1e-8);
}

TEST_CASE("closed form agrees with quadrature of the instance formula") {
    double worst = 0.0;
    for (double x = 0.05; x < kPi - 0.01; x += 0.25) {
        for (double m : {0.01, 0.05, 0.14, 0.4}) {
            for (double ppm : {1e-3, 1.0, 1e3}) {
                const MediumParams p{10, x, m, 10.0 * ppm};
                const double closed = c_holevo_avg(p).bits;
                const double quad = oracle::quad_average_capacity(oracle::CapacityKind::holevo, p, 1e-12).bits;
                worst = std::max(worst, std::abs(closed - quad) / std::max(1.0, closed));
            }
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("averaged Holevo bound dominates averaged heterodyne") {
    for (double x = 0.0; x < kPi - 0.01; x += 0.3) {
        for (double m : {0.02, 0.1, 0.3}) {
            const MediumParams p{10, x, m, 10.0};
            CHECK(c_holevo_avg(p).bits >= c_heterodyne_avg(r_eff(p)).bits);
        }
    }
}

TEST_CASE("Holevo average depends on power per mode only") {
    for (double x : {0.0, 0.7, 2.0, 3.1}) {
        for (double m : {0.03, 0.2}) {
            const double ref = c_holevo_avg({1, x, m, 0.7}).bits;
            for (int n : {10, 100}) {
                CHECK(rel(c_holevo_avg({n, x, m, 0.7 * n}).bits, ref) < 1e-12);
            }
        }
    }
}

TEST_CASE("Holevo average threshold handling") {
    CHECK_THROWS_AS(c_holevo_avg({10, kPi, 0.1, 10.0}), ThresholdError);
    const double near = c_holevo_avg({10, kPi - 1e-7, 0.1, 10.0}).bits;
    CHECK(std::isfinite(near));
    CHECK(near >= 0.0);
    CHECK_THROWS_AS(c_holevo_avg(1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("initial decrease approximation") {
    const MediumParams p0{10, 0.0, 0.05, 10.0};
    CHECK(c_holevo_initial_decrease(p0).bits == doctest::Approx(c_holevo_avg(p0).bits).epsilon(1e-12));
    const MediumParams p{10, 0.1, 0.05, 10.0};
    const double drop = c_holevo_initial_decrease(p0).bits - c_holevo_initial_decrease(p).bits;
    CHECK(rel(drop, 4.0 / 3.0 * 0.05 * 0.01 * std::log2(kPi / 0.1)) < 1e-12);
    CHECK(c_holevo_initial_decrease(p).method == Method::approximation);
    CHECK_THROWS_AS(c_holevo_initial_decrease({10, 0.3, 0.05, 10.0}), DomainError);
}

TEST_CASE("gain factors in the limits") {
    const auto low = amplification_gain({10, 1.0, 0.05, 10.0 * 1e-7});
    CHECK(rel(low.ratio, low.low_power_factor) < 1e-5);
    CHECK(rel(low.low_power_factor, 7.5) < 1e-15);
    // Leading-log asymptote; corrections are O(1 / ln P).
    for (double ppm : {1e6, 1e9, 1e12, 1e15}) {
        const auto high = amplification_gain({10, 1.0, 0.05, 10.0 * ppm});
        CHECK(rel(high.ratio, high.high_power_factor) < 0.03);
    }
}

TEST_CASE("method names") {
    CHECK(to_string(Method::holevo_closed) == "holevo_closed");
    CHECK(to_string(Method::quadrature_oracle) == "quadrature_oracle");
}
