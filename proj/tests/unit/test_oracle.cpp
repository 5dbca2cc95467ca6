// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "ampcap/capacity.hpp"
#include "ampcap/errors.hpp"
#include "ampcap/oracle.hpp"
#include "ampcap/parallel.hpp"
#include "ampcap/stats.hpp"

using namespace ampcap;
using namespace ampcap::oracle;

TEST_CASE("transmission samples follow the exponential law") {
    const auto tau = sample_tau(0.3, 4000, {17, 1});
    const auto s = summarize(tau);
    CHECK(std::abs(s.mean - 0.3) < 4.0 * s.std_error);
    CHECK(ks_exponential(tau, 0.3).p_value > 0.01);
    for (double t : tau) {
        REQUIRE(t >= 0.0);
    }
    CHECK_THROWS_AS(sample_tau(0.0, 10, {}), DomainError);
}

TEST_CASE("Monte Carlo heterodyne average matches the closed form") {
    for (const MediumParams& p : {MediumParams{10, 0.0, 0.1, 10.0}, MediumParams{10, 2.0, 0.05, 300.0},
                                  MediumParams{4, 3.0, 0.14, 0.4}}) {
        const auto mc = mc_average_capacity(CapacityKind::heterodyne, p, 200000, {123, 9});
        const double closed = c_heterodyne_avg(r_eff(p)).bits;
        CAPTURE(p.length_ratio);
        CHECK(std::abs(mc.mean - closed) < 4.0 * mc.std_error);
    }
}

TEST_CASE("Monte Carlo Holevo average matches the closed form") {
    for (const MediumParams& p : {MediumParams{10, 0.5, 0.1, 10.0}, MediumParams{10, 2.0, 0.05, 300.0},
                                  MediumParams{4, 3.0, 0.14, 0.4}}) {
        const auto mc = mc_average_capacity(CapacityKind::holevo, p, 200000, {321, 9});
        const double closed = c_holevo_avg(p).bits;
        CAPTURE(p.length_ratio);
        CHECK(std::abs(mc.mean - closed) < 4.0 * mc.std_error);
    }
}

TEST_CASE("Monte Carlo output is independent of the thread count") {
    const unsigned saved = thread_count();
    const MediumParams p{10, 1.0, 0.1, 10.0};
    set_thread_count(1);
    const auto one = mc_average_capacity(CapacityKind::holevo, p, 10007, {5, 5});
    set_thread_count(7);
    const auto seven = mc_average_capacity(CapacityKind::holevo, p, 10007, {5, 5});
    set_thread_count(saved);
    CHECK(one.mean == seven.mean);
    CHECK(one.std_error == seven.std_error);
}

TEST_CASE("quadrature oracle matches the closed forms") {
    for (double x : {0.0, 0.5, 1.5, 3.0}) {
        for (double ppm : {1e-4, 1.0, 1e4}) {
            const MediumParams p{10, x, 0.07, 10.0 * ppm};
            const auto het = quad_average_capacity(CapacityKind::heterodyne, p, 1e-12);
            CAPTURE(x);
            CAPTURE(ppm);
            CHECK(het.method == Method::quadrature_oracle);
            CHECK(std::abs(het.bits - c_heterodyne_avg(r_eff(p)).bits) < 1e-10);
        }
    }
    CHECK(quad_average_capacity(CapacityKind::holevo, 0.0, 1.5, 1.0, {1e-10, 0.0, 1000}).bits == 0.0);
    CHECK_THROWS_AS(quad_average_capacity(CapacityKind::holevo, 0.1, 0.5, 1.0, {1e-10, 0.0, 1000}), DomainError);
}

TEST_CASE("Gaussian-input mutual information estimate") {
    for (double r : {0.1, 1.0, 30.0}) {
        const auto mi = mutual_info_gaussian(r, 200000, {77, 3});
        CAPTURE(r);
        CHECK(std::abs(mi.mean - c_heterodyne_instance(r).bits) < 4.0 * mi.std_error);
    }
    CHECK_THROWS_AS(mutual_info_gaussian(0.0, 10, {}), DomainError);
}
