// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ampcap/errors.hpp"
#include "ampcap/specfun.hpp"

namespace ampcap {

using specfun::exp_gamma0;
using specfun::g_entropy;
using specfun::ln2;

namespace {

constexpr double kClosedFormSigmaFloor = 1e-8;

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::heterodyne_closed: return "heterodyne_closed";
        case Method::heterodyne_instance: return "heterodyne_instance";
        case Method::holevo_closed: return "holevo_closed";
        case Method::holevo_instance: return "holevo_instance";
        case Method::c0_reference: return "c0_reference";
        case Method::c_infinity: return "c_infinity";
        case Method::approximation: return "approximation";
        case Method::mc_oracle: return "mc_oracle";
        case Method::quadrature_oracle: return "quadrature_oracle";
    }
    return "unknown";
}

CapacityResult c_heterodyne_instance(double r) {
    if (!(r >= 0.0)) {
        throw DomainError("c_heterodyne_instance: signal-to-noise ratio must be >= 0");
    }
    return {std::log1p(r) / ln2, Method::heterodyne_instance, 0.0};
}

CapacityResult c_heterodyne_avg(double r_eff) {
    if (!(r_eff >= 0.0)) {
        throw DomainError("c_heterodyne_avg: R_eff must be >= 0");
    }
    if (r_eff == 0.0) {
        return {0.0, Method::heterodyne_closed, 0.0};
    }
    return {exp_gamma0(1.0 / r_eff) / ln2, Method::heterodyne_closed, 0.0};
}

CapacityResult c0_reference(double r_eff) {
    if (!(r_eff >= 0.0)) {
        throw DomainError("c0_reference: R_eff must be >= 0");
    }
    return {std::log1p(r_eff) / ln2, Method::c0_reference, 0.0};
}

CapacityResult c_infinity(double power_per_mode) {
    if (!(power_per_mode > 0.0)) {
        throw DomainError("c_infinity: P/(N P0) must be > 0");
    }
    auto r = c_heterodyne_avg(0.5 * power_per_mode);
    r.method = Method::c_infinity;
    return r;
}

CapacityResult c_holevo_instance(double tau, double sigma, double power_per_p0) {
    if (!(tau >= 0.0)) {
        throw DomainError("c_holevo_instance: tau must be >= 0");
    }
    if (!(sigma >= 1.0)) {
        throw DomainError("c_holevo_instance: sigma must be >= 1");
    }
    if (!(power_per_p0 >= 0.0)) {
        throw DomainError("c_holevo_instance: power must be >= 0");
    }
    const double noise = sigma - 1.0;
    return {g_entropy(tau * power_per_p0 + noise) - g_entropy(noise), Method::holevo_instance, 0.0};
}

CapacityResult c_holevo_noamp(double tau_bar, double power_per_p0, const quad::Tolerance& tol) {
    if (!(tau_bar > 0.0) || !(power_per_p0 > 0.0)) {
        throw DomainError("c_holevo_noamp: tau_bar and power must be > 0");
    }
    const double mean = tau_bar * power_per_p0;
    const auto r = quad::exponential_average_adaptive([](double u) { return g_entropy(u); }, mean, tol);
    return {r.value, Method::holevo_closed, r.error};
}

CapacityResult c_holevo_avg(double tau_bar, double sigma_bar, double power_per_p0) {
    if (!(tau_bar > 0.0) || !(power_per_p0 > 0.0)) {
        throw DomainError("c_holevo_avg: tau_bar and power must be > 0");
    }
    if (!(sigma_bar >= 1.0)) {
        throw DomainError("c_holevo_avg: sigma_bar must be >= 1");
    }
    if (std::isinf(sigma_bar) || std::isinf(tau_bar)) {
        throw ThresholdError("c_holevo_avg: averages diverge at the laser threshold");
    }
    const double mean = tau_bar * power_per_p0;
    const double noise = sigma_bar - 1.0;
    if (noise < kClosedFormSigmaFloor) {
        auto h = [noise](double u) { return g_entropy(u + noise) - g_entropy(noise); };
        const auto r = quad::exponential_average_adaptive(h, mean, {1e-13, 1e-12, 20000});
        return {r.value, Method::holevo_closed, r.error};
    }
    // log2(sigma/(sigma-1)) = -log2(1 - 1/sigma)
    const double first = -mean * std::log1p(-1.0 / sigma_bar) / ln2;
    const double second = mean / ln2 * (exp_gamma0(sigma_bar / mean) - exp_gamma0(noise / mean));
    return {std::max(0.0, first + second), Method::holevo_closed, 0.0};
}

CapacityResult c_holevo_avg(const MediumParams& p) {
    p.validate();
    if (p.length_ratio >= kPi) {
        throw ThresholdError("c_holevo_avg: undefined at the laser threshold L/l_a = pi; use c_infinity");
    }
    const auto avg = diffusion_averages(p);
    if (p.length_ratio == 0.0) {
        return c_holevo_noamp(avg.tau_bar, p.power_per_p0);
    }
    return c_holevo_avg(avg.tau_bar, avg.sigma_bar, p.power_per_p0);
}

CapacityResult c_holevo_initial_decrease(const MediumParams& p) {
    p.validate();
    if (!(p.length_ratio < 0.3)) {
        throw DomainError("c_holevo_initial_decrease: expansion only valid for L/l_a < 0.3");
    }
    MediumParams unamplified = p;
    unamplified.length_ratio = 0.0;
    const auto base = c_holevo_noamp(diffusion_averages(unamplified).tau_bar, p.power_per_p0);
    double correction = 0.0;
    if (p.length_ratio > 0.0) {
        const double x = p.length_ratio;
        correction = 4.0 / 3.0 * p.mfp_ratio * x * x * std::log2(kPi / x);
    }
    return {base.bits - correction, Method::approximation, base.err_estimate};
}

AmplificationGain amplification_gain(const MediumParams& p) {
    p.validate();
    MediumParams unamplified = p;
    unamplified.length_ratio = 0.0;
    AmplificationGain g;
    g.c_without_gain = c_heterodyne_avg(r_eff(unamplified)).bits;
    g.c_at_threshold = c_infinity(p.power_per_mode()).bits;
    g.ratio = g.c_at_threshold / g.c_without_gain;
    g.low_power_factor = 3.0 / (8.0 * p.mfp_ratio);
    g.high_power_factor = 1.0 + std::log(1.0 / p.mfp_ratio) / std::log(p.power_per_mode());
    return g;
}

}  // namespace ampcap
