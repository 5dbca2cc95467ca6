// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "ampcap/medium.hpp"
#include "ampcap/quadrature.hpp"

namespace ampcap {

enum class Method {
    heterodyne_closed,
    heterodyne_instance,
    holevo_closed,
    holevo_instance,
    c0_reference,
    c_infinity,
    approximation,
    mc_oracle,
    quadrature_oracle,
};

std::string_view to_string(Method m);

/// A capacity in bits per channel use. `err_estimate` is 0 for exact closed
/// forms and carries the quadrature bound where one was used.
struct CapacityResult {
    double bits = 0.0;
    Method method = Method::heterodyne_closed;
    double err_estimate = 0.0;
};

/// log2(1 + r) for a single disorder realisation.
CapacityResult c_heterodyne_instance(double r);

/// Rayleigh-averaged heterodyne capacity exp(1/R) Gamma(0; 1/R) / ln 2.
CapacityResult c_heterodyne_avg(double r_eff);

/// log2(1 + R_eff): the value obtained when transmission fluctuations are ignored.
CapacityResult c0_reference(double r_eff);

/// Threshold limit, a function of P/(N P0) alone.
CapacityResult c_infinity(double power_per_mode);

/// g(tau P/P0 + sigma - 1) - g(sigma - 1).
CapacityResult c_holevo_instance(double tau, double sigma, double power_per_p0);

/// Disorder-averaged Holevo capacity for a medium strictly below threshold.
/// At length_ratio = 0 this is c_holevo_noamp.
CapacityResult c_holevo_avg(const MediumParams& p);

/// Same average from explicit tau_bar, sigma_bar. For sigma_bar - 1 < 1e-8 the
/// closed form is a difference of diverging terms and the Rayleigh average is
/// integrated numerically instead.
CapacityResult c_holevo_avg(double tau_bar, double sigma_bar, double power_per_p0);

/// Rayleigh average of g(tau P/P0) (Holevo capacity without gain), by adaptive
/// quadrature. `tol.abs` defaults to 1e-9 bits.
CapacityResult c_holevo_noamp(double tau_bar, double power_per_p0,
                              const quad::Tolerance& tol = {1e-9, 0.0, 20000});

/// Weak-gain expansion C_H(0) - (4/3)(l/L)(L/l_a)^2 log2(pi l_a / L).
/// Only offered for length_ratio < 0.3.
CapacityResult c_holevo_initial_decrease(const MediumParams& p);

/// How much threshold-strength gain can raise the heterodyne capacity, next to
/// the two textbook estimates of that factor.
struct AmplificationGain {
    double c_without_gain = 0.0;   // heterodyne average at length_ratio = 0
    double c_at_threshold = 0.0;   // c_infinity
    double ratio = 0.0;            // c_at_threshold / c_without_gain
    double low_power_factor = 0.0; // 3L / 8l, valid for P << N P0
    double high_power_factor = 0.0;// 1 + ln(L/l) / ln(P/N P0), valid for P >> N P0 L/l
};

AmplificationGain amplification_gain(const MediumParams& p);

}  // namespace ampcap
