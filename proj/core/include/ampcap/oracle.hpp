// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "ampcap/capacity.hpp"
#include "ampcap/medium.hpp"
#include "ampcap/quadrature.hpp"
#include "ampcap/rng.hpp"
#include "ampcap/stats.hpp"

namespace ampcap::oracle {

enum class CapacityKind { heterodyne, holevo };

/// n draws from the Rayleigh (exponential) law of mean tau_bar by inversion,
/// tau = -tau_bar ln u with u in (0, 1]. Sample i depends only on (rng, i).
std::vector<double> sample_tau(double tau_bar, std::size_t n, RngSpec rng);

/// Capacity integrand for one transmission value at fixed sigma_bar.
double capacity_integrand(CapacityKind kind, double tau, double sigma_bar, double power_per_p0);

/// Monte Carlo disorder average over sampled tau at fixed sigma_bar.
/// Bit-identical for a given rng regardless of thread count.
McEstimate mc_average_capacity(CapacityKind kind, const MediumParams& p, std::size_t n, RngSpec rng);
McEstimate mc_average_capacity(CapacityKind kind, double tau_bar, double sigma_bar,
                               double power_per_p0, std::size_t n, RngSpec rng);

/// Deterministic quadrature of the same average: a 64/128-node Gauss-Laguerre
/// pair, falling back to adaptive Gauss-Kronrod when the pair disagrees.
CapacityResult quad_average_capacity(CapacityKind kind, const MediumParams& p, double abs_tol);
CapacityResult quad_average_capacity(CapacityKind kind, double tau_bar, double sigma_bar,
                                     double power_per_p0, const quad::Tolerance& tol);

/// Sampling estimate of the mutual information of the complex Gaussian channel
/// nu = sqrt(r) mu + w (unit-variance mu and w), using the exact Gaussian
/// marginal of nu. Converges to log2(1 + r).
McEstimate mutual_info_gaussian(double r, std::size_t n, RngSpec rng);

}  // namespace ampcap::oracle
