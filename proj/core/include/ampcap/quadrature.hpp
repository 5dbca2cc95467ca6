// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ampcap::quad {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    int intervals = 0;
};

struct Tolerance {
    double abs = 1e-10;
    double rel = 0.0;
    int max_intervals = 20000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod integration over [lo, hi].
///
/// `breakpoints` (sorted, inside the interval) seed the initial partition.
/// Stops when the summed |K15 - G7| estimate drops below max(abs, rel |I|);
/// throws QuadratureError if `max_intervals` is exhausted first.
QuadResult adaptive_gk(const Integrand& f, double lo, double hi, const Tolerance& tol,
                       std::span<const double> breakpoints = {});

/// Nodes and weights of the n-point Gauss-Laguerre rule (weight e^{-x}).
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch construction; cached per n, thread-safe.
const LaguerreRule& gauss_laguerre(int n);

/// sum_i w_i h(x_i) for the n-point rule.
double gauss_laguerre_sum(const Integrand& h, int n);

/// E[h(U)] for U ~ Exponential(mean), i.e. int_0^inf e^{-u/mean}/mean h(u) du.
///
/// Requires h concave, nondecreasing and h(0) = 0 on [0, inf): the tail past the
/// cut X (in units of `mean`) is then bounded by h(mean X)(1+X)e^{-X}/X, which is
/// added to the reported error. The interior uses adaptive_gk on a geometrically
/// graded partition so sharp features near u = 0 are resolved.
QuadResult exponential_average_adaptive(const Integrand& h, double mean, const Tolerance& tol);

/// Same average by a pair of Gauss-Laguerre rules (n and 2n nodes); error is
/// their difference. No concavity requirement.
QuadResult exponential_average_laguerre(const Integrand& h, double mean, int n);

}  // namespace ampcap::quad
