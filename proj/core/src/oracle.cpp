// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/oracle.hpp"

#include <cmath>
#include <complex>

#include "ampcap/errors.hpp"
#include "ampcap/parallel.hpp"
#include "ampcap/specfun.hpp"

namespace ampcap::oracle {

using specfun::g_entropy;
using specfun::ln2;

namespace {

constexpr int kLaguerreNodes = 64;

std::complex<double> complex_normal(CounterRng& gen) {
    // |z|^2 = -ln u1 ~ Exp(1), so E|z|^2 = 1.
    const double radius = std::sqrt(-std::log(gen.uniform_pos()));
    const double angle = 2.0 * kPi * gen.uniform_pos();
    return std::polar(radius, angle);
}

}  // namespace

std::vector<double> sample_tau(double tau_bar, std::size_t n, RngSpec rng) {
    if (!(tau_bar > 0.0)) {
        throw DomainError("sample_tau: tau_bar must be > 0");
    }
    std::vector<double> out(n);
    parallel_for(n, [&](std::size_t i) {
        CounterRng gen(rng, i);
        out[i] = tau_bar * -std::log(gen.uniform_pos());
    });
    return out;
}

double capacity_integrand(CapacityKind kind, double tau, double sigma_bar, double power_per_p0) {
    const double signal = tau * power_per_p0;
    if (kind == CapacityKind::heterodyne) {
        return std::log1p(signal / sigma_bar) / ln2;
    }
    const double noise = sigma_bar - 1.0;
    return g_entropy(signal + noise) - g_entropy(noise);
}

McEstimate mc_average_capacity(CapacityKind kind, double tau_bar, double sigma_bar,
                               double power_per_p0, std::size_t n, RngSpec rng) {
    if (n == 0) {
        throw DomainError("mc_average_capacity: need at least one sample");
    }
    if (!(sigma_bar >= 1.0)) {
        throw DomainError("mc_average_capacity: sigma_bar must be >= 1");
    }
    auto values = sample_tau(tau_bar, n, rng);
    parallel_for(n, [&](std::size_t i) {
        values[i] = capacity_integrand(kind, values[i], sigma_bar, power_per_p0);
    });
    return summarize(values);
}

McEstimate mc_average_capacity(CapacityKind kind, const MediumParams& p, std::size_t n, RngSpec rng) {
    const auto avg = diffusion_averages(p);
    return mc_average_capacity(kind, avg.tau_bar, avg.sigma_bar, p.power_per_p0, n, rng);
}

CapacityResult quad_average_capacity(CapacityKind kind, double tau_bar, double sigma_bar,
                                     double power_per_p0, const quad::Tolerance& tol) {
    if (!(tau_bar >= 0.0) || !(sigma_bar >= 1.0) || !(power_per_p0 > 0.0)) {
        throw DomainError("quad_average_capacity: need tau_bar >= 0, sigma_bar >= 1, power > 0");
    }
    if (!(tol.abs > 0.0) && !(tol.rel > 0.0)) {
        throw DomainError("quad_average_capacity: tolerance must be positive");
    }
    const double mean = tau_bar * power_per_p0;
    if (mean == 0.0) {
        return {0.0, Method::quadrature_oracle, 0.0};
    }
    // Integrand in units of the signal u = tau P/P0.
    auto h = [kind, sigma_bar](double u) { return capacity_integrand(kind, u, sigma_bar, 1.0); };

    const auto gl = quad::exponential_average_laguerre(h, mean, kLaguerreNodes);
    if (gl.error <= 0.1 * std::max(tol.abs, tol.rel * std::abs(gl.value))) {
        return {gl.value, Method::quadrature_oracle, gl.error};
    }
    const auto ad = quad::exponential_average_adaptive(h, mean, tol);
    return {ad.value, Method::quadrature_oracle, ad.error};
}

CapacityResult quad_average_capacity(CapacityKind kind, const MediumParams& p, double abs_tol) {
    const auto avg = diffusion_averages(p);
    return quad_average_capacity(kind, avg.tau_bar, avg.sigma_bar, p.power_per_p0, {abs_tol, 0.0, 20000});
}

McEstimate mutual_info_gaussian(double r, std::size_t n, RngSpec rng) {
    if (!(r > 0.0)) {
        throw DomainError("mutual_info_gaussian: r must be > 0");
    }
    if (n == 0) {
        throw DomainError("mutual_info_gaussian: need at least one sample");
    }
    const double amp = std::sqrt(r);
    const double log_gain = std::log1p(r);
    std::vector<double> values(n);
    parallel_for(n, [&](std::size_t i) {
        CounterRng gen(rng, i);
        const auto mu = complex_normal(gen);
        const auto noise = complex_normal(gen);
        const auto nu = amp * mu + noise;
        // ln P(nu|mu) - ln p(nu) for unit-variance noise and variance 1+r marginal.
        values[i] = (log_gain - std::norm(noise) + std::norm(nu) / (1.0 + r)) / ln2;
    });
    return summarize(values);
}

}  // namespace ampcap::oracle
