// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/wgsim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "ampcap/errors.hpp"
#include "ampcap/parallel.hpp"
#include "ampcap/rng.hpp"
#include "ampcap/specfun.hpp"

namespace ampcap::wgsim {
namespace {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

constexpr double kMaxCondition = 1e12;
constexpr std::uint64_t kEnsembleStream = 0x5EED0001;
constexpr std::uint64_t kDisorderStream = 0x5EED0002;

/// Transverse eigenmodes of a hard-wall chain and their lead properties.
struct LeadModes {
    MatrixXd chi;               // width x width, column m = mode m
    VectorXcd self_energy;      // -lambda_m, diagonal in the mode basis
    std::vector<int> open;      // propagating mode indices
    std::vector<double> velocity;
};

LeadModes lead_modes(const LatticeSpec& spec) {
    const int w = spec.width;
    LeadModes lm;
    lm.chi.resize(w, w);
    lm.self_energy.resize(w);
    const double norm = std::sqrt(2.0 / (w + 1));
    for (int m = 0; m < w; ++m) {
        const double q = kPi * (m + 1) / (w + 1);
        for (int y = 0; y < w; ++y) {
            lm.chi(y, m) = norm * std::sin(q * (y + 1));
        }
        // E - eps_m = -2 cos k, eps_m = -2 cos q.
        const double detuning = spec.energy + 2.0 * std::cos(q);
        const double cos_k = -0.5 * detuning;
        cplx lambda;
        if (std::abs(cos_k) < 1.0) {
            const double k = std::acos(cos_k);
            lambda = std::polar(1.0, k);
            lm.open.push_back(m);
            lm.velocity.push_back(2.0 * std::sin(k));
        } else {
            // lambda + 1/lambda = 2 cos k with |lambda| < 1.
            const double c = 2.0 * cos_k;
            lambda = 0.5 * (c - std::copysign(std::sqrt(c * c - 4.0), c));
        }
        lm.self_energy(m) = -lambda;
    }
    return lm;
}

// The unit hopping sets the energy scale, so the inverse is bounded in absolute
// terms as well as relative to the slice norm.
void check_conditioning(const MatrixXcd& a, const Eigen::PartialPivLU<MatrixXcd>& lu, const MatrixXcd& inverse,
                        int slice) {
    const double a_norm = a.cwiseAbs().colwise().sum().maxCoeff();
    const double inv_norm = inverse.cwiseAbs().colwise().sum().maxCoeff();
    const double condition = std::max(1.0 / lu.rcond(), std::max(1.0, a_norm) * inv_norm);
    if (!(condition < kMaxCondition)) {
        throw LasingInstabilityError("scattering_matrix: slice " + std::to_string(slice) +
                                         " solve is singular to working precision (lasing instability)",
                                     0, std::isfinite(condition) ? condition : INFINITY);
    }
}

}  // namespace

void LatticeSpec::validate() const {
    if (width < 1 || length < 1) {
        throw DimensionError("LatticeSpec: width and length must be >= 1");
    }
    if (!(disorder_strength >= 0.0) || !std::isfinite(disorder_strength)) {
        throw DomainError("LatticeSpec: disorder_strength must be finite and >= 0");
    }
    if (!(gain >= 0.0) || !std::isfinite(gain)) {
        throw DomainError("LatticeSpec: gain must be finite and >= 0");
    }
    if (!std::isfinite(energy)) {
        throw DomainError("LatticeSpec: energy must be finite");
    }
}

int propagating_modes(const LatticeSpec& spec) {
    spec.validate();
    return static_cast<int>(lead_modes(spec).open.size());
}

int default_mode(const LatticeSpec& spec) { return propagating_modes(spec) / 2; }

ScatteringMatrix scattering_matrix(const LatticeSpec& spec) {
    spec.validate();
    const int w = spec.width;
    const LeadModes lm = lead_modes(spec);
    const int n = static_cast<int>(lm.open.size());
    if (n == 0) {
        throw DimensionError("scattering_matrix: no propagating modes at energy " + std::to_string(spec.energy));
    }

    // Lead self-energy in the site basis (identical for both leads).
    const MatrixXcd chi = lm.chi.cast<cplx>();
    const MatrixXcd sigma_lead = chi * lm.self_energy.asDiagonal() * chi.transpose();

    // E - H_y - i*gain on every slice; disorder added per slice below.
    MatrixXcd base = MatrixXcd::Zero(w, w);
    for (int y = 0; y < w; ++y) {
        base(y, y) = cplx(spec.energy, -spec.gain);
        if (y + 1 < w) {
            base(y, y + 1) = base(y + 1, y) = 1.0;  // -(hopping -1)
        }
    }

    CounterRng disorder(RngSpec{spec.seed, kDisorderStream}, 0);
    const double half_w = 0.5 * spec.disorder_strength;

    // g: last-slice Green's function of slices [0, j]
    // col: G_{j,0}, row: G_{0,j}, corner: G_{0,0} of the same subsystem.
    MatrixXcd g(w, w), col(w, w), row(w, w), corner(w, w), a(w, w), tmp(w, w);
    Eigen::PartialPivLU<MatrixXcd> lu(w);
    for (int j = 0; j < spec.length; ++j) {
        a = base;
        if (spec.disorder_strength > 0.0) {
            for (int y = 0; y < w; ++y) {
                a(y, y) -= disorder.uniform(-half_w, half_w);
            }
        }
        if (j == 0) {
            a -= sigma_lead;
        } else {
            a -= g;  // V g V with V = -1
        }
        if (j == spec.length - 1) {
            a -= sigma_lead;
        }
        lu.compute(a);
        g = lu.inverse();
        check_conditioning(a, lu, g, j);
        if (j == 0) {
            col = g;
            row = g;
            corner = g;
        } else {
            // Dyson: G00 += G_{0,j-1} g G_{j-1,0}; propagate the edge blocks.
            tmp.noalias() = g * col;
            corner.noalias() += row * tmp;
            col = -tmp;
            tmp.noalias() = row * g;
            row = -tmp;
        }
    }

    // Fisher-Lee in the propagating-mode basis.
    MatrixXcd x(w, n);
    Eigen::VectorXd root_v(n);
    for (int i = 0; i < n; ++i) {
        x.col(i) = chi.col(lm.open[i]);
        root_v(i) = std::sqrt(lm.velocity[i]);
    }
    auto project = [&](const MatrixXcd& green) -> MatrixXcd {
        MatrixXcd m = x.transpose() * green * x;
        return cplx(0.0, 1.0) * (root_v.asDiagonal() * m * root_v.asDiagonal());
    };
    MatrixXcd s(2 * n, 2 * n);
    const MatrixXcd eye = MatrixXcd::Identity(n, n);
    s.block(0, 0, n, n) = project(corner) - eye;  // sender -> sender
    s.block(0, n, n, n) = project(row);           // receiver -> sender
    s.block(n, 0, n, n) = project(col);           // sender -> receiver
    s.block(n, n, n, n) = project(g) - eye;       // receiver -> receiver
    return ScatteringMatrix(std::move(s));
}

std::uint64_t sample_seed(std::uint64_t master_seed, std::size_t index) {
    return derive_seed(RngSpec{master_seed, kEnsembleStream}, index);
}

EnsembleStats run_ensemble(const LatticeSpec& spec, std::size_t n_samples, int alpha, int beta) {
    spec.validate();
    const int n_modes = propagating_modes(spec);
    if (alpha < 0 || alpha >= n_modes || beta < 0 || beta >= n_modes) {
        throw DimensionError("run_ensemble: mode indices must lie in [0, " + std::to_string(n_modes) + ")");
    }
    if (n_samples == 0) {
        throw DomainError("run_ensemble: n_samples must be >= 1");
    }
    EnsembleStats st;
    st.spec = spec;
    st.n_modes = n_modes;
    st.alpha = alpha;
    st.beta = beta;
    st.n_samples = n_samples;
    st.seeds.resize(n_samples);
    st.tau_samples.resize(n_samples);
    st.sigma_samples.resize(n_samples);
    st.conductance_samples.resize(n_samples);
    st.min_eig_samples.resize(n_samples);
    st.unitarity_samples.resize(n_samples);

    parallel_for(n_samples, [&](std::size_t i) {
        LatticeSpec sample = spec;
        sample.seed = sample_seed(spec.seed, i);
        st.seeds[i] = sample.seed;
        ScatteringMatrix s;
        try {
            s = scattering_matrix(sample);
        } catch (const LasingInstabilityError& e) {
            throw LasingInstabilityError("run_ensemble: sample " + std::to_string(i) + ": " + e.what(), i,
                                         e.condition_number());
        }
        st.tau_samples[i] = std::norm(s.transmission()(beta, alpha));
        st.sigma_samples[i] = s.receiver_row_weight(beta);
        st.conductance_samples[i] = s.transmission().squaredNorm();
        st.min_eig_samples[i] = min_eigenvalue_excess(s);
        st.unitarity_samples[i] = unitarity_violation(s);
    });

    st.tau_bar_hat = summarize(st.tau_samples).mean;
    st.sigma_bar_hat = summarize(st.sigma_samples).mean;
    st.min_eig_ssdagger = *std::min_element(st.min_eig_samples.begin(), st.min_eig_samples.end());
    st.max_unitarity_violation = *std::max_element(st.unitarity_samples.begin(), st.unitarity_samples.end());
    return st;
}

EnsembleStats run_ensemble(const LatticeSpec& spec, std::size_t n_samples) {
    const int mode = default_mode(spec);
    return run_ensemble(spec, n_samples, mode, mode);
}

MfpFit calibrate_mfp(const LatticeSpec& base, std::span<const int> lengths, std::size_t n_samples) {
    base.validate();
    if (base.gain != 0.0) {
        throw DomainError("calibrate_mfp: mean free path calibration needs a passive strip (gain = 0)");
    }
    if (lengths.size() < 2) {
        throw DomainError("calibrate_mfp: need at least two lengths");
    }
    MfpFit fit;
    fit.n_modes = propagating_modes(base);
    if (base.disorder_strength == 0.0) {
        throw FitQualityError("calibrate_mfp: clean strip is ballistic, mean free path diverges", INFINITY);
    }
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        LatticeSpec spec = base;
        spec.length = lengths[k];
        spec.seed = splitmix64(base.seed + k);
        const auto st = run_ensemble(spec, n_samples);
        const double t_mean = summarize(st.conductance_samples).mean;
        fit.lengths.push_back(lengths[k]);
        fit.mean_conductance.push_back(t_mean);
        fit.per_length_mfp.push_back(3.0 * lengths[k] * t_mean / (4.0 * fit.n_modes));
    }
    fit.mfp = summarize(fit.per_length_mfp).mean;
    double worst = 0.0;
    for (double l : fit.per_length_mfp) {
        worst = std::max(worst, std::abs(l - fit.mfp) / fit.mfp);
    }
    fit.residual = worst;
    if (fit.residual > 0.1) {
        throw FitQualityError("calibrate_mfp: relative residual " + std::to_string(fit.residual) +
                                  " exceeds 10%; lengths are outside the diffusive window",
                              fit.residual);
    }
    return fit;
}

std::vector<double> snr_samples(const EnsembleStats& stats, double power_per_p0) {
    std::vector<double> r(stats.tau_samples.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = power_per_p0 * stats.tau_samples[i] / stats.sigma_samples[i];
    }
    return r;
}

std::vector<HistogramBin> snr_histogram(const EnsembleStats& stats, double power_per_p0, int bins) {
    if (stats.tau_samples.empty()) {
        throw DomainError("snr_histogram: empty ensemble");
    }
    if (bins < 1) {
        throw DomainError("snr_histogram: need at least one bin");
    }
    const auto r = snr_samples(stats, power_per_p0);
    const auto [lo_it, hi_it] = std::minmax_element(r.begin(), r.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (hi == lo) {
        return {{lo, hi, r.size()}};
    }
    std::vector<HistogramBin> out(bins);
    const double width = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b) {
        out[b].lo = lo + b * width;
        out[b].hi = (b + 1 == bins) ? hi : lo + (b + 1) * width;
    }
    for (double v : r) {
        const int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
        ++out[b].count;
    }
    return out;
}

McEstimate mean_heterodyne_capacity(const EnsembleStats& stats, double power_per_p0) {
    auto r = snr_samples(stats, power_per_p0);
    for (double& v : r) {
        v = std::log1p(v) / specfun::ln2;
    }
    return summarize(r);
}

}  // namespace ampcap::wgsim
