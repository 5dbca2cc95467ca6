// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/phase.hpp"

#include <cmath>
#include <string>

#include "ampcap/capacity.hpp"
#include "ampcap/errors.hpp"
#include "ampcap/parallel.hpp"
#include "ampcap/specfun.hpp"

namespace ampcap::phase {
namespace {

// Relative accuracy is what matters at tiny powers, where both capacities
// are themselves tiny.
const quad::Tolerance kGapTolerance{1e-15, 1e-12, 20000};

constexpr double kLogWidth = 1e-13;

double gap_log(double mfp_ratio, double log_power) {
    return threshold_gap(mfp_ratio, std::exp(log_power));
}

}  // namespace

std::string_view to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::boundary: return "boundary";
    }
    return "unknown";
}

double threshold_gap(double mfp_ratio, double power_per_mode) {
    if (!(mfp_ratio > 0.0) || !(power_per_mode > 0.0)) {
        throw DomainError("threshold_gap: l/L and P/NP0 must be > 0");
    }
    const double signal = 4.0 / 3.0 * mfp_ratio * power_per_mode;
    return c_infinity(power_per_mode).bits - c_holevo_noamp(signal, 1.0, kGapTolerance).bits;
}

double threshold_gap(const MediumParams& p) {
    p.validate();
    MediumParams unamplified = p;
    unamplified.length_ratio = 0.0;
    const double tau_bar = diffusion_averages(unamplified).tau_bar;
    return c_infinity(p.power_per_mode()).bits - c_holevo_noamp(tau_bar, p.power_per_p0, kGapTolerance).bits;
}

Region region_of(const MediumParams& p) {
    const double gap = threshold_gap(p);
    if (gap > kBoundaryTolerance) {
        return Region::A;
    }
    if (gap < -kBoundaryTolerance) {
        return Region::B;
    }
    return Region::boundary;
}

double small_power_asymptote(double mfp_ratio) {
    const double inv = 1.0 / mfp_ratio;
    return 0.75 * inv * std::exp(-0.375 * inv + specfun::euler_gamma);
}

SeparatrixPoint separatrix(double mfp_ratio, double low, double high) {
    if (!(low > 0.0) || !(high > low)) {
        throw DomainError("separatrix: need 0 < low < high");
    }
    double a = std::log(low);
    double b = std::log(high);
    double fa = gap_log(mfp_ratio, a);
    double fb = gap_log(mfp_ratio, b);
    if (fa == 0.0) {
        return {mfp_ratio, low, 0.0};
    }
    if (fb == 0.0) {
        return {mfp_ratio, high, 0.0};
    }
    if ((fa > 0.0) == (fb > 0.0)) {
        throw NoSignChangeError("separatrix: C_inf - C_H(0) does not change sign on [" + std::to_string(low) +
                                    ", " + std::to_string(high) + "] at l/L = " + std::to_string(mfp_ratio),
                                fa, fb);
    }
    while (b - a > kLogWidth * std::max(1.0, std::abs(a))) {
        const double m = 0.5 * (a + b);
        const double fm = gap_log(mfp_ratio, m);
        if (fm == 0.0) {
            a = b = m;
            fa = fb = 0.0;
            break;
        }
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    double root = 0.5 * (a + b);
    double froot = gap_log(mfp_ratio, root);
    if (fa != fb) {
        const double secant = a - fa * (b - a) / (fb - fa);
        if (secant > a && secant < b) {
            const double fs = gap_log(mfp_ratio, secant);
            if (std::abs(fs) < std::abs(froot)) {
                root = secant;
                froot = fs;
            }
        }
    }
    return {mfp_ratio, std::exp(root), froot};
}

std::vector<CurveEntry> separatrix_curve(std::span<const double> mfp_grid, const ScanOptions& opts) {
    if (!(opts.power_min > 0.0) || !(opts.power_max > opts.power_min) || opts.points_per_decade < 1) {
        throw DomainError("separatrix_curve: invalid power scan range");
    }
    std::vector<CurveEntry> out(mfp_grid.size());
    const double lo = std::log10(opts.power_min);
    const double hi = std::log10(opts.power_max);
    const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) * opts.points_per_decade)));

    parallel_for(mfp_grid.size(), [&](std::size_t k) {
        const double m = mfp_grid[k];
        CurveEntry entry;
        entry.mfp_ratio = m;
        double p_prev = opts.power_min;
        double f_prev = threshold_gap(m, p_prev);
        entry.gap_at_min = f_prev;
        for (int i = 1; i <= steps; ++i) {
            const double p = std::pow(10.0, lo + (hi - lo) * i / steps);
            const double f = threshold_gap(m, p);
            if ((f > 0.0) != (f_prev > 0.0)) {
                entry.roots.push_back(separatrix(m, p_prev, p));
            }
            p_prev = p;
            f_prev = f;
        }
        entry.gap_at_max = f_prev;
        out[k] = std::move(entry);
    });
    return out;
}

}  // namespace ampcap::phase
