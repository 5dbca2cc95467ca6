// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ampcap/medium.hpp"

namespace ampcap::phase {

/// A: threshold gain raises the Holevo capacity above its unamplified value.
/// B: it does not. boundary: within `kBoundaryTolerance` bits of the separatrix.
enum class Region { A, B, boundary };

std::string_view to_string(Region r);

inline constexpr double kBoundaryTolerance = 1e-9;

/// l/L at which the separatrix saturates for P >> N P0: 3 / (8 e).
inline constexpr double kSaturationMfp = 0.13795479043929087;

/// C_inf(P/NP0) - C_H(0) in bits, written in the N-free coordinates
/// (l/L, P/NP0) where tau_bar P/P0 = (4/3)(l/L)(P/NP0).
double threshold_gap(double mfp_ratio, double power_per_mode);

/// Same gap evaluated from a full parameter set (N kept explicit).
double threshold_gap(const MediumParams& p);

Region region_of(const MediumParams& p);

/// Small-power branch of the separatrix, (3L/4l) exp(-3L/8l + gamma).
double small_power_asymptote(double mfp_ratio);

struct SeparatrixPoint {
    double mfp_ratio = 0.0;
    double power_per_mode = 0.0;
    double residual = 0.0;
};

/// Root of threshold_gap in P/NP0 inside [low, high] at fixed l/L: bisection
/// in log-power followed by a secant polish, to |residual| <= 1e-9 bits.
/// Throws NoSignChangeError when the gap has one sign over the bracket.
SeparatrixPoint separatrix(double mfp_ratio, double low, double high);

struct ScanOptions {
    double power_min = 1e-16;
    double power_max = 1e6;
    int points_per_decade = 200;
};

struct CurveEntry {
    double mfp_ratio = 0.0;
    std::vector<SeparatrixPoint> roots;  // empty: no sign change on the scan
    double gap_at_min = 0.0;
    double gap_at_max = 0.0;
};

/// Every sign change of the gap on a log-power scan, refined by `separatrix`.
/// Output order follows the grid; points are independent and run in parallel.
std::vector<CurveEntry> separatrix_curve(std::span<const double> mfp_grid, const ScanOptions& opts = {});

}  // namespace ampcap::phase
