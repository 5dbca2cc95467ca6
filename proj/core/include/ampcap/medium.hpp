// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace ampcap {

inline constexpr double kPi = 3.14159265358979323846;

/// Dimensionless description of an amplifying disordered waveguide.
///
/// Lengths enter only through the ratios L/l_a (`length_ratio`) and l/L
/// (`mfp_ratio`); power is measured in units of P0 = hbar w0 dw / 2 pi.
/// The laser threshold sits at length_ratio = pi.
struct MediumParams {
    int n_modes = 1;
    double length_ratio = 0.0;
    double mfp_ratio = 0.1;
    double power_per_p0 = 1.0;

    /// Build from raw lengths L, l, l_a (any common unit). l_a = inf means no gain.
    static MediumParams from_lengths(int n_modes, double length, double mfp,
                                     double amp_length, double power_per_p0);

    /// P / (N P0).
    double power_per_mode() const { return power_per_p0 / n_modes; }
    /// l / l_a.
    double mfp_over_amp_length() const { return mfp_ratio * length_ratio; }
    /// Set when the diffusion formulas are outside their l << L, l_a regime.
    bool diffusive_advisory() const;

    /// Throws DomainError unless N >= 1, 0 <= L/l_a <= pi, l/L > 0, P/P0 > 0.
    void validate() const;
};

/// Disorder-averaged transmission and receiver-side output weight.
struct DiffusionAverages {
    double tau_bar = 0.0;
    double sigma_bar = 1.0;
};

DiffusionAverages diffusion_averages(const MediumParams& p);

/// Effective signal-to-noise ratio (P/NP0) / [1 - cos x + (3 l_a / 4 l) sin x],
/// x = L/l_a. Finite at the threshold x = pi where it equals P / 2NP0.
double r_eff(const MediumParams& p);

/// Full 2N x 2N scattering matrix of a two-lead waveguide.
///
/// Index layout: [0, N) are sender-side (left) modes, [N, 2N) receiver-side
/// (right) modes; rows are outgoing, columns incoming. Hence
///   transmission()      t  = S[N.., 0..N)   sender -> receiver
///   reflection()        r  = S[N.., N..)    receiver -> receiver
///   back_transmission() t' = S[0..N, N..)
///   back_reflection()   r' = S[0..N, 0..N)
class ScatteringMatrix {
public:
    ScatteringMatrix() = default;
    explicit ScatteringMatrix(Eigen::MatrixXcd s);

    int n_modes() const { return n_modes_; }
    const Eigen::MatrixXcd& matrix() const { return s_; }

    auto transmission() const { return s_.block(n_modes_, 0, n_modes_, n_modes_); }
    auto reflection() const { return s_.block(n_modes_, n_modes_, n_modes_, n_modes_); }
    auto back_transmission() const { return s_.block(0, n_modes_, n_modes_, n_modes_); }
    auto back_reflection() const { return s_.block(0, 0, n_modes_, n_modes_); }

    /// sum_n |S_{row,n}|^2 over all 2N incoming channels, for receiver mode beta.
    double receiver_row_weight(int beta) const;

private:
    Eigen::MatrixXcd s_;
    int n_modes_ = 0;
};

/// (P/P0) |t_{beta alpha}|^2 / sum_n (|t_{beta n}|^2 + |r_{beta n}|^2); 0-based modes.
double snr_instance(const ScatteringMatrix& s, int alpha, int beta, double power_per_p0);

/// Spontaneous-emission weight sum_n |S_{beta n}|^2 - 1 of receiver mode beta.
/// Negative values signal a lossy (sub-unitary) row.
double fd_noise_weight(const ScatteringMatrix& s, int beta);

/// Smallest eigenvalue of S S^dagger - 1.
double min_eigenvalue_excess(const ScatteringMatrix& s);

/// max_ij |(S S^dagger - 1)_ij|.
double unitarity_violation(const ScatteringMatrix& s);

/// Super-unitarity test with slack: min eig(S S^dagger - 1) >= -1e-10 ||S||^2.
bool is_super_unitary(const ScatteringMatrix& s);

}  // namespace ampcap
