// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/medium.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ampcap/errors.hpp"

namespace ampcap {
namespace {

constexpr double kAdvisoryLimit = 0.2;

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

void check_mode(const ScatteringMatrix& s, int mode, const char* what) {
    if (mode < 0 || mode >= s.n_modes()) {
        throw DimensionError(std::string(what) + " mode index " + std::to_string(mode) +
                             " outside [0, " + std::to_string(s.n_modes()) + ")");
    }
}

}  // namespace

MediumParams MediumParams::from_lengths(int n_modes, double length, double mfp,
                                        double amp_length, double power_per_p0) {
    if (!(length > 0.0) || !(mfp > 0.0) || !(amp_length > 0.0)) {
        throw DomainError("MediumParams: lengths L, l, l_a must be positive");
    }
    MediumParams p{n_modes, length / amp_length, mfp / length, power_per_p0};
    p.validate();
    return p;
}

bool MediumParams::diffusive_advisory() const {
    return mfp_ratio > kAdvisoryLimit || mfp_over_amp_length() > kAdvisoryLimit;
}

void MediumParams::validate() const {
    if (n_modes < 1) {
        throw DomainError("MediumParams: n_modes must be >= 1");
    }
    if (!(length_ratio >= 0.0) || length_ratio > kPi) {
        throw DomainError("MediumParams: length_ratio L/l_a must lie in [0, pi] (laser threshold at pi), got " +
                          std::to_string(length_ratio));
    }
    if (!(mfp_ratio > 0.0) || !std::isfinite(mfp_ratio)) {
        throw DomainError("MediumParams: mfp_ratio l/L must be positive and finite");
    }
    if (!(power_per_p0 > 0.0) || !std::isfinite(power_per_p0)) {
        throw DomainError("MediumParams: power_per_p0 must be positive and finite");
    }
}

DiffusionAverages diffusion_averages(const MediumParams& p) {
    p.validate();
    const double x = p.length_ratio;
    if (x >= kPi) {
        throw ThresholdError("diffusion_averages: tau_bar and sigma_bar diverge at the laser threshold L/l_a = pi");
    }
    const double s = std::sin(x);
    if (!(s > 0.0) && x > 0.0) {
        throw ThresholdError("diffusion_averages: sin(L/l_a) vanished at the laser threshold");
    }
    // 4l/3l_a = (4/3)(l/L)(L/l_a); (1 - cos x)/sin x = tan(x/2).
    const double k = 4.0 * p.mfp_ratio / 3.0;
    DiffusionAverages out;
    out.tau_bar = k / (p.n_modes * sinc(x));
    out.sigma_bar = 1.0 + k * x * std::tan(0.5 * x);
    return out;
}

double r_eff(const MediumParams& p) {
    p.validate();
    const double x = p.length_ratio;
    const double half = std::sin(0.5 * x);
    const double bracket = 2.0 * half * half + 3.0 / (4.0 * p.mfp_ratio) * sinc(x);
    return p.power_per_mode() / bracket;
}

ScatteringMatrix::ScatteringMatrix(Eigen::MatrixXcd s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols() || s_.rows() % 2 != 0 || s_.rows() == 0) {
        throw DimensionError("ScatteringMatrix: expected a non-empty 2N x 2N matrix");
    }
    n_modes_ = static_cast<int>(s_.rows() / 2);
}

double ScatteringMatrix::receiver_row_weight(int beta) const {
    return s_.row(n_modes_ + beta).squaredNorm();
}

double snr_instance(const ScatteringMatrix& s, int alpha, int beta, double power_per_p0) {
    check_mode(s, alpha, "snr_instance: alpha");
    check_mode(s, beta, "snr_instance: beta");
    const double denom = s.receiver_row_weight(beta);
    if (!(denom > 0.0)) {
        throw DegenerateError("snr_instance: receiver row " + std::to_string(beta) + " has zero weight");
    }
    return power_per_p0 * std::norm(s.transmission()(beta, alpha)) / denom;
}

double fd_noise_weight(const ScatteringMatrix& s, int beta) {
    check_mode(s, beta, "fd_noise_weight: beta");
    return s.receiver_row_weight(beta) - 1.0;
}

namespace {

Eigen::MatrixXcd excess(const ScatteringMatrix& s) {
    const auto& m = s.matrix();
    Eigen::MatrixXcd e = m * m.adjoint();
    e.diagonal().array() -= 1.0;
    return e;
}

}  // namespace

double min_eigenvalue_excess(const ScatteringMatrix& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(excess(s), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double unitarity_violation(const ScatteringMatrix& s) {
    return excess(s).cwiseAbs().maxCoeff();
}

bool is_super_unitary(const ScatteringMatrix& s) {
    const double norm2 = s.matrix().operatorNorm();
    return min_eigenvalue_excess(s) >= -1e-10 * norm2 * norm2;
}

}  // namespace ampcap
