// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ampcap/medium.hpp"
#include "ampcap/stats.hpp"

namespace ampcap::wgsim {

/// Square-lattice Anderson strip with uniform linear gain.
///
/// Nearest-neighbour hopping is -1 (the energy unit). Each site of the
/// `width` x `length` active region carries a real potential drawn uniformly
/// from [-disorder/2, disorder/2] plus +i*gain. Clean semi-infinite strips of
/// the same width are attached on both ends.
struct LatticeSpec {
    int width = 10;
    int length = 100;
    double disorder_strength = 1.0;
    double gain = 0.0;
    double energy = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Number of propagating lead modes at spec.energy.
int propagating_modes(const LatticeSpec& spec);

/// Middle propagating mode, the default sender/receiver channel.
int default_mode(const LatticeSpec& spec);

/// Scattering matrix of one disorder realisation (the one fixed by spec.seed).
///
/// Slice-by-slice recursive Green's function, O(length * width^3), followed by
/// the Fisher-Lee relation in the lead-mode basis. Throws
/// LasingInstabilityError (sample index 0) when a slice solve has condition
/// number above 1e12, i.e. the sample sits on a lasing pole.
ScatteringMatrix scattering_matrix(const LatticeSpec& spec);

struct EnsembleStats {
    LatticeSpec spec;
    int n_modes = 0;
    int alpha = 0;
    int beta = 0;
    std::size_t n_samples = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<double> tau_samples;          // |t_{beta alpha}|^2
    std::vector<double> sigma_samples;        // sum_n |t_{beta n}|^2 + |r_{beta n}|^2
    std::vector<double> conductance_samples;  // sum_{nm} |t_{nm}|^2
    std::vector<double> min_eig_samples;      // min eig(S S^dagger - 1)
    std::vector<double> unitarity_samples;    // max |S S^dagger - 1|
    double tau_bar_hat = 0.0;
    double sigma_bar_hat = 0.0;
    double min_eig_ssdagger = 0.0;
    double max_unitarity_violation = 0.0;
};

/// Per-sample seed of realisation `index` in an ensemble rooted at `master_seed`.
std::uint64_t sample_seed(std::uint64_t master_seed, std::size_t index);

/// n_samples independent realisations (seeds derived from spec.seed). Sample
/// results are index-addressed, so output is identical for any thread count.
/// A LasingInstabilityError carries the offending sample index.
EnsembleStats run_ensemble(const LatticeSpec& spec, std::size_t n_samples, int alpha, int beta);
EnsembleStats run_ensemble(const LatticeSpec& spec, std::size_t n_samples);

struct MfpFit {
    double mfp = 0.0;        // transport mean free path in lattice units
    double residual = 0.0;   // max relative deviation of per-length estimates
    int n_modes = 0;
    std::vector<int> lengths;
    std::vector<double> mean_conductance;
    std::vector<double> per_length_mfp;
};

/// Fits <sum |t_nm|^2> = (4/3) N l / L over a length sweep of a passive strip.
/// Throws FitQualityError when the relative residual exceeds 10% (in
/// particular for a clean, ballistic strip) and DomainError if gain != 0.
MfpFit calibrate_mfp(const LatticeSpec& base, std::span<const int> lengths, std::size_t n_samples);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

/// Per-sample signal-to-noise ratios (P/P0) tau_i / sigma_i; sigma fluctuates
/// from sample to sample here.
std::vector<double> snr_samples(const EnsembleStats& stats, double power_per_p0);

/// Equal-width histogram of snr_samples over [min, max].
std::vector<HistogramBin> snr_histogram(const EnsembleStats& stats, double power_per_p0, int bins = 20);

/// Ensemble mean of log2(1 + R) with its standard error.
McEstimate mean_heterodyne_capacity(const EnsembleStats& stats, double power_per_p0);

}  // namespace ampcap::wgsim
