// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace ampcap {

/// Sample mean with its standard error (sample std / sqrt(n)).
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
};

/// Pairwise (cascade) summation; result depends only on the element order.
double pairwise_sum(std::span<const double> values);

McEstimate summarize(std::span<const double> values);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2}.
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// KS test against the exponential law with the given mean.
KsResult ks_exponential(std::span<const double> samples, double mean);

}  // namespace ampcap
