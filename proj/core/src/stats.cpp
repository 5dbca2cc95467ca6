// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ampcap/errors.hpp"

namespace ampcap {

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 32) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

McEstimate summarize(std::span<const double> values) {
    McEstimate est;
    est.n_samples = values.size();
    if (values.empty()) {
        return est;
    }
    const double n = static_cast<double>(values.size());
    est.mean = pairwise_sum(values) / n;
    if (values.size() > 1) {
        std::vector<double> sq(values.size());
        std::transform(values.begin(), values.end(), sq.begin(), [&](double v) {
            const double d = v - est.mean;
            return d * d;
        });
        const double var = pairwise_sum(sq) / (n - 1.0);
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

double kolmogorov_survival(double lambda) {
    if (lambda < 0.2) {
        return 1.0;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            break;
        }
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) {
        throw DomainError("ks_test: no samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    const double root_n = std::sqrt(n);
    // Stephens' small-sample correction to the asymptotic distribution.
    const double lambda = (root_n + 0.12 + 0.11 / root_n) * d;
    return {d, kolmogorov_survival(lambda)};
}

KsResult ks_exponential(std::span<const double> samples, double mean) {
    if (!(mean > 0.0)) {
        throw DomainError("ks_exponential: mean must be > 0");
    }
    return ks_test(samples, [mean](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x / mean); });
}

}  // namespace ampcap
