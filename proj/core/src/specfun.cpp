// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ampcap/errors.hpp"

namespace ampcap::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(double x, const char* fn) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(fn) + ": argument must be > 0, got " + std::to_string(x));
    }
}

}  // namespace

namespace detail {

double gamma0_series(double x) {
    double sum = 0.0;
    double term = 1.0;  // (-x)^k / k!
    for (int k = 1; k < 400; ++k) {
        term *= -x / k;
        const double contrib = term / k;
        sum += contrib;
        if (std::abs(contrib) < kEps * std::abs(sum)) {
            break;
        }
    }
    return -euler_gamma - std::log(x) - sum;
}

double exp_gamma0_continued_fraction(double x, int max_iterations) {
    // E1(x) e^x = 1/(x+1- 1^2/(x+3- 2^2/(x+5- ...)))
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= max_iterations; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            break;
        }
    }
    return h;
}

}  // namespace detail

double gamma0(double x) {
    require_positive(x, "gamma0");
    if (x <= 1.0) {
        return detail::gamma0_series(x);
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    return std::exp(-x) * detail::exp_gamma0_continued_fraction(x);
}

double exp_gamma0(double x) {
    require_positive(x, "exp_gamma0");
    if (x <= 1.0) {
        return std::exp(x) * detail::gamma0_series(x);
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    return detail::exp_gamma0_continued_fraction(x);
}

double g_entropy(double x) {
    if (!(x >= 0.0)) {
        throw DomainError("g_entropy: argument must be >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return x;
    }
    // log2(x+1) + x log2(1 + 1/x) avoids the large-x cancellation.
    return (std::log1p(x) + x * std::log1p(1.0 / x)) / ln2;
}

double g_entropy_derivative(double x) {
    if (!(x >= 0.0)) {
        throw DomainError("g_entropy_derivative: argument must be >= 0");
    }
    if (x == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log1p(1.0 / x) / ln2;
}

}  // namespace ampcap::specfun
