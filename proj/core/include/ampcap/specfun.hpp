// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace ampcap::specfun {

inline constexpr double euler_gamma = 0.5772156649015329;
inline constexpr double ln2 = 0.6931471805599453;

/// Incomplete gamma function Gamma(0; x), i.e. the exponential integral E1(x).
///
/// Power series for x <= 1, modified-Lentz continued fraction above. Relative
/// accuracy is about 1e-15 on [1e-12, 700]; beyond ~745 the result underflows
/// to zero. Throws DomainError for x <= 0 or NaN.
double gamma0(double x);

/// exp(x) * Gamma(0; x) without ever forming exp(x) for large x.
/// Lies strictly inside (1/(x+1), 1/x). Throws DomainError for x <= 0.
double exp_gamma0(double x);

/// Von Neumann entropy (bits) of a Gaussian state with mean occupation x:
/// g(x) = (x+1) log2(x+1) - x log2 x, with g(0) = 0.
double g_entropy(double x);

/// First derivative g'(x) = log2(1 + 1/x); +inf at x = 0.
double g_entropy_derivative(double x);

namespace detail {

/// Raw power series -gamma - ln x - sum (-x)^k / (k k!). Accurate for x <~ 4.
double gamma0_series(double x);

/// Continued fraction for exp(x) Gamma(0; x). Converges quickly for x >~ 0.1,
/// slowly below; `max_iterations` bounds the work.
double exp_gamma0_continued_fraction(double x, int max_iterations = 100000);

}  // namespace detail
}  // namespace ampcap::specfun
