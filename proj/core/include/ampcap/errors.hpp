// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ampcap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameters at or beyond the laser threshold where an average diverges.
class ThresholdError : public Error {
public:
    using Error::Error;
};

/// Unphysical scattering matrix (e.g. an all-zero output row).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Matrix or index dimensions that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Quadrature could not meet its error bound within the subdivision budget.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double value, double error)
        : Error(what), value_(value), error_(error) {}
    double value() const noexcept { return value_; }
    double error() const noexcept { return error_; }

private:
    double value_;
    double error_;
};

/// Linear solve too ill-conditioned: the sample sits at or past its lasing pole.
class LasingInstabilityError : public Error {
public:
    LasingInstabilityError(const std::string& what, std::size_t sample_index, double condition)
        : Error(what), sample_index_(sample_index), condition_(condition) {}
    std::size_t sample_index() const noexcept { return sample_index_; }
    double condition_number() const noexcept { return condition_; }

private:
    std::size_t sample_index_;
    double condition_;
};

/// A model fit whose relative residual exceeds the acceptance limit.
class FitQualityError : public Error {
public:
    FitQualityError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Root bracket without a sign change.
class NoSignChangeError : public Error {
public:
    NoSignChangeError(const std::string& what, double f_low, double f_high)
        : Error(what), f_low_(f_low), f_high_(f_high) {}
    double f_low() const noexcept { return f_low_; }
    double f_high() const noexcept { return f_high_; }

private:
    double f_low_;
    double f_high_;
};

}  // namespace ampcap
