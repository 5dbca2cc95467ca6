// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <string>

#include <Eigen/Dense>

#include "ampcap/errors.hpp"

namespace ampcap::quad {
namespace {

// Kronrod abscissae (positive half, descending) and weights; Gauss weights for
// the embedded 7-point rule sit at the odd Kronrod positions.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadResult adaptive_gk(const Integrand& f, double lo, double hi, const Tolerance& tol,
                       std::span<const double> breakpoints) {
    std::priority_queue<Segment> heap;
    QuadResult out;
    double total = 0.0;
    double total_err = 0.0;

    double left = lo;
    auto push = [&](const Segment& s) {
        heap.push(s);
        total += s.value;
        total_err += s.error;
        out.evaluations += 15;
    };
    for (double b : breakpoints) {
        if (b > left && b < hi) {
            push(gk15(f, left, b));
            left = b;
        }
    }
    push(gk15(f, left, hi));

    while (total_err > std::max(tol.abs, tol.rel * std::abs(total))) {
        if (static_cast<int>(heap.size()) >= tol.max_intervals) {
            throw QuadratureError("adaptive_gk: error bound " + std::to_string(total_err) +
                                      " not met within " + std::to_string(tol.max_intervals) +
                                      " intervals",
                                  total, total_err);
        }
        const Segment worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            // Interval no longer divisible in floating point; keep its estimate.
            heap.push({worst.lo, worst.hi, worst.value, 0.0});
            total += worst.value;
            continue;
        }
        push(gk15(f, worst.lo, mid));
        push(gk15(f, mid, worst.hi));
    }

    // Re-sum from the segments to shed accumulated add/subtract rounding.
    double value = 0.0;
    double err = 0.0;
    out.intervals = static_cast<int>(heap.size());
    std::vector<Segment> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    for (const auto& s : segs) {
        value += s.value;
        err += s.error;
    }
    out.value = value;
    out.error = err;
    return out;
}

const LaguerreRule& gauss_laguerre(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<LaguerreRule>> cache;
    if (n < 1) {
        throw DomainError("gauss_laguerre: n must be >= 1");
    }
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        // Jacobi matrix of the Laguerre recurrence: diag 2i+1, off-diag i+1.
        Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            jacobi(i, i) = 2.0 * i + 1.0;
            if (i + 1 < n) {
                jacobi(i, i + 1) = jacobi(i + 1, i) = i + 1.0;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
        auto rule = std::make_unique<LaguerreRule>();
        rule->nodes.resize(n);
        rule->weights.resize(n);
        for (int i = 0; i < n; ++i) {
            rule->nodes[i] = solver.eigenvalues()(i);
            const double v0 = solver.eigenvectors()(0, i);
            rule->weights[i] = v0 * v0;
        }
        slot = std::move(rule);
    }
    return *slot;
}

double gauss_laguerre_sum(const Integrand& h, int n) {
    const auto& rule = gauss_laguerre(n);
    double sum = 0.0;
    // Smallest weights first.
    for (int i = n - 1; i >= 0; --i) {
        if (rule.weights[i] > 0.0) {
            sum += rule.weights[i] * h(rule.nodes[i]);
        }
    }
    return sum;
}

QuadResult exponential_average_adaptive(const Integrand& h, double mean, const Tolerance& tol) {
    if (!(mean > 0.0)) {
        throw DomainError("exponential_average_adaptive: mean must be > 0");
    }
    // Tail cut X: h(mean X)(1+X)e^{-X}/X below a tenth of the target.
    double cut = 30.0;
    double tail = 0.0;
    for (;;) {
        tail = h(mean * cut) * (1.0 + cut) * std::exp(-cut) / cut;
        if (tail <= 0.1 * tol.abs || cut >= 700.0) {
            break;
        }
        cut += 10.0;
    }
    std::vector<double> breaks;
    for (double b = cut * 0.5; b > 1e-20; b *= 0.25) {
        breaks.push_back(b);
    }
    std::reverse(breaks.begin(), breaks.end());

    Tolerance inner = tol;
    inner.abs = std::max(0.0, tol.abs - tail);
    if (inner.abs == 0.0 && inner.rel == 0.0) {
        inner.abs = 0.5 * tol.abs;
    }
    auto weighted = [&](double x) { return std::exp(-x) * h(mean * x); };
    QuadResult r = adaptive_gk(weighted, 0.0, cut, inner, breaks);
    r.error += tail;
    return r;
}

QuadResult exponential_average_laguerre(const Integrand& h, double mean, int n) {
    if (!(mean > 0.0)) {
        throw DomainError("exponential_average_laguerre: mean must be > 0");
    }
    auto scaled = [&](double x) { return h(mean * x); };
    const double coarse = gauss_laguerre_sum(scaled, n);
    const double fine = gauss_laguerre_sum(scaled, 2 * n);
    QuadResult r;
    r.value = fine;
    r.error = std::abs(fine - coarse);
    r.evaluations = 3 * n;
    return r;
}

}  // namespace ampcap::quad
