// Periodic Hilbert transformation by principal-value quadrature:
//   (H g)(x) = -(1/pi) lim_{eps->0+} int_eps^pi (g(x+t) - g(x-t)) / (2 tan(t/2)) dt
// with the plain-t denominator retained as a cross-check variant.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace hqdisk {

enum class PVKernel {
    tan_half, // 2 tan(t/2), the canonical kernel
    plain_t   // t, equivalent for existence questions
};

struct PVConfig {
    double epsilon = 1e-6; // exclusion half-width around the singularity
    int nodes = 8192;      // midpoint subintervals on [epsilon, pi]
    PVKernel kernel = PVKernel::tan_half;

    void validate() const {
        if (!(epsilon > 0.0 && epsilon < std::numbers::pi / 4.0))
            throw std::invalid_argument("PVConfig: epsilon must lie in (0, pi/4)");
        if (nodes < 64)
            throw std::invalid_argument("PVConfig: nodes must be >= 64");
    }
};

// Composite midpoint rule on [epsilon, pi].  Midpoint never places a node at
// t = epsilon, where the numerator difference is deep in cancellation.  For
// Lipschitz g the integrand is bounded, so epsilon only needs to avoid the
// 0/0 evaluation, not control the error.
inline double hilbert_at(const std::function<double(double)>& g, double x, const PVConfig& cfg) {
    cfg.validate();
    const double h = (std::numbers::pi - cfg.epsilon) / static_cast<double>(cfg.nodes);
    double sum = 0.0;
    for (int j = 0; j < cfg.nodes; ++j) {
        const double t = cfg.epsilon + (static_cast<double>(j) + 0.5) * h;
        const double num = g(x + t) - g(x - t);
        if (!std::isfinite(num))
            throw std::domain_error("hilbert_at: non-finite sample of g near t = " + std::to_string(t));
        const double den = (cfg.kernel == PVKernel::tan_half) ? 2.0 * std::tan(0.5 * t) : t;
        sum += num / den;
    }
    return -sum * h / std::numbers::pi;
}

namespace detail {

inline double periodic_distance(double a, double b) {
    double d = std::remainder(a - b, 2.0 * std::numbers::pi);
    return std::abs(d);
}

} // namespace detail

// Max of |hilbert_at| over a uniform sample of one period.  Sample points
// within epsilon of a known non-smooth point of g are skipped.
inline double hilbert_sup(const std::function<double(double)>& g, int sample_count,
                          const PVConfig& cfg, std::span<const double> exclude = {}) {
    if (sample_count < 32)
        throw std::invalid_argument("hilbert_sup: sample_count must be >= 32");
    double sup = 0.0;
    for (int i = 0; i < sample_count; ++i) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(sample_count);
        bool skip = false;
        for (double b : exclude) {
            if (detail::periodic_distance(x, b) < cfg.epsilon) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        sup = std::max(sup, std::abs(hilbert_at(g, x, cfg)));
    }
    return sup;
}

} // namespace hqdisk
