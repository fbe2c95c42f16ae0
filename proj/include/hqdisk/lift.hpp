// Angular lifts of circle maps: construction, canonical extension,
// convex combinations and bi-Lipschitz estimation.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hqdisk {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// A continuous nondecreasing map of [0, 2pi] onto an interval of length 2pi,
// extended to all of R by phi(t + 2k*pi) = phi(t) + 2k*pi.  `derivative` may
// be empty when no closed form exists (then membership checks fall back to
// difference quotients).  `breakpoints` lists the angles in (0, 2pi) where
// differentiability may fail.
struct LiftFunction {
    std::function<double(double)> eval;
    std::function<double(double)> derivative;
    std::vector<double> breakpoints;

    bool has_derivative() const { return static_cast<bool>(derivative); }

    // canonical extension to the real line
    double operator()(double t) const;

    // 2pi-periodic extension of the derivative; requires has_derivative()
    double derivative_periodic(double t) const;
};

namespace detail {

// reduce t to (u, k) with u in [0, 2pi) and t = u + 2k*pi
inline std::pair<double, long> reduce_angle(double t) {
    double k = std::floor(t / two_pi);
    double u = t - k * two_pi;
    if (u < 0.0) { u = 0.0; }
    if (u >= two_pi) { u -= two_pi; k += 1.0; }
    return {u, static_cast<long>(k)};
}

} // namespace detail

inline double lift_extend(const LiftFunction& lift, double t) {
    auto [u, k] = detail::reduce_angle(t);
    return lift.eval(u) + two_pi * static_cast<double>(k);
}

inline double LiftFunction::operator()(double t) const { return lift_extend(*this, t); }

inline double LiftFunction::derivative_periodic(double t) const {
    auto [u, k] = detail::reduce_angle(t);
    (void)k;
    return derivative(u);
}

// gamma(e^{it}) = e^{i phi(t)}.  weak_only marks lifts that are nondecreasing
// but not strictly increasing (weak homeomorphisms with arc fibers).
struct BoundaryMap {
    LiftFunction lift;
    bool weak_only = false;

    std::complex<double> operator()(double t) const {
        return std::polar(1.0, lift(t));
    }
};

inline LiftFunction identity_lift() {
    return LiftFunction{
        [](double t) { return t; },
        [](double) { return 1.0; },
        {}};
}

// quintic unit-interval homeomorphism with vanishing first and second
// derivatives at both endpoints
inline double smoothstep(double x) { return x * x * x * (10.0 + x * (6.0 * x - 15.0)); }
inline double smoothstep_prime(double x) { return 30.0 * x * x * (x - 1.0) * (x - 1.0); }
inline double smoothstep_second(double x) { return 60.0 * x * (2.0 * x - 1.0) * (x - 1.0); }

// transfer of a unit-interval homeomorphism f to the lift
// t -> pi * (f(t/2pi) + t/2pi); slope stays >= 1/2 whenever f is nondecreasing
inline LiftFunction lift_from_unit_map(std::function<double(double)> f,
                                       std::function<double(double)> fp,
                                       std::vector<double> unit_breakpoints = {}) {
    std::vector<double> bps;
    bps.reserve(unit_breakpoints.size());
    for (double x : unit_breakpoints) bps.push_back(two_pi * x);
    std::function<double(double)> d;
    if (fp) {
        d = [fp = std::move(fp)](double t) { return 0.5 * (fp(t / two_pi) + 1.0); };
    }
    return LiftFunction{
        [f = std::move(f)](double t) {
            double x = t / two_pi;
            return std::numbers::pi * (f(x) + x);
        },
        std::move(d), std::move(bps)};
}

inline LiftFunction smoothstep_lift() {
    return lift_from_unit_map([](double x) { return smoothstep(x); },
                              [](double x) { return smoothstep_prime(x); });
}

// piecewise map 2x / const 2/3 / (4/3)x - 1/3 scaled to [0, 2pi]; continuous
// onto, not injective (flat arc), endpoints fixed
inline LiftFunction example3_lift() {
    auto unit = [](double x) {
        if (x <= 1.0 / 3.0) return 2.0 * x;
        if (x <= 0.75) return 2.0 / 3.0;
        return (4.0 / 3.0) * x - 1.0 / 3.0;
    };
    auto unit_d = [](double x) {
        // right-continuous convention at the segment joints
        if (x < 1.0 / 3.0) return 2.0;
        if (x < 0.75) return 0.0;
        return 4.0 / 3.0;
    };
    return LiftFunction{
        [unit](double t) { return two_pi * unit(t / two_pi); },
        [unit_d](double t) { return unit_d(t / two_pi); },
        {two_pi / 3.0, 1.5 * std::numbers::pi}};
}

inline BoundaryMap example3_boundary() { return BoundaryMap{example3_lift(), true}; }

// boundary correspondence of the disk automorphism z -> (z - a)/(1 - conj(a) z):
// phi(t) = t - 2 Arg(1 - conj(a) e^{it}), phi' = (1-|a|^2)/|1 - conj(a) e^{it}|^2.
// 1 - conj(a) e^{it} stays in the right half plane for |a| < 1, so the
// principal argument is smooth.
inline LiftFunction mobius_trace_lift(std::complex<double> a) {
    if (std::abs(a) >= 1.0)
        throw std::domain_error("mobius_trace_lift: |a| must be < 1, got " + std::to_string(std::abs(a)));
    auto ac = std::conj(a);
    double asq = std::norm(a);
    return LiftFunction{
        [ac](double t) { return t - 2.0 * std::arg(1.0 - ac * std::polar(1.0, t)); },
        [ac, asq](double t) { return (1.0 - asq) / std::norm(1.0 - ac * std::polar(1.0, t)); },
        {}};
}

inline LiftFunction rotated(const LiftFunction& lift, double alpha) {
    return LiftFunction{
        [e = lift.eval, alpha](double t) { return e(t) + alpha; },
        lift.derivative, lift.breakpoints};
}

inline LiftFunction convex_combination(const LiftFunction& a, const LiftFunction& b, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("convex_combination: lambda outside [0,1]: " + std::to_string(lambda));
    std::vector<double> bps(a.breakpoints);
    bps.insert(bps.end(), b.breakpoints.begin(), b.breakpoints.end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::function<double(double)> d;
    if (a.has_derivative() && b.has_derivative()) {
        d = [da = a.derivative, db = b.derivative, lambda](double t) {
            return lambda * da(t) + (1.0 - lambda) * db(t);
        };
    }
    return LiftFunction{
        [ea = a.eval, eb = b.eval, lambda](double t) {
            return lambda * ea(t) + (1.0 - lambda) * eb(t);
        },
        std::move(d), std::move(bps)};
}

struct BiLipschitzEstimate {
    double upper = 0.0; // max sampled difference quotient
    double lower = 0.0; // min sampled difference quotient; 0 on flat segments
};

namespace detail {

// uniform mesh intervals on [0, 2pi], split once at every breakpoint falling
// strictly inside a cell
inline std::vector<std::pair<double, double>>
quotient_intervals(int mesh, std::span<const double> breakpoints) {
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(mesh) + 2 * breakpoints.size() + 1);
    for (int i = 0; i <= mesh; ++i)
        pts.push_back(two_pi * static_cast<double>(i) / static_cast<double>(mesh));
    double h = two_pi / static_cast<double>(mesh);
    for (double b : breakpoints) {
        if (b > 0.0 && b < two_pi) {
            pts.push_back(b);
            if (b - 0.5 * h > 0.0) pts.push_back(b - 0.5 * h);
            if (b + 0.5 * h < two_pi) pts.push_back(b + 0.5 * h);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<std::pair<double, double>> iv;
    iv.reserve(pts.size());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] - pts[i] > 1e-13) iv.emplace_back(pts[i], pts[i + 1]);
    return iv;
}

inline BiLipschitzEstimate quotient_extrema(const LiftFunction& lift,
                                            std::span<const std::pair<double, double>> intervals) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (auto [a, b] : intervals) {
        double q = (lift.eval(b) - lift.eval(a)) / (b - a);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return {hi, lo};
}

} // namespace detail

inline BiLipschitzEstimate estimate_bilipschitz(const LiftFunction& lift, int mesh) {
    if (mesh < 16) throw std::invalid_argument("estimate_bilipschitz: mesh must be >= 16");
    auto iv = detail::quotient_intervals(mesh, lift.breakpoints);
    return detail::quotient_extrema(lift, iv);
}

} // namespace hqdisk
