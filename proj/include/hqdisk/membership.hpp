// Pavlovic-style membership check for angular lifts: strict increase,
// bi-Lipschitz difference-quotient estimates, total increase, and stability
// of the sampled Hilbert sup of the lift derivative.
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "hqdisk/hilbert.hpp"
#include "hqdisk/lift.hpp"
#include "hqdisk/poisson.hpp"

namespace hqdisk {

enum class Verdict { member, non_member, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::non_member: return "non_member";
        default: return "inconclusive";
    }
}

struct MembershipReport {
    bool strictly_increasing = false;
    double min_quotient = 0.0;
    double bilipschitz_upper = 0.0;
    double bilipschitz_lower = 0.0;
    double upper_growth = 0.0; // relative growth of the upper estimate, mesh -> 4x mesh
    double total_increase = 0.0;
    double hilbert_sup_estimate = std::numeric_limits<double>::quiet_NaN();
    double hilbert_instability = std::numeric_limits<double>::quiet_NaN();
    bool derivative_numerical = false;
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
};

namespace detail {

// periodic derivative by symmetric difference quotients at a step well below
// the quotient mesh
struct NumericalDerivative {
    const LiftFunction* lift;
    double step;
    double operator()(double t) const {
        return (lift_extend(*lift, t + step) - lift_extend(*lift, t - step)) / (2.0 * step);
    }
};

} // namespace detail

// A lift belongs to the membership class iff it is strictly increasing and
// bi-Lipschitz with total increase 2pi and an essentially bounded Hilbert
// transform of its derivative.  All four conditions are checked at mesh
// resolution; a sampled sup cannot certify an essential bound, so the Hilbert
// condition is the "stable under quadrature doubling" heuristic, reported
// as such rather than as a proof.
inline MembershipReport check_membership(const LiftFunction& lift, const QuadratureConfig& cfg,
                                         const PVConfig& pv) {
    cfg.validate();
    pv.validate();
    MembershipReport rep;

    rep.total_increase = lift.eval(two_pi) - lift.eval(0.0);

    const int mesh = cfg.nodes;
    const auto base = estimate_bilipschitz(lift, mesh);
    const auto fine = estimate_bilipschitz(lift, 4 * mesh);
    rep.bilipschitz_upper = base.upper;
    rep.bilipschitz_lower = base.lower;
    rep.min_quotient = base.lower;
    rep.strictly_increasing = base.lower > 0.0;
    rep.upper_growth = (fine.upper - base.upper) / std::max(base.upper, 1e-300);

    bool total_ok = std::abs(rep.total_increase - two_pi) <= 1e-9;
    bool lower_ok = rep.bilipschitz_lower > cfg.flatness_floor;
    bool upper_stable = rep.upper_growth <= 0.10;

    // Hilbert channel: closed-form derivative when available, otherwise
    // difference quotients with a noise check at halved step
    rep.derivative_numerical = !lift.has_derivative();
    bool derivative_noisy = false;
    std::function<double(double)> g;
    const double num_step = (two_pi / static_cast<double>(mesh)) / 16.0;
    if (lift.has_derivative()) {
        g = [&lift](double t) { return lift.derivative_periodic(t); };
    } else {
        g = detail::NumericalDerivative{&lift, num_step};
        detail::NumericalDerivative gh{&lift, 0.5 * num_step};
        double noise = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double x = two_pi * static_cast<double>(i) / 64.0;
            const double a = g(x), b = gh(x);
            noise = std::max(noise, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
        }
        // quotients of a C^1 lift agree to O(step^2) under step halving; 0.10
        // only trips when the difference quotients have not converged at all
        derivative_noisy = noise > 0.10;
    }

    bool hilbert_finite = false, hilbert_stable = false;
    try {
        PVConfig pv2 = pv;
        pv2.nodes = 2 * pv.nodes;
        const double s1 = hilbert_sup(g, 64, pv, lift.breakpoints);
        const double s2 = hilbert_sup(g, 64, pv2, lift.breakpoints);
        rep.hilbert_sup_estimate = s2;
        rep.hilbert_instability = std::abs(s2 - s1) / std::max(s1, 1e-12);
        hilbert_finite = std::isfinite(s2);
        hilbert_stable = hilbert_finite && rep.hilbert_instability < 0.10;
    } catch (const std::domain_error& e) {
        rep.reason = std::string("derivative evaluation failed: ") + e.what();
    }

    if (!total_ok) {
        rep.verdict = Verdict::non_member;
        rep.reason = "total increase differs from 2*pi";
    } else if (!lower_ok) {
        rep.verdict = Verdict::non_member;
        rep.reason = rep.strictly_increasing
                         ? "bi-Lipschitz lower estimate below flatness floor"
                         : "not strictly increasing at mesh scale (flat segment, bi-Lipschitz lower bound 0)";
    } else if (!upper_stable) {
        rep.verdict = Verdict::non_member;
        rep.reason = "bi-Lipschitz upper estimate diverges under mesh refinement (not Lipschitz)";
    } else if (derivative_noisy) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "derivative absent and numerical differentiation too noisy to evaluate the Hilbert condition";
    } else if (!hilbert_finite) {
        rep.verdict = Verdict::inconclusive;
        if (rep.reason.empty()) rep.reason = "Hilbert sup estimate not finite";
    } else if (!hilbert_stable) {
        rep.verdict = Verdict::non_member;
        rep.reason = "Hilbert sup estimate not stable under quadrature doubling";
    } else {
        rep.verdict = Verdict::member;
        rep.reason = "all criteria satisfied at mesh resolution";
    }
    return rep;
}

inline MembershipReport check_membership(const LiftFunction& lift, const QuadratureConfig& cfg) {
    PVConfig pv;
    pv.nodes = std::max(1024, cfg.nodes);
    return check_membership(lift, cfg, pv);
}

} // namespace hqdisk
