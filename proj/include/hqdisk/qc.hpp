// Quasiconformality quantified: complex dilatation fields over polar grids,
// the combined membership/dilatation verdict, and the Choquet-Deny family of
// harmonic maps with harmonic inverses.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqdisk/membership.hpp"
#include "hqdisk/poisson.hpp"

namespace hqdisk {

// mu = f_zbar / f_z sampled over a polar grid; K = (1 + |mu|)/(1 - |mu|).
// Points with |f_z| < 1e-12 are flagged degenerate, points with |mu| >= 1 are
// flagged as orientation/distortion overflow -- never silently clipped.
struct DilatationField {
    struct Point {
        std::complex<double> z;
        std::complex<double> mu;
        double K = std::numeric_limits<double>::quiet_NaN();
        bool degenerate = false;
        bool overflow = false;
    };

    std::vector<double> radii;
    int angles = 0;
    std::vector<Point> points; // radius-major, angle order
    std::vector<double> max_mu_per_radius;
    std::vector<double> k_max_per_radius;
    double k_max = 1.0;
    std::size_t degenerate_count = 0;
    std::size_t overflow_count = 0;

    bool flagged() const { return degenerate_count + overflow_count > 0; }
};

inline DilatationField dilatation_field(const HarmonicExtension& h, std::span<const double> radii,
                                        int angles) {
    if (angles < 8) throw std::invalid_argument("dilatation_field: angles must be >= 8");
    for (double r : radii) {
        if (!(r > 0.0 && r <= h.config().r_max))
            throw std::invalid_argument("dilatation_field: radius " + std::to_string(r) +
                                        " outside (0, r_max]");
        if (r > h.config().r_max - 1e-6)
            throw std::invalid_argument("dilatation_field: radius " + std::to_string(r) +
                                        " leaves no headroom for derivatives; build the extension "
                                        "with r_max >= r + 1e-6");
    }
    DilatationField field;
    field.radii.assign(radii.begin(), radii.end());
    field.angles = angles;
    field.points.reserve(radii.size() * static_cast<std::size_t>(angles));
    for (double r : radii) {
        double mu_max = 0.0, k_max = 1.0;
        for (int i = 0; i < angles; ++i) {
            const double theta = two_pi * static_cast<double>(i) / static_cast<double>(angles);
            DilatationField::Point p;
            p.z = std::polar(r, theta);
            const auto d = h.wirtinger(p.z);
            if (std::abs(d.fz) < 1e-12) {
                p.degenerate = true;
                field.degenerate_count++;
            } else {
                p.mu = d.fzbar / d.fz;
                const double m = std::abs(p.mu);
                mu_max = std::max(mu_max, m);
                if (m >= 1.0) {
                    p.overflow = true;
                    field.overflow_count++;
                } else {
                    p.K = (1.0 + m) / (1.0 - m);
                    k_max = std::max(k_max, p.K);
                }
            }
            field.points.push_back(p);
        }
        field.max_mu_per_radius.push_back(mu_max);
        field.k_max_per_radius.push_back(k_max);
    }
    if (field.degenerate_count == field.points.size())
        throw std::runtime_error("dilatation_field: every grid point is degenerate (|f_z| ~ 0)");
    field.k_max = 1.0;
    for (double k : field.k_max_per_radius) field.k_max = std::max(field.k_max, k);
    if (field.overflow_count > 0) field.k_max = std::numeric_limits<double>::infinity();
    return field;
}

inline std::vector<double> default_sweep_radii(double r_max) {
    std::vector<double> radii;
    for (double r : {0.5, 0.75, 0.9, 0.95, 0.99})
        if (r <= r_max) radii.push_back(r);
    return radii;
}

// Combined verdict: the membership criteria are authoritative (finite sampling
// can never prove non-quasiconformality); the dilatation sweep corroborates.
// Agreement means: a member shows no flagged grid point, a non-member shows
// max|mu| nondecreasing toward the rim (distortion escaping).
struct PavlovicReport {
    MembershipReport membership;
    DilatationField field;
    bool channels_agree = false;
    std::string agreement_note;
};

inline PavlovicReport pavlovic_verdict(const LiftFunction& lift, const QuadratureConfig& cfg,
                                       const PVConfig& pv, std::span<const double> radii = {},
                                       int angles = 256) {
    PavlovicReport rep;
    rep.membership = check_membership(lift, cfg, pv);

    std::vector<double> rs = radii.empty() ? default_sweep_radii(cfg.r_max)
                                           : std::vector<double>(radii.begin(), radii.end());
    QuadratureConfig field_cfg = cfg;
    for (double r : rs) {
        field_cfg.nodes = std::max(field_cfg.nodes, recommended_nodes(r));
        field_cfg.r_max = std::min(0.9995, std::max(field_cfg.r_max, r + 2e-3));
    }
    HarmonicExtension h(BoundaryMap{lift, rep.membership.min_quotient <= 0.0}, field_cfg);
    rep.field = dilatation_field(h, rs, angles);

    switch (rep.membership.verdict) {
        case Verdict::member: {
            rep.channels_agree = !rep.field.flagged();
            rep.agreement_note = rep.channels_agree
                                     ? "member with |mu| < 1 at every sampled point"
                                     : "member verdict but dilatation field has flagged points";
            break;
        }
        case Verdict::non_member: {
            bool growing = true;
            for (std::size_t i = 0; i + 1 < rep.field.max_mu_per_radius.size(); ++i)
                growing = growing && rep.field.max_mu_per_radius[i + 1] >=
                                         rep.field.max_mu_per_radius[i] - 1e-3;
            rep.channels_agree = growing;
            rep.agreement_note = growing
                                     ? "non-member with max|mu| nondecreasing toward the rim"
                                     : "non-member verdict but the dilatation profile is flat";
            break;
        }
        default:
            rep.channels_agree = true;
            rep.agreement_note = "membership inconclusive; dilatation sweep reported as-is";
    }
    return rep;
}

// f(z) = alpha (beta z + 2i Arg(gamma - e^{-beta z})) + delta with principal
// Arg; requires alpha*beta*gamma != 0 and |e^{-beta z}| < |gamma| at z
inline std::complex<double> choquet_deny(std::complex<double> alpha, std::complex<double> beta,
                                         std::complex<double> gamma_c, std::complex<double> delta,
                                         std::complex<double> z) {
    if (alpha == std::complex<double>{0.0, 0.0})
        throw std::domain_error("choquet_deny: alpha must be nonzero");
    if (beta == std::complex<double>{0.0, 0.0})
        throw std::domain_error("choquet_deny: beta must be nonzero");
    if (gamma_c == std::complex<double>{0.0, 0.0})
        throw std::domain_error("choquet_deny: gamma must be nonzero");
    const std::complex<double> e = std::exp(-beta * z);
    if (!(std::abs(e) < std::abs(gamma_c)))
        throw std::domain_error("choquet_deny: |e^{-beta z}| < |gamma| violated at z = (" +
                                std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    const std::complex<double> i{0.0, 1.0};
    return alpha * (beta * z + 2.0 * i * std::arg(gamma_c - e)) + delta;
}

} // namespace hqdisk
