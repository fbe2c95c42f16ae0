// Poisson transformation of a circle map: harmonic extension into the disk,
// Wirtinger derivatives, harmonicity residuals and sup-metric distances.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqdisk/lift.hpp"

namespace hqdisk {

struct QuadratureConfig {
    int nodes = 2048;            // periodic trapezoid nodes; power of two
    double r_max = 0.99;         // largest certified interior radius
    double flatness_floor = 1e-6; // lower difference-quotient floor for membership

    void validate() const {
        if (nodes < 128 || (nodes & (nodes - 1)) != 0)
            throw std::invalid_argument("QuadratureConfig: nodes must be a power of two >= 128");
        if (!(r_max > 0.0 && r_max < 1.0))
            throw std::invalid_argument("QuadratureConfig: r_max must lie in (0,1)");
        if (!(flatness_floor > 0.0))
            throw std::invalid_argument("QuadratureConfig: flatness_floor must be > 0");
    }
};

// accuracy near the rim: kernel harmonics decay like r^k, so keep
// nodes >= 64 / (1 - r) for evaluations at radius r
inline int recommended_nodes(double r) {
    int n = 128;
    while (n < 64.0 / (1.0 - r) && n < (1 << 24)) n <<= 1;
    return n;
}

inline double poisson_kernel(double r, double theta) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("poisson_kernel: r must lie in [0,1), got " + std::to_string(r));
    return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

// Harmonic extension PT[gamma](z) = (1/2pi) int P(r, t - phi) gamma(e^{it}) dt
// evaluated by the periodic trapezoid rule; boundary samples are taken once
// at construction.  Immutable, safe for concurrent evaluation.
class HarmonicExtension {
public:
    HarmonicExtension(BoundaryMap boundary, QuadratureConfig cfg)
        : boundary_(std::move(boundary)), cfg_(cfg) {
        cfg_.validate();
        init_samples_([this](double t) { return boundary_(t); });
    }

    // degenerate or synthetic boundary curves (test inputs, constant maps)
    HarmonicExtension(const std::function<std::complex<double>(double)>& curve, QuadratureConfig cfg)
        : boundary_{identity_lift(), false}, cfg_(cfg) {
        cfg_.validate();
        init_samples_(curve);
    }

    const BoundaryMap& boundary() const { return boundary_; }
    const QuadratureConfig& config() const { return cfg_; }

    std::complex<double> extend(std::complex<double> z) const {
        require_radius_(z, 0.0);
        const double w = 1.0 - std::norm(z);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < samples_.size(); ++j)
            acc += samples_[j] * (w / std::norm(unit_nodes_[j] - z));
        return acc / static_cast<double>(samples_.size());
    }

    struct WirtingerPair {
        std::complex<double> fz;
        std::complex<double> fzbar;
    };

    enum class DerivMode { analytic, finite_difference };

    // analytic mode differentiates the kernel under the integral:
    //   d/dz    P = e^{it} / (e^{it} - z)^2
    //   d/dzbar P = e^{-it} / (e^{-it} - zbar)^2
    WirtingerPair wirtinger(std::complex<double> z, DerivMode mode = DerivMode::analytic) const {
        require_radius_(z, 1e-6);
        if (mode == DerivMode::analytic) {
            std::complex<double> fz{0.0, 0.0}, fzb{0.0, 0.0};
            const std::complex<double> zb = std::conj(z);
            for (std::size_t j = 0; j < samples_.size(); ++j) {
                const std::complex<double> e = unit_nodes_[j];
                const std::complex<double> a = e - z;
                const std::complex<double> b = std::conj(e) - zb;
                fz += samples_[j] * e / (a * a);
                fzb += samples_[j] * std::conj(e) / (b * b);
            }
            const double n = static_cast<double>(samples_.size());
            return {fz / n, fzb / n};
        }
        const double s = 1e-5 * (1.0 - std::abs(z));
        const std::complex<double> fx = (extend(z + s) - extend(z - s)) / (2.0 * s);
        const std::complex<double> fy =
            (extend(z + std::complex<double>(0.0, s)) - extend(z - std::complex<double>(0.0, s))) / (2.0 * s);
        const std::complex<double> i{0.0, 1.0};
        return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
    }

    // five-point discrete Laplacian magnitude; small values witness harmonicity
    double laplacian_residual(std::complex<double> z, double step) const {
        if (!(step > 0.0))
            throw std::invalid_argument("laplacian_residual: step must be > 0");
        if (std::abs(z) + 2.0 * step > cfg_.r_max)
            throw std::domain_error("laplacian_residual: |z| + 2*step exceeds r_max = " +
                                    std::to_string(cfg_.r_max));
        const std::complex<double> i{0.0, 1.0};
        const std::complex<double> sum = extend(z + step) + extend(z - step) +
                                         extend(z + i * step) + extend(z - i * step) -
                                         4.0 * extend(z);
        return std::abs(sum) / (step * step);
    }

private:
    void init_samples_(const std::function<std::complex<double>(double)>& curve) {
        unit_nodes_.resize(static_cast<std::size_t>(cfg_.nodes));
        samples_.resize(static_cast<std::size_t>(cfg_.nodes));
        for (int j = 0; j < cfg_.nodes; ++j) {
            const double t = two_pi * static_cast<double>(j) / static_cast<double>(cfg_.nodes);
            unit_nodes_[static_cast<std::size_t>(j)] = std::polar(1.0, t);
            samples_[static_cast<std::size_t>(j)] = curve(t);
        }
    }

    void require_radius_(std::complex<double> z, double margin) const {
        if (std::abs(z) > cfg_.r_max - margin + 1e-12)
            throw std::domain_error("HarmonicExtension: |z| = " + std::to_string(std::abs(z)) +
                                    " beyond certified radius r_max = " + std::to_string(cfg_.r_max));
    }

    BoundaryMap boundary_;
    QuadratureConfig cfg_;
    std::vector<std::complex<double>> unit_nodes_;
    std::vector<std::complex<double>> samples_;
};

struct SupDistance {
    double chordal;    // max_t |e^{i phi1(t)} - e^{i phi2(t)}|; equals the
                       // interior sup-distance by the maximum principle
    double lift_bound; // max_t |phi1(t) - phi2(t)|, the cruder bound
};

inline SupDistance sup_distance(const HarmonicExtension& h1, const HarmonicExtension& h2, int samples) {
    if (samples < 2) throw std::invalid_argument("sup_distance: samples must be >= 2");
    if (h1.config().nodes != h2.config().nodes || h1.config().r_max != h2.config().r_max)
        throw std::invalid_argument("sup_distance: extensions must share the quadrature config");
    const LiftFunction& f1 = h1.boundary().lift;
    const LiftFunction& f2 = h2.boundary().lift;
    double chord = 0.0, lift = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = two_pi * static_cast<double>(i) / static_cast<double>(samples);
        const double p1 = f1(t), p2 = f2(t);
        chord = std::max(chord, std::abs(std::polar(1.0, p1) - std::polar(1.0, p2)));
        lift = std::max(lift, std::abs(p1 - p2));
    }
    return {chord, lift};
}

} // namespace hqdisk
