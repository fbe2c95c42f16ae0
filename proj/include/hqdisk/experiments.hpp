// Experiment runners behind the CLI subcommands: incompleteness sequence,
// the weak-homeomorphism example, convex-combination sampling and the
// Hilbert transform demo, with deterministic CSV/JSON serialization.
#pragma once

#include <charconv>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hqdisk/cantor.hpp"
#include "hqdisk/hilbert.hpp"
#include "hqdisk/lift.hpp"
#include "hqdisk/membership.hpp"
#include "hqdisk/poisson.hpp"
#include "hqdisk/qc.hpp"
#include "hqdisk/render.hpp"

namespace hqdisk {

using ordered_json = nlohmann::ordered_json;

namespace detail {

// shortest round-trip decimal form; identical config must give identical bytes
inline std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Sampler {
    std::mt19937 gen;
    explicit Sampler(std::uint32_t seed) : gen(seed) {}
    double u01() { return static_cast<double>(gen() >> 8) * 0x1.0p-24; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen() % n); }
};

} // namespace detail

struct NamedLift {
    std::string name;
    LiftFunction lift;
    bool weak_only = false;
};

// accepted names: identity | example3 | phi_n:<n> | phi_cantor | mobius:<a>
inline NamedLift parse_boundary(const std::string& name) {
    if (name == "identity") return {name, identity_lift(), false};
    if (name == "example3") return {name, example3_lift(), true};
    if (name == "phi_cantor") return {name, phi_cantor(), false};
    if (name.rfind("phi_n:", 0) == 0) {
        int n = -1;
        auto s = name.substr(6);
        auto res = std::from_chars(s.data(), s.data() + s.size(), n);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || n < 0 || n > 12)
            throw std::invalid_argument("parse_boundary: phi_n index must be an integer in [0,12]: " + name);
        return {name, phi_n(n), false};
    }
    if (name.rfind("mobius:", 0) == 0) {
        auto s = name.substr(7);
        double a = 0.0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), a);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || std::abs(a) >= 1.0)
            throw std::invalid_argument("parse_boundary: mobius parameter must be a real with |a| < 1: " + name);
        return {name, mobius_trace_lift(a), false};
    }
    throw std::invalid_argument("parse_boundary: unknown boundary map '" + name +
                                "' (expected identity|example3|phi_n:<n>|phi_cantor|mobius:<a>)");
}

// ---------------------------------------------------------------------------
// incompleteness experiment: distances to the Cantor limit, membership and
// rim distortion of every phi_n
// ---------------------------------------------------------------------------

struct IncompletenessRow {
    int n = 0;
    double lift_dist = 0.0;
    double sup_dist = 0.0;
    double k_max = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

struct IncompletenessReport {
    int n_max = 0;
    QuadratureConfig cfg;
    PVConfig pv;
    int mesh = 4096;
    double k_radius = 0.95;
    int k_angles = 1024;
    std::vector<IncompletenessRow> rows;
    bool chain_ok = true;    // sup_dist <= lift_dist + 1e-6 for every n
    bool verdicts_ok = true; // every phi_n a member

    bool ok() const { return chain_ok && verdicts_ok; }

    std::string to_csv() const {
        std::string out = "n,lift_dist,sup_dist,K_max,verdict\n";
        for (const auto& r : rows) {
            out += std::to_string(r.n) + ',' + detail::fmt(r.lift_dist) + ',' +
                   detail::fmt(r.sup_dist) + ',' + detail::fmt(r.k_max) + ',' +
                   to_string(r.verdict) + '\n';
        }
        return out;
    }

    ordered_json to_json() const {
        ordered_json j;
        j["experiment"] = "incompleteness";
        j["parameters"] = {{"n_max", n_max},          {"nodes", cfg.nodes},
                           {"r_max", cfg.r_max},      {"flatness_floor", cfg.flatness_floor},
                           {"pv_epsilon", pv.epsilon}, {"pv_nodes", pv.nodes},
                           {"mesh", mesh},            {"k_radius", k_radius},
                           {"k_angles", k_angles}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n},
                                 {"lift_dist", r.lift_dist},
                                 {"sup_dist", r.sup_dist},
                                 {"k_max", r.k_max},
                                 {"verdict", to_string(r.verdict)}});
        j["assertions"] = {{"sup_dist_le_lift_dist", chain_ok}, {"all_members", verdicts_ok}};
        j["ok"] = ok();
        return j;
    }
};

inline IncompletenessReport run_incompleteness(int n_max, const QuadratureConfig& cfg, const PVConfig& pv) {
    if (n_max < 0 || n_max > 12)
        throw std::invalid_argument("run_incompleteness: n_max must lie in [0,12]");
    IncompletenessReport rep;
    rep.n_max = n_max;
    rep.cfg = cfg;
    rep.pv = pv;

    QuadratureConfig field_cfg = cfg;
    field_cfg.nodes = std::max(cfg.nodes, recommended_nodes(rep.k_radius));
    field_cfg.r_max = std::min(0.9995, std::max(field_cfg.r_max, rep.k_radius + 2e-3));

    const LiftFunction limit = phi_cantor();
    HarmonicExtension h_limit(BoundaryMap{limit, false}, cfg);

    const double k_radii[1] = {rep.k_radius};
    for (int n = 0; n <= n_max; ++n) {
        IncompletenessRow row;
        row.n = n;
        const LiftFunction lift = phi_n(n);

        double lift_dist = 0.0;
        for (int i = 0; i <= rep.mesh; ++i) {
            const double t = two_pi * static_cast<double>(i) / static_cast<double>(rep.mesh);
            lift_dist = std::max(lift_dist, std::abs(lift(t) - limit(t)));
        }
        row.lift_dist = lift_dist;

        HarmonicExtension h(BoundaryMap{lift, false}, cfg);
        row.sup_dist = sup_distance(h, h_limit, rep.mesh).chordal;

        HarmonicExtension h_field(BoundaryMap{lift, false}, field_cfg);
        row.k_max = dilatation_field(h_field, k_radii, rep.k_angles).k_max;

        row.verdict = check_membership(lift, cfg, pv).verdict;

        rep.chain_ok = rep.chain_ok && row.sup_dist <= row.lift_dist + 1e-6;
        rep.verdicts_ok = rep.verdicts_ok && row.verdict == Verdict::member;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// example3 experiment: membership report plus dilatation growth table
// ---------------------------------------------------------------------------

struct DilatationRow {
    double r = 0.0, theta = 0.0;
    double re = 0.0, im = 0.0; // image point under the extension
    double mu_abs = 0.0;
    double K = 0.0;
};

struct Example3Report {
    QuadratureConfig cfg;
    MembershipReport membership;
    std::vector<double> radii{0.5, 0.9, 0.99};
    int angles = 512;
    std::vector<DilatationRow> table;
    std::vector<double> max_mu_per_radius;
    double unit_value_third = 0.0;   // boundary map at x = 1/3 (expect 2/3)
    double unit_value_quarter3 = 0.0; // boundary map at x = 3/4 (expect 2/3)
    bool verdict_ok = false;
    bool growth_ok = false;
    bool values_ok = false;

    bool ok() const { return verdict_ok && growth_ok && values_ok; }

    std::string to_csv() const {
        std::string out = "r,theta,re,im,mu_abs,K\n";
        for (const auto& p : table)
            out += detail::fmt(p.r) + ',' + detail::fmt(p.theta) + ',' + detail::fmt(p.re) + ',' +
                   detail::fmt(p.im) + ',' + detail::fmt(p.mu_abs) + ',' + detail::fmt(p.K) + '\n';
        return out;
    }

    ordered_json to_json() const {
        ordered_json j;
        j["experiment"] = "example3";
        j["parameters"] = {{"nodes", cfg.nodes},
                           {"r_max", cfg.r_max},
                           {"flatness_floor", cfg.flatness_floor},
                           {"radii", radii},
                           {"angles", angles}};
        j["membership"] = {{"verdict", to_string(membership.verdict)},
                           {"reason", membership.reason},
                           {"strictly_increasing", membership.strictly_increasing},
                           {"bilipschitz_upper", membership.bilipschitz_upper},
                           {"bilipschitz_lower", membership.bilipschitz_lower},
                           {"total_increase", membership.total_increase},
                           {"hilbert_sup", membership.hilbert_sup_estimate}};
        j["max_mu_per_radius"] = max_mu_per_radius;
        j["boundary_values"] = {{"x_one_third", unit_value_third}, {"x_three_quarters", unit_value_quarter3}};
        j["assertions"] = {{"non_member", verdict_ok},
                           {"mu_growth", growth_ok},
                           {"flat_segment_values", values_ok}};
        j["ok"] = ok();
        j["rows"] = ordered_json::array();
        for (const auto& p : table)
            j["rows"].push_back({{"r", p.r},
                                 {"theta", p.theta},
                                 {"re", p.re},
                                 {"im", p.im},
                                 {"mu_abs", p.mu_abs},
                                 {"K", p.K}});
        return j;
    }
};

inline Example3Report run_example3(const QuadratureConfig& cfg) {
    Example3Report rep;
    rep.cfg = cfg;
    const LiftFunction lift = example3_lift();
    rep.membership = check_membership(lift, cfg);
    rep.verdict_ok = rep.membership.verdict == Verdict::non_member &&
                     rep.membership.bilipschitz_lower <= cfg.flatness_floor;

    QuadratureConfig field_cfg = cfg;
    field_cfg.nodes = std::max(cfg.nodes, recommended_nodes(rep.radii.back()));
    field_cfg.r_max = std::min(0.9995, std::max(field_cfg.r_max, rep.radii.back() + 2e-3));
    HarmonicExtension h(example3_boundary(), field_cfg);
    const auto field = dilatation_field(h, rep.radii, rep.angles);
    rep.max_mu_per_radius = field.max_mu_per_radius;
    rep.growth_ok = rep.max_mu_per_radius.back() > rep.max_mu_per_radius.front();
    for (std::size_t i = 0; i + 1 < rep.max_mu_per_radius.size(); ++i)
        rep.growth_ok = rep.growth_ok && rep.max_mu_per_radius[i + 1] >= rep.max_mu_per_radius[i] - 1e-3;

    for (const auto& p : field.points) {
        DilatationRow row;
        row.r = std::abs(p.z);
        row.theta = std::arg(p.z) < 0.0 ? std::arg(p.z) + two_pi : std::arg(p.z);
        const auto w = h.extend(p.z);
        row.re = w.real();
        row.im = w.imag();
        row.mu_abs = p.degenerate ? std::numeric_limits<double>::quiet_NaN() : std::abs(p.mu);
        row.K = p.K;
        rep.table.push_back(row);
    }

    rep.unit_value_third = lift.eval(two_pi / 3.0) / two_pi;
    rep.unit_value_quarter3 = lift.eval(1.5 * std::numbers::pi) / two_pi;
    rep.values_ok = std::abs(rep.unit_value_third - 2.0 / 3.0) <= 1e-15 &&
                    std::abs(rep.unit_value_quarter3 - 2.0 / 3.0) <= 1e-15;
    return rep;
}

// ---------------------------------------------------------------------------
// convexity experiment: random convex combinations of member lifts
// ---------------------------------------------------------------------------

struct ConvexityRow {
    int trial = 0;
    std::string first, second;
    double lambda = 0.0;
    Verdict verdict = Verdict::inconclusive;
    double l_plus_combined = 0.0;
    double l_plus_bound = 0.0; // max of the inputs' upper estimates
    double sup_pt_dist = 0.0;  // interior grid sup |PT1 - PT2|
    double lift_dist = 0.0;    // boundary max |phi1 - phi2|
    bool ok = false;
};

struct ConvexityReport {
    int trials = 0;
    std::uint32_t seed = 0;
    QuadratureConfig cfg;
    PVConfig pv;
    std::vector<ConvexityRow> rows;
    bool all_ok = true;

    bool ok() const { return all_ok; }

    std::string to_csv() const {
        std::string out = "trial,first,second,lambda,verdict,L_plus_combined,L_plus_bound,sup_pt_dist,lift_dist,ok\n";
        for (const auto& r : rows)
            out += std::to_string(r.trial) + ',' + r.first + ',' + r.second + ',' +
                   detail::fmt(r.lambda) + ',' + to_string(r.verdict) + ',' +
                   detail::fmt(r.l_plus_combined) + ',' + detail::fmt(r.l_plus_bound) + ',' +
                   detail::fmt(r.sup_pt_dist) + ',' + detail::fmt(r.lift_dist) + ',' +
                   (r.ok ? "1" : "0") + '\n';
        return out;
    }

    ordered_json to_json() const {
        ordered_json j;
        j["experiment"] = "convexity";
        j["parameters"] = {{"trials", trials},
                           {"seed", seed},
                           {"nodes", cfg.nodes},
                           {"r_max", cfg.r_max},
                           {"pv_epsilon", pv.epsilon},
                           {"pv_nodes", pv.nodes}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"trial", r.trial},
                                 {"first", r.first},
                                 {"second", r.second},
                                 {"lambda", r.lambda},
                                 {"verdict", to_string(r.verdict)},
                                 {"L_plus_combined", r.l_plus_combined},
                                 {"L_plus_bound", r.l_plus_bound},
                                 {"sup_pt_dist", r.sup_pt_dist},
                                 {"lift_dist", r.lift_dist},
                                 {"ok", r.ok}});
        j["ok"] = all_ok;
        return j;
    }
};

inline std::vector<NamedLift> convexity_family() {
    std::vector<NamedLift> family;
    family.push_back({"identity", identity_lift(), false});
    for (int n = 1; n <= 4; ++n) family.push_back({"phi_n:" + std::to_string(n), phi_n(n), false});
    family.push_back({"mobius:0.3", mobius_trace_lift(0.3), false});
    family.push_back({"mobius:-0.2+0.25i", mobius_trace_lift({-0.2, 0.25}), false});
    family.push_back({"mobius:0.45i", mobius_trace_lift({0.0, 0.45}), false});
    return family;
}

inline ConvexityReport run_convexity(int trials, std::uint32_t seed, const QuadratureConfig& cfg,
                                     const PVConfig& pv) {
    if (trials < 1) throw std::invalid_argument("run_convexity: trials must be >= 1");
    ConvexityReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.cfg = cfg;
    rep.pv = pv;

    const auto family = convexity_family();
    std::vector<HarmonicExtension> extensions;
    extensions.reserve(family.size());
    for (const auto& f : family) extensions.emplace_back(BoundaryMap{f.lift, false}, cfg);

    // interior evaluation grid for the contraction bound
    std::vector<std::complex<double>> grid;
    grid.push_back({0.0, 0.0});
    for (double r : {0.3, 0.6, 0.9})
        for (int i = 0; i < 64; ++i) grid.push_back(std::polar(r, two_pi * i / 64.0));

    detail::Sampler rng(seed);
    const int lift_mesh = 4096;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t i = rng.index(family.size());
        const std::size_t j = rng.index(family.size());
        const double lambda = rng.u01();

        ConvexityRow row;
        row.trial = trial;
        row.first = family[i].name;
        row.second = family[j].name;
        row.lambda = lambda;

        const LiftFunction combo = convex_combination(family[i].lift, family[j].lift, lambda);
        row.verdict = check_membership(combo, cfg, pv).verdict;

        // same interval set for all three estimates; the convexity bound is
        // then exact interval-by-interval
        const auto intervals = detail::quotient_intervals(cfg.nodes, combo.breakpoints);
        const double up_combo = detail::quotient_extrema(combo, intervals).upper;
        const double up_1 = detail::quotient_extrema(family[i].lift, intervals).upper;
        const double up_2 = detail::quotient_extrema(family[j].lift, intervals).upper;
        row.l_plus_combined = up_combo;
        row.l_plus_bound = std::max(up_1, up_2);

        double lift_dist = 0.0;
        for (int m = 0; m <= lift_mesh; ++m) {
            const double t = two_pi * static_cast<double>(m) / static_cast<double>(lift_mesh);
            lift_dist = std::max(lift_dist, std::abs(family[i].lift(t) - family[j].lift(t)));
        }
        row.lift_dist = lift_dist;
        double sup_pt = 0.0;
        for (auto z : grid)
            sup_pt = std::max(sup_pt, std::abs(extensions[i].extend(z) - extensions[j].extend(z)));
        row.sup_pt_dist = sup_pt;

        row.ok = row.verdict == Verdict::member &&
                 row.l_plus_combined <= row.l_plus_bound + 1e-9 &&
                 row.sup_pt_dist <= row.lift_dist + 1e-6;
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// hilbert demo: conjugate-pair table, linearity residual, kernel variants
// ---------------------------------------------------------------------------

struct HilbertDemoReport {
    PVConfig pv;
    struct Row {
        int n = 0;
        double err_cos = 0.0; // H(cos n.) vs sin(n.)
        double err_sin = 0.0; // H(sin n.) vs -cos(n.)
    };
    std::vector<Row> rows;
    double linearity_residual = 0.0;
    double variant_difference = 0.0; // tan-kernel minus t-kernel result
    double variant_drift = 0.0;      // relative change of the difference under eps halving
    bool conjugate_ok = false;
    bool linearity_ok = false;
    bool variant_ok = false;

    bool ok() const { return conjugate_ok && linearity_ok && variant_ok; }

    std::string to_csv() const {
        std::string out = "n,err_cos,err_sin\n";
        for (const auto& r : rows)
            out += std::to_string(r.n) + ',' + detail::fmt(r.err_cos) + ',' + detail::fmt(r.err_sin) + '\n';
        return out;
    }

    ordered_json to_json() const {
        ordered_json j;
        j["experiment"] = "hilbert-demo";
        j["parameters"] = {{"pv_epsilon", pv.epsilon}, {"pv_nodes", pv.nodes}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n}, {"err_cos", r.err_cos}, {"err_sin", r.err_sin}});
        j["linearity_residual"] = linearity_residual;
        j["variant_difference"] = variant_difference;
        j["variant_drift"] = variant_drift;
        j["assertions"] = {{"conjugate_pairs", conjugate_ok},
                           {"linearity", linearity_ok},
                           {"variant_stability", variant_ok}};
        j["ok"] = ok();
        return j;
    }
};

inline HilbertDemoReport run_hilbert_demo(const PVConfig& pv) {
    HilbertDemoReport rep;
    rep.pv = pv;

    for (int n = 1; n <= 8; ++n) {
        HilbertDemoReport::Row row;
        row.n = n;
        for (int i = 0; i < 64; ++i) {
            const double x = two_pi * static_cast<double>(i) / 64.0;
            const double hc = hilbert_at([n](double u) { return std::cos(n * u); }, x, pv);
            const double hs = hilbert_at([n](double u) { return std::sin(n * u); }, x, pv);
            row.err_cos = std::max(row.err_cos, std::abs(hc - std::sin(n * x)));
            row.err_sin = std::max(row.err_sin, std::abs(hs + std::cos(n * x)));
        }
        rep.rows.push_back(row);
    }
    rep.conjugate_ok = true;
    for (const auto& r : rep.rows)
        rep.conjugate_ok = rep.conjugate_ok && r.err_cos <= 1e-5 && r.err_sin <= 1e-5;

    auto g1 = [](double u) { return std::cos(2.0 * u); };
    auto g2 = [](double u) { return std::sin(3.0 * u) + 0.5 * std::cos(u); };
    const double lambda = 0.37;
    auto mix = [&](double u) { return lambda * g1(u) + (1.0 - lambda) * g2(u); };
    for (int i = 0; i < 16; ++i) {
        const double x = two_pi * static_cast<double>(i) / 16.0;
        const double lhs = hilbert_at(mix, x, pv);
        const double rhs = lambda * hilbert_at(g1, x, pv) + (1.0 - lambda) * hilbert_at(g2, x, pv);
        rep.linearity_residual = std::max(rep.linearity_residual, std::abs(lhs - rhs));
    }
    rep.linearity_ok = rep.linearity_residual <= 1e-9;

    const LiftFunction lift = smoothstep_lift();
    auto g = [&lift](double u) { return lift.derivative_periodic(u); };
    PVConfig tan_cfg = pv, t_cfg = pv;
    t_cfg.kernel = PVKernel::plain_t;
    const double d1 = hilbert_at(g, 0.7, tan_cfg) - hilbert_at(g, 0.7, t_cfg);
    tan_cfg.epsilon *= 0.5;
    t_cfg.epsilon *= 0.5;
    const double d2 = hilbert_at(g, 0.7, tan_cfg) - hilbert_at(g, 0.7, t_cfg);
    rep.variant_difference = d1;
    rep.variant_drift = std::abs(d2 - d1) / std::max(std::abs(d1), 1e-12);
    rep.variant_ok = std::isfinite(d1) && rep.variant_drift < 0.01;
    return rep;
}

// ---------------------------------------------------------------------------
// render experiment: figure data plus the range/roundness assertions
// ---------------------------------------------------------------------------

struct RenderReport {
    std::string boundary;
    QuadratureConfig cfg;
    RenderFigure figure;
    double max_abs = 0.0;            // max |w| over image polylines
    double circle_deviation = -1.0;  // identity only: max radial deviation
    bool range_ok = false;
    bool roundness_ok = true;

    bool ok() const { return range_ok && roundness_ok; }
};

inline RenderReport run_render(const std::string& boundary_name, const QuadratureConfig& cfg) {
    RenderReport rep;
    rep.boundary = boundary_name;
    const NamedLift named = parse_boundary(boundary_name);

    QuadratureConfig render_cfg = cfg;
    render_cfg.nodes = std::max(cfg.nodes, recommended_nodes(cfg.r_max));
    rep.cfg = render_cfg;
    HarmonicExtension h(BoundaryMap{named.lift, named.weak_only}, render_cfg);
    rep.figure = render_figure(h);

    for (const auto& curve : rep.figure.image)
        for (auto w : curve.points) rep.max_abs = std::max(rep.max_abs, std::abs(w));
    rep.range_ok = rep.max_abs <= 1.0 + 1e-6;

    if (boundary_name == "identity") {
        rep.circle_deviation = 0.0;
        std::size_t idx = 0;
        for (int k = 1; k <= 9; ++k, ++idx) {
            const double r = 0.1 * static_cast<double>(k);
            for (auto w : rep.figure.image[idx].points)
                rep.circle_deviation = std::max(rep.circle_deviation, std::abs(std::abs(w) - r));
        }
        rep.roundness_ok = rep.circle_deviation <= 1e-6;
    }
    return rep;
}

} // namespace hqdisk
