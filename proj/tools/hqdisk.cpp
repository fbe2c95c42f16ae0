// hqdisk: experiments on harmonic extensions of circle maps.
// Subcommands: render, incompleteness, example3, convexity, hilbert-demo.
// Every subcommand exits nonzero iff one of its asserted inequalities fails.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hqdisk/experiments.hpp"

namespace {

struct CommonOpts {
    int nodes = 2048;
    double r_max = 0.99;
    double eps = 1e-6;
    std::string out;
    std::string format = "csv";
};

hqdisk::QuadratureConfig make_cfg(const CommonOpts& o) {
    hqdisk::QuadratureConfig cfg;
    cfg.nodes = o.nodes;
    cfg.r_max = o.r_max;
    cfg.validate();
    return cfg;
}

hqdisk::PVConfig make_pv(const CommonOpts& o, int min_nodes) {
    hqdisk::PVConfig pv;
    pv.epsilon = o.eps;
    pv.nodes = std::max(o.nodes, min_nodes);
    pv.validate();
    return pv;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << bytes;
}

template <typename Report>
void emit(const Report& rep, const CommonOpts& o, const std::string& default_stem) {
    const std::string path =
        o.out.empty() ? default_stem + (o.format == "json" ? ".json" : ".csv") : o.out;
    if (o.format == "json")
        write_file(path, rep.to_json().dump(2) + "\n");
    else
        write_file(path, rep.to_csv());
    std::cout << "wrote " << path << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    cmd->add_option("--nodes", o.nodes, "quadrature nodes (power of two >= 128)");
    cmd->add_option("--rmax", o.r_max, "largest certified interior radius");
    cmd->add_option("--eps", o.eps, "principal-value exclusion half-width");
    cmd->add_option("--out", o.out, "output path");
    if (with_format)
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical experiments on harmonic extensions of circle homeomorphisms"};
    app.require_subcommand(1);

    CommonOpts render_o;
    std::string boundary = "identity";
    auto* render = app.add_subcommand("render", "SVG image of circles, rays and a grid under the extension");
    render->add_option("boundary", boundary,
                       "boundary map: identity|example3|phi_n:<n>|phi_cantor|mobius:<a>");
    add_common(render, render_o, false);
    std::string render_format = "svg";
    render->add_option("--format", render_format, "output format")->check(CLI::IsMember({"svg"}));

    CommonOpts inc_o;
    int n_max = 6;
    auto* inc = app.add_subcommand("incompleteness", "distances and distortion of the phi_n sequence");
    inc->add_option("--nmax", n_max, "largest sequence index (0..12)");
    add_common(inc, inc_o);

    CommonOpts ex3_o;
    auto* ex3 = app.add_subcommand("example3", "membership and dilatation table of the flat-arc example");
    add_common(ex3, ex3_o);

    CommonOpts cvx_o;
    int trials = 100;
    std::uint32_t seed = 42;
    auto* cvx = app.add_subcommand("convexity", "random convex combinations of member lifts");
    cvx->add_option("--trials", trials, "number of sampled pairs");
    cvx->add_option("--seed", seed, "random seed");
    add_common(cvx, cvx_o);

    CommonOpts hd_o;
    auto* hd = app.add_subcommand("hilbert-demo", "conjugate pairs, linearity and kernel variants");
    add_common(hd, hd_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (render->parsed()) {
            const auto rep = hqdisk::run_render(boundary, make_cfg(render_o));
            const std::string path = render_o.out.empty() ? "hqdisk_render.svg" : render_o.out;
            hqdisk::write_svg(rep.figure, path);
            std::printf("wrote %s  (max|w| = %.9f%s)\n", path.c_str(), rep.max_abs,
                        rep.circle_deviation >= 0.0
                            ? (", circle deviation = " + std::to_string(rep.circle_deviation)).c_str()
                            : "");
            if (!rep.ok()) {
                std::fprintf(stderr, "render assertion failed: %s\n",
                             rep.range_ok ? "identity circles not round" : "image left the closed disk");
                return 1;
            }
            return 0;
        }
        if (inc->parsed()) {
            const auto rep = hqdisk::run_incompleteness(n_max, make_cfg(inc_o), make_pv(inc_o, 1024));
            emit(rep, inc_o, "hqdisk_incompleteness");
            for (const auto& r : rep.rows)
                std::printf("n=%d  lift_dist=%.6e  sup_dist=%.6e  K_max=%.4f  %s\n", r.n, r.lift_dist,
                            r.sup_dist, r.k_max, hqdisk::to_string(r.verdict));
            if (!rep.ok()) {
                std::fprintf(stderr, "incompleteness assertion failed: %s\n",
                             rep.chain_ok ? "a phi_n failed the membership check"
                                          : "sup distance exceeded the lift distance bound");
                return 1;
            }
            return 0;
        }
        if (ex3->parsed()) {
            const auto rep = hqdisk::run_example3(make_cfg(ex3_o));
            emit(rep, ex3_o, "hqdisk_example3");
            std::printf("verdict=%s  L-=%.3e  max|mu| per radius:", hqdisk::to_string(rep.membership.verdict),
                        rep.membership.bilipschitz_lower);
            for (std::size_t i = 0; i < rep.radii.size(); ++i)
                std::printf("  %.2f -> %.4f", rep.radii[i], rep.max_mu_per_radius[i]);
            std::printf("\n");
            if (!rep.ok()) {
                std::fprintf(stderr, "example3 assertion failed\n");
                return 1;
            }
            return 0;
        }
        if (cvx->parsed()) {
            const auto rep = hqdisk::run_convexity(trials, seed, make_cfg(cvx_o), make_pv(cvx_o, 1024));
            emit(rep, cvx_o, "hqdisk_convexity");
            int passed = 0;
            for (const auto& r : rep.rows) passed += r.ok ? 1 : 0;
            std::printf("%d/%d trials satisfied membership, convexity and contraction bounds\n", passed,
                        rep.trials);
            if (!rep.ok()) {
                std::fprintf(stderr, "convexity assertion failed\n");
                return 1;
            }
            return 0;
        }
        if (hd->parsed()) {
            const auto rep = hqdisk::run_hilbert_demo(make_pv(hd_o, 8192));
            emit(rep, hd_o, "hqdisk_hilbert_demo");
            std::printf("worst conjugate-pair error: %.3e, linearity residual: %.3e, variant drift: %.3e\n",
                        [&] {
                            double w = 0.0;
                            for (const auto& r : rep.rows) w = std::max({w, r.err_cos, r.err_sin});
                            return w;
                        }(),
                        rep.linearity_residual, rep.variant_drift);
            if (!rep.ok()) {
                std::fprintf(stderr, "hilbert-demo assertion failed\n");
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
