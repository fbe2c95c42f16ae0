// Image of concentric circles, radial rays and a Euclidean grid under a
// harmonic extension, with an SVG writer for side-by-side preimage/image.
#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqdisk/poisson.hpp"

namespace hqdisk {

struct Polyline {
    std::vector<std::complex<double>> points;
    std::string kind; // "circle" | "ray" | "grid"
};

struct RenderFigure {
    std::vector<Polyline> preimage;
    std::vector<Polyline> image;
};

namespace detail {

inline std::vector<Polyline> source_curves(double r_clip, int samples) {
    std::vector<Polyline> curves;
    // concentric circles
    for (int k = 1; k <= 9; ++k) {
        const double r = 0.1 * static_cast<double>(k);
        Polyline p;
        p.kind = "circle";
        p.points.reserve(static_cast<std::size_t>(samples) + 1);
        for (int i = 0; i <= samples; ++i) {
            const double th = two_pi * static_cast<double>(i) / static_cast<double>(samples);
            p.points.push_back(std::polar(r, th));
        }
        curves.push_back(std::move(p));
    }
    // radial rays
    for (int k = 0; k < 24; ++k) {
        const double th = two_pi * static_cast<double>(k) / 24.0;
        Polyline p;
        p.kind = "ray";
        p.points.reserve(static_cast<std::size_t>(samples) + 1);
        for (int i = 0; i <= samples; ++i)
            p.points.push_back(std::polar(r_clip * static_cast<double>(i) / static_cast<double>(samples), th));
        curves.push_back(std::move(p));
    }
    // Euclidean grid, 21 x 21 lines clipped to the disk
    for (int axis = 0; axis < 2; ++axis) {
        for (int k = 0; k <= 20; ++k) {
            const double c = -1.0 + 0.1 * static_cast<double>(k);
            if (std::abs(c) >= r_clip) continue;
            const double s = std::sqrt(r_clip * r_clip - c * c);
            if (s < 1e-6) continue;
            Polyline p;
            p.kind = "grid";
            p.points.reserve(static_cast<std::size_t>(samples) + 1);
            for (int i = 0; i <= samples; ++i) {
                const double u = -s + 2.0 * s * static_cast<double>(i) / static_cast<double>(samples);
                p.points.push_back(axis == 0 ? std::complex<double>(c, u) : std::complex<double>(u, c));
            }
            curves.push_back(std::move(p));
        }
    }
    return curves;
}

} // namespace detail

inline RenderFigure render_figure(const HarmonicExtension& h, int samples = 384) {
    if (samples < 256) throw std::invalid_argument("render_figure: polylines need >= 256 samples");
    RenderFigure fig;
    fig.preimage = detail::source_curves(h.config().r_max, samples);
    fig.image.reserve(fig.preimage.size());
    for (const auto& curve : fig.preimage) {
        Polyline mapped;
        mapped.kind = curve.kind;
        mapped.points.reserve(curve.points.size());
        for (auto z : curve.points) mapped.points.push_back(h.extend(z));
        fig.image.push_back(std::move(mapped));
    }
    return fig;
}

namespace detail {

inline const char* stroke_for(const std::string& kind) {
    if (kind == "circle") return "#1f77b4";
    if (kind == "ray") return "#d62728";
    return "#999999";
}

inline void append_panel(std::string& out, const std::vector<Polyline>& curves, double cx, double cy,
                         double scale) {
    char buf[64];
    for (const auto& c : curves) {
        out += "  <polyline fill=\"none\" stroke=\"";
        out += stroke_for(c.kind);
        out += "\" stroke-width=\"0.6\" points=\"";
        for (auto w : c.points) {
            std::snprintf(buf, sizeof buf, "%.4f,%.4f ", cx + scale * w.real(), cy - scale * w.imag());
            out += buf;
        }
        out += "\"/>\n";
    }
}

} // namespace detail

inline std::string svg_document(const RenderFigure& fig) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"460\" height=\"240\" "
           "viewBox=\"0 0 460 240\">\n";
    out += "  <circle cx=\"115\" cy=\"120\" r=\"100\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.8\"/>\n";
    out += "  <circle cx=\"345\" cy=\"120\" r=\"100\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.8\"/>\n";
    detail::append_panel(out, fig.preimage, 115.0, 120.0, 100.0);
    detail::append_panel(out, fig.image, 345.0, 120.0, 100.0);
    out += "</svg>\n";
    return out;
}

inline void write_svg(const RenderFigure& fig, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_svg: cannot open " + path);
    os << svg_document(fig);
}

} // namespace hqdisk
