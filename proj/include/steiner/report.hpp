#pragma once

// Report emitters: the per-cell/per-facet CSV ledger of a perimeter
// breakdown, and static SVG figures (profile graphs for one-dimensional
// bases, shaded top views for two-dimensional ones).

#include "steiner/perimeter.hpp"
#include "steiner/scene.hpp"

#include <sstream>

namespace steiner {

template <class S>
std::string breakdown_csv(const PerimeterBreakdown<S>& br) {
    std::ostringstream os;
    os << "kind,id,measure,ac_term,jump_term,boundary_term,v_inf,v_sup,jump_essinf,crossable\n";
    auto opt = [](const std::optional<S>& x) { return x ? format_number(*x) : std::string(); };
    for (const auto& line : br.lines) {
        os << (line.is_cell ? "cell" : "facet") << ',' << line.id << ','
           << format_amount(line.measure) << ',' << format_amount(line.ac) << ','
           << format_amount(line.jump) << ',' << format_amount(line.boundary) << ','
           << opt(line.v_inf) << ',' << opt(line.v_sup) << ',' << opt(line.jump_essinf) << ','
           << (line.is_cell ? std::string() : std::string(line.crossable ? "yes" : "no")) << '\n';
    }
    return os.str();
}

namespace detail {

inline std::string svg_head(double w, double h) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    return os.str();
}

}  // namespace detail

// Profile view for dim-1 scenes: the slice-length graph, the barycenter
// graph when present, and dashed jump bars at facets. Top view for dim-2
// scenes: cells shaded by their mean slice length, facets colored by
// crossability (interior: green = crossable, red = not; exterior: blue).
template <class S>
std::string scene_svg(const Scene<S>& scene) {
    const auto& cx = *scene.complex;
    const double W = 640, H = 400, pad = 40;
    std::ostringstream os;
    os << detail::svg_head(W, H);
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    const PwAffineField<S>* v = scene.has_field("v") ? &scene.field("v") : nullptr;

    if (cx.dim == 1) {
        double xmin = 1e300, xmax = -1e300, ymin = 0, ymax = 1e-9;
        for (const auto& cell : cx.cells) {
            xmin = std::min(xmin, to_double(cell.poly[0][0]));
            xmax = std::max(xmax, to_double(cell.poly[1][0]));
        }
        auto track = [&](const PwAffineField<S>& f) {
            for (int i = 0; i < cx.num_cells(); ++i) {
                if (!f.on(i)) continue;
                for (const auto& z : cx.cells[i].poly) {
                    double y = to_double(f.piece[i]->eval(z));
                    ymin = std::min(ymin, y);
                    ymax = std::max(ymax, y);
                }
            }
        };
        for (const auto& [name, f] : scene.fields) track(f);
        if (xmax <= xmin) xmax = xmin + 1;
        auto X = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
        auto Y = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
        os << "<line x1=\"" << X(xmin) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax) << "\" y2=\""
           << Y(0) << "\" stroke=\"#888\"/>\n";
        auto draw_field = [&](const PwAffineField<S>& f, const char* color) {
            for (int i = 0; i < cx.num_cells(); ++i) {
                if (!f.on(i)) continue;
                double x0 = to_double(cx.cells[i].poly[0][0]);
                double x1 = to_double(cx.cells[i].poly[1][0]);
                double y0 = to_double(f.piece[i]->eval(cx.cells[i].poly[0]));
                double y1 = to_double(f.piece[i]->eval(cx.cells[i].poly[1]));
                os << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(x1)
                   << "\" y2=\"" << Y(y1) << "\" stroke=\"" << color
                   << "\" stroke-width=\"2\"/>\n";
            }
        };
        if (v) draw_field(*v, "#1f77b4");
        if (scene.has_field("b")) draw_field(scene.field("b"), "#d62728");
        if (v) {
            for (int fi = 0; fi < cx.num_facets(); ++fi) {
                FacetTrace<S> t = facet_trace(*v, fi);
                double lo = to_double(t.inf_fn().eval(S(0)));
                double hi = to_double(t.sup_fn().eval(S(0)));
                if (hi - lo < 1e-12) continue;
                double x = to_double(cx.facets[fi].a[0]);
                os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(lo) << "\" x2=\"" << X(x)
                   << "\" y2=\"" << Y(hi)
                   << "\" stroke=\"#1f77b4\" stroke-dasharray=\"4 3\"/>\n";
            }
        }
    } else {
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300, vmax = 1e-9;
        for (const auto& cell : cx.cells)
            for (const auto& z : cell.poly) {
                xmin = std::min(xmin, to_double(z[0]));
                xmax = std::max(xmax, to_double(z[0]));
                ymin = std::min(ymin, to_double(z[1]));
                ymax = std::max(ymax, to_double(z[1]));
            }
        auto X = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
        auto Y = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
        if (v)
            for (int i = 0; i < cx.num_cells(); ++i)
                if (v->on(i)) vmax = std::max(vmax, to_double(v->piece[i]->eval(cx.cells[i].centroid)));
        for (int i = 0; i < cx.num_cells(); ++i) {
            double shade = 0.95;
            if (v && v->on(i))
                shade = 0.95 - 0.65 * to_double(v->piece[i]->eval(cx.cells[i].centroid)) / vmax;
            int g = static_cast<int>(255 * shade);
            os << "<polygon points=\"";
            for (const auto& z : cx.cells[i].poly)
                os << X(to_double(z[0])) << ',' << Y(to_double(z[1])) << ' ';
            os << "\" fill=\"rgb(" << g << ',' << g << ",255)\" stroke=\"none\"/>\n";
        }
        for (int fi = 0; fi < cx.num_facets(); ++fi) {
            const auto& fac = cx.facets[fi];
            const char* color = "#1f77b4";
            if (v && fac.interior() && v->on(fac.left) && v->on(fac.right)) {
                FacetClass<S> cls = classify_facet(*v, fi);
                bool crossable = cls.min_zero_ae ||
                                 (cls.essinf_jump && mode_traits<S>::lt(S(0), *cls.essinf_jump));
                color = crossable ? "#2ca02c" : "#d62728";
            }
            os << "<line x1=\"" << X(to_double(fac.a[0])) << "\" y1=\"" << Y(to_double(fac.a[1]))
               << "\" x2=\"" << X(to_double(fac.b[0])) << "\" y2=\"" << Y(to_double(fac.b[1]))
               << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace steiner
