#pragma once

// Cell complexes over R^(n-1), n = 2 or 3: open intervals (dim 1) or open
// convex polygons (dim 2) with shared facets discovered by exact adjacency.
// Facets are maximal common closed pieces of cell boundaries; a facet knows
// the cells on its two sides (kExterior when the complement is there).

#include "steiner/geometry.hpp"
#include "steiner/number.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace steiner {

inline constexpr int kExterior = -1;

template <class S>
struct Cell {
    Polygon<S> poly;  // dim 1: {(a,0),(b,0)}; dim 2: CCW convex polygon
    S measure{};      // interval length or polygon area
    Pt<S> centroid{};
};

template <class S>
struct Facet {
    Pt<S> a{}, b{};            // endpoints; a == b for point facets
    int left = kExterior;      // cell on the left of a->b (dim 1: z < a)
    int right = kExterior;     // cell on the right (dim 1: z > a)
    S length_sq{};             // 0 for points
    Amount<S> measure;         // H^(n-2): 1 for points, length for segments
    bool is_point() const { return length_sq == 0; }
    bool interior() const { return left != kExterior && right != kExterior; }
    int other_side(int c) const { return c == left ? right : left; }
};

template <class S>
struct BaseCellComplex {
    int dim = 1;
    std::vector<Cell<S>> cells;
    std::vector<Facet<S>> facets;
    std::vector<std::vector<int>> cell_facets;  // incident facet ids per cell

    int num_cells() const { return static_cast<int>(cells.size()); }
    int num_facets() const { return static_cast<int>(facets.size()); }
};

template <class S>
using ComplexPtr = std::shared_ptr<const BaseCellComplex<S>>;

namespace detail {

template <class S>
void index_facets(BaseCellComplex<S>& cx) {
    std::sort(cx.facets.begin(), cx.facets.end(), [](const Facet<S>& f, const Facet<S>& g) {
        Pt<S> mf = pt<S>((f.a[0] + f.b[0]) / S(2), (f.a[1] + f.b[1]) / S(2));
        Pt<S> mg = pt<S>((g.a[0] + g.b[0]) / S(2), (g.a[1] + g.b[1]) / S(2));
        if (!(mf[0] == mg[0] && mf[1] == mg[1])) return pt_lex_lt(mf, mg);
        return pt_lex_lt(f.a, g.a);
    });
    cx.cell_facets.assign(cx.cells.size(), {});
    for (int i = 0; i < cx.num_facets(); ++i) {
        const auto& f = cx.facets[i];
        if (f.left != kExterior) cx.cell_facets[f.left].push_back(i);
        if (f.right != kExterior && f.right != f.left) cx.cell_facets[f.right].push_back(i);
    }
}

}  // namespace detail

// dim 1: cells are open intervals (a,b).
template <class S>
ComplexPtr<S> build_complex_1d(const std::vector<std::pair<S, S>>& intervals) {
    auto cx = std::make_shared<BaseCellComplex<S>>();
    cx->dim = 1;
    if (intervals.empty()) throw Error("complex needs at least one cell");
    for (const auto& [a, b] : intervals) {
        if (!(a < b) || mode_traits<S>::is_zero(b - a)) throw Error("degenerate interval cell");
        Cell<S> c;
        c.poly = {pt<S>(a, S(0)), pt<S>(b, S(0))};
        c.measure = b - a;
        c.centroid = pt<S>((a + b) / S(2), S(0));
        cx->cells.push_back(std::move(c));
    }
    // overlap check
    std::vector<int> order(cx->cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return cx->cells[i].poly[0][0] < cx->cells[j].poly[0][0];
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const S& b_prev = cx->cells[order[k]].poly[1][0];
        const S& a_next = cx->cells[order[k + 1]].poly[0][0];
        if (mode_traits<S>::lt(a_next, b_prev)) throw Error("overlapping cells");
    }
    // facets at all endpoints; merge coincident ones
    std::vector<std::pair<S, std::pair<int, int>>> pts;  // z -> (left cell, right cell)
    auto find = [&](const S& z) -> std::pair<int, int>* {
        for (auto& p : pts)
            if (mode_traits<S>::eq(p.first, z)) return &p.second;
        pts.push_back({z, {kExterior, kExterior}});
        return &pts.back().second;
    };
    for (int i = 0; i < cx->num_cells(); ++i) {
        find(cx->cells[i].poly[0][0])->second = i;  // cell starts here: it is on the right
        find(cx->cells[i].poly[1][0])->first = i;   // cell ends here: it is on the left
    }
    for (const auto& [z, lr] : pts) {
        Facet<S> f;
        f.a = f.b = pt<S>(z, S(0));
        f.left = lr.first;
        f.right = lr.second;
        f.length_sq = S(0);
        f.measure = Amount<S>(S(1));
        cx->facets.push_back(std::move(f));
    }
    detail::index_facets(*cx);
    return cx;
}

// dim 2: cells are open convex polygons, counterclockwise.
template <class S>
ComplexPtr<S> build_complex_2d(const std::vector<Polygon<S>>& polys) {
    auto cx = std::make_shared<BaseCellComplex<S>>();
    cx->dim = 2;
    if (polys.empty()) throw Error("complex needs at least one cell");
    for (const auto& raw : polys) {
        Cell<S> c;
        c.poly = canonicalize_convex(raw);
        c.measure = polygon_area(c.poly);
        c.centroid = polygon_centroid(c.poly);
        cx->cells.push_back(std::move(c));
    }
    for (int i = 0; i < cx->num_cells(); ++i)
        for (int j = i + 1; j < cx->num_cells(); ++j)
            if (convex_interiors_intersect(cx->cells[i].poly, cx->cells[j].poly))
                throw Error("overlapping cells");

    // All directed boundary edges; the owning cell sits on the left.
    struct Edge {
        Pt<S> p, q;
        int cell;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < cx->num_cells(); ++i) {
        const auto& poly = cx->cells[i].poly;
        for (std::size_t k = 0; k < poly.size(); ++k)
            edges.push_back({poly[k], poly[(k + 1) % poly.size()], i});
    }

    // Group edges into shared lines (small inputs: quadratic scan is fine).
    auto collinear = [](const Edge& e, const Edge& f) {
        Pt<S> d = e.q - e.p;
        return mode_traits<S>::is_zero(cross(d, f.q - f.p)) &&
               mode_traits<S>::is_zero(cross(d, f.p - e.p));
    };
    std::vector<int> line_of(edges.size(), -1);
    int nlines = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (line_of[i] >= 0) continue;
        line_of[i] = nlines;
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (line_of[j] < 0 && collinear(edges[i], edges[j])) line_of[j] = nlines;
        ++nlines;
    }

    for (int L = 0; L < nlines; ++L) {
        std::vector<std::size_t> group;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (line_of[i] == L) group.push_back(i);
        // canonical direction: lexicographically positive
        Pt<S> d = edges[group[0]].q - edges[group[0]].p;
        if (d[0] < 0 || (mode_traits<S>::is_zero(d[0]) && d[1] < 0)) d = S(-1) * d;
        const Pt<S> origin = edges[group[0]].p;
        auto param = [&](const Pt<S>& z) { return dot(d, z - origin); };

        // collect split parameters with their exact points
        std::vector<std::pair<S, Pt<S>>> stations;
        auto add_station = [&](const Pt<S>& z) {
            S t = param(z);
            for (auto& s : stations)
                if (mode_traits<S>::eq(s.first, t)) return;
            stations.push_back({t, z});
        };
        struct Span {
            S t0, t1;
            int cell;
            bool along;  // traversal along +d
        };
        std::vector<Span> spans;
        for (std::size_t ei : group) {
            const Edge& e = edges[ei];
            add_station(e.p);
            add_station(e.q);
            S tp = param(e.p), tq = param(e.q);
            bool along = tp < tq;
            spans.push_back({std::min(tp, tq), std::max(tp, tq), e.cell, along});
        }
        std::sort(stations.begin(), stations.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });

        for (std::size_t k = 0; k + 1 < stations.size(); ++k) {
            const S& t0 = stations[k].first;
            const S& t1 = stations[k + 1].first;
            int left = kExterior, right = kExterior;
            bool covered = false;
            for (const Span& s : spans) {
                if (mode_traits<S>::leq(s.t0, t0) && mode_traits<S>::leq(t1, s.t1)) {
                    covered = true;
                    int& slot = s.along ? left : right;
                    if (slot != kExterior && slot != s.cell) throw Error("overlapping cells");
                    slot = s.cell;
                }
            }
            if (!covered) continue;
            Facet<S> f;
            f.a = stations[k].second;
            f.b = stations[k + 1].second;
            f.left = left;
            f.right = right;
            f.length_sq = dist_sq(f.a, f.b);
            f.measure = sqrt_amount(f.length_sq);
            cx->facets.push_back(std::move(f));
        }
    }
    detail::index_facets(*cx);
    return cx;
}

// Boundary measure of one cell (perimeter of the polygon / count of interval
// endpoints), used by the coverage invariant checks.
template <class S>
Amount<S> cell_boundary_measure(const BaseCellComplex<S>& cx, int cell) {
    const auto& c = cx.cells[cell];
    if (cx.dim == 1) return Amount<S>(S(2));
    Amount<S> acc;
    for (std::size_t k = 0; k < c.poly.size(); ++k)
        acc += sqrt_amount(dist_sq(c.poly[k], c.poly[(k + 1) % c.poly.size()]));
    return acc;
}

}  // namespace steiner
