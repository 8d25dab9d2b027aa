#pragma once

// Exact planar primitives shared by the cell complex, the integrators and
// the boundary oracle. Points are array<S,2>; one-dimensional bases use the
// first coordinate and keep the second at zero, which lets most of the code
// be dimension-agnostic.

#include "steiner/number.hpp"

#include <array>
#include <vector>

namespace steiner {

template <class S>
using Pt = std::array<S, 2>;

template <class S>
Pt<S> pt(S x, S y) {
    return {std::move(x), std::move(y)};
}

template <class S>
Pt<S> operator+(const Pt<S>& a, const Pt<S>& b) {
    return {a[0] + b[0], a[1] + b[1]};
}
template <class S>
Pt<S> operator-(const Pt<S>& a, const Pt<S>& b) {
    return {a[0] - b[0], a[1] - b[1]};
}
template <class S>
Pt<S> operator*(const S& s, const Pt<S>& a) {
    return {s * a[0], s * a[1]};
}
template <class S>
S dot(const Pt<S>& a, const Pt<S>& b) {
    return a[0] * b[0] + a[1] * b[1];
}
template <class S>
S cross(const Pt<S>& a, const Pt<S>& b) {
    return a[0] * b[1] - a[1] * b[0];
}
// Orientation of c relative to the directed line a->b (positive = left).
template <class S>
S orient(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c) {
    return cross(b - a, c - a);
}
template <class S>
S dist_sq(const Pt<S>& a, const Pt<S>& b) {
    Pt<S> d = b - a;
    return dot(d, d);
}
template <class S>
bool pt_eq(const Pt<S>& a, const Pt<S>& b) {
    return mode_traits<S>::eq(a[0], b[0]) && mode_traits<S>::eq(a[1], b[1]);
}
template <class S>
bool pt_lex_lt(const Pt<S>& a, const Pt<S>& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

template <class S>
using Polygon = std::vector<Pt<S>>;

// Twice the signed area (positive for counterclockwise rings).
template <class S>
S polygon_area2(const Polygon<S>& p) {
    S a(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& u = p[i];
        const auto& v = p[(i + 1) % p.size()];
        a += cross(u, v);
    }
    return a;
}

template <class S>
S polygon_area(const Polygon<S>& p) {
    return polygon_area2(p) / S(2);
}

// Area centroid, exact for rational vertices. Requires nonzero area.
template <class S>
Pt<S> polygon_centroid(const Polygon<S>& p) {
    S a2(0), cx(0), cy(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& u = p[i];
        const auto& v = p[(i + 1) % p.size()];
        S w = cross(u, v);
        a2 += w;
        cx += w * (u[0] + v[0]);
        cy += w * (u[1] + v[1]);
    }
    if (mode_traits<S>::is_zero(a2)) throw Error("centroid of degenerate polygon");
    S d = S(3) * a2;
    return {cx / d, cy / d};
}

// Drops duplicate and collinear vertices, reorients clockwise input, and
// verifies strict convexity of what remains.
template <class S>
Polygon<S> canonicalize_convex(Polygon<S> p) {
    if (p.size() < 3) throw Error("polygon needs at least 3 vertices");
    if (polygon_area2(p) < 0) std::reverse(p.begin(), p.end());
    Polygon<S> q;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& prev = p[(i + n - 1) % n];
        const auto& cur = p[i];
        const auto& next = p[(i + 1) % n];
        if (pt_eq(cur, next)) continue;
        S o = orient(prev, cur, next);
        if (mode_traits<S>::is_zero(o)) continue;  // collinear, redundant
        if (mode_traits<S>::lt(o, S(0))) throw Error("non-convex polygon");
        q.push_back(cur);
    }
    if (q.size() < 3 || mode_traits<S>::is_zero(polygon_area2(q)))
        throw Error("degenerate polygon");
    return q;
}

// Separating-axis test on convex polygons: true iff the interiors meet.
// Touching along edges or vertices does not count.
template <class S>
bool convex_interiors_intersect(const Polygon<S>& A, const Polygon<S>& B) {
    auto separated_by_edges_of = [](const Polygon<S>& P, const Polygon<S>& Q) {
        std::size_t n = P.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = P[i];
            const auto& b = P[(i + 1) % n];
            bool all_outside = true;
            for (const auto& q : Q) {
                if (mode_traits<S>::lt(S(0), orient(a, b, q))) {  // strictly inside P's side
                    all_outside = false;
                    break;
                }
            }
            if (all_outside) return true;
        }
        return false;
    };
    return !separated_by_edges_of(A, B) && !separated_by_edges_of(B, A);
}

// Clips a convex polygon against {z : g.z + c >= 0}. Returns an empty
// polygon when nothing (of positive area) remains.
template <class S>
Polygon<S> clip_halfplane(const Polygon<S>& p, const Pt<S>& g, const S& c) {
    auto side = [&](const Pt<S>& z) { return dot(g, z) + c; };
    Polygon<S> out;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt<S>& cur = p[i];
        const Pt<S>& nxt = p[(i + 1) % n];
        S sc = side(cur), sn = side(nxt);
        if (sc >= 0) out.push_back(cur);
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            S t = sc / (sc - sn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    // drop consecutive duplicates
    Polygon<S> q;
    for (const auto& z : out) {
        if (q.empty() || !(q.back()[0] == z[0] && q.back()[1] == z[1])) q.push_back(z);
    }
    while (q.size() > 1 && q.front()[0] == q.back()[0] && q.front()[1] == q.back()[1]) q.pop_back();
    if (q.size() < 3 || mode_traits<S>::is_zero(polygon_area2(q))) return {};
    return q;
}

}  // namespace steiner
