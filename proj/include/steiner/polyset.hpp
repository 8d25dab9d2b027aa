#pragma once

// Sets of finite perimeter whose vertical sections are segments: the region
// between the graphs of two piecewise-affine bounds u1 <= u2 over a cell
// complex. Symmetrization, recentering over a barycenter field, vertical
// translations over cell partitions, and the minimal translation distance
// all live here.

#include "steiner/field.hpp"

#include <map>

namespace steiner {

template <class S>
struct GraphBounds {
    AffinePiece<S> u1, u2;
};

template <class S>
struct PolyVerticalSet {
    ComplexPtr<S> complex;
    std::vector<std::optional<GraphBounds<S>>> bounds;  // per cell

    PolyVerticalSet() = default;
    explicit PolyVerticalSet(ComplexPtr<S> cx)
        : complex(std::move(cx)), bounds(complex->num_cells()) {}

    bool on(int cell) const { return bounds[cell].has_value(); }
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < complex->num_cells(); ++i)
            if (on(i)) s.push_back(i);
        return s;
    }
};

namespace detail {

template <class S>
AffinePiece<S> affine_sub(const AffinePiece<S>& f, const AffinePiece<S>& g) {
    return {pt<S>(f.grad[0] - g.grad[0], f.grad[1] - g.grad[1]), f.off - g.off};
}
template <class S>
AffinePiece<S> affine_avg(const AffinePiece<S>& f, const AffinePiece<S>& g) {
    return {pt<S>((f.grad[0] + g.grad[0]) / S(2), (f.grad[1] + g.grad[1]) / S(2)),
            (f.off + g.off) / S(2)};
}
template <class S>
AffinePiece<S> affine_lincomb(const S& a, const AffinePiece<S>& f, const S& b,
                              const AffinePiece<S>& g) {
    return {pt<S>(a * f.grad[0] + b * g.grad[0], a * f.grad[1] + b * g.grad[1]),
            a * f.off + b * g.off};
}

template <class S>
void check_bounds_ordered(const PolyVerticalSet<S>& E) {
    for (int i = 0; i < E.complex->num_cells(); ++i) {
        if (!E.on(i)) continue;
        for (const auto& z : E.complex->cells[i].poly)
            if (mode_traits<S>::lt(E.bounds[i]->u2.eval(z), E.bounds[i]->u1.eval(z)))
                throw Error("lower bound exceeds upper bound on a cell");
    }
}

}  // namespace detail

// (v, b) of a set: slice length u2 - u1 and section midpoint (u1 + u2)/2,
// zero outside the support.
template <class S>
std::pair<PwAffineField<S>, PwAffineField<S>> slice_and_barycenter(const PolyVerticalSet<S>& E) {
    PwAffineField<S> v(E.complex), b(E.complex);
    for (int i = 0; i < E.complex->num_cells(); ++i) {
        if (!E.on(i)) continue;
        v.piece[i] = detail::affine_sub(E.bounds[i]->u2, E.bounds[i]->u1);
        b.piece[i] = detail::affine_avg(E.bounds[i]->u1, E.bounds[i]->u2);
    }
    return {std::move(v), std::move(b)};
}

template <class S>
PolyVerticalSet<S> make_between_graphs(const PwAffineField<S>& u1, const PwAffineField<S>& u2) {
    if (u1.complex != u2.complex) throw Error("mismatched complexes");
    PolyVerticalSet<S> E(u1.complex);
    for (int i = 0; i < E.complex->num_cells(); ++i) {
        bool a = u1.on(i), b = u2.on(i);
        if (a != b) throw Error("bound fields must share their support");
        if (a) E.bounds[i] = GraphBounds<S>{*u1.piece[i], *u2.piece[i]};
    }
    detail::check_bounds_ordered(E);
    return E;
}

// W[v,b]: sections of length v centered at b. b defaults to zero on cells
// where it has no piece.
template <class S>
PolyVerticalSet<S> build_W(const PwAffineField<S>& v, const PwAffineField<S>& b) {
    if (v.complex != b.complex) throw Error("mismatched complexes");
    validate_slice_field(v);
    PolyVerticalSet<S> E(v.complex);
    const AffinePiece<S> zero{pt<S>(S(0), S(0)), S(0)};
    const S half = S(1) / S(2);
    for (int i = 0; i < E.complex->num_cells(); ++i) {
        if (!v.on(i)) continue;
        const AffinePiece<S>& bp = b.on(i) ? *b.piece[i] : zero;
        E.bounds[i] = GraphBounds<S>{
            detail::affine_lincomb(S(1), bp, -half, *v.piece[i]),
            detail::affine_lincomb(S(1), bp, half, *v.piece[i]),
        };
    }
    return E;
}

template <class S>
PolyVerticalSet<S> steiner_symmetral(const PwAffineField<S>& v) {
    return build_W(v, PwAffineField<S>(v.complex));
}

// Exact volume: the integral of the slice length.
template <class S>
S volume(const PolyVerticalSet<S>& E) {
    S acc(0);
    for (int i = 0; i < E.complex->num_cells(); ++i) {
        if (!E.on(i)) continue;
        const auto& cell = E.complex->cells[i];
        AffinePiece<S> v = detail::affine_sub(E.bounds[i]->u2, E.bounds[i]->u1);
        acc += cell.measure * v.eval(cell.centroid);
    }
    return acc;
}

// Vertical translation of F[v] by a per-part constant over a cell partition.
template <class S>
PolyVerticalSet<S> translate_over_partition(const PwAffineField<S>& v,
                                            const std::map<int, int>& part_of_cell,
                                            const std::map<int, S>& offset_of_part) {
    validate_slice_field(v);
    PwAffineField<S> b(v.complex);
    for (int i = 0; i < v.complex->num_cells(); ++i) {
        if (!v.on(i)) continue;
        auto it = part_of_cell.find(i);
        if (it == part_of_cell.end()) throw Error("unassigned support cell in partition");
        auto off = offset_of_part.find(it->second);
        if (off == offset_of_part.end()) throw Error("partition part has no offset");
        b.set_constant(i, off->second);
    }
    return build_W(v, b);
}

// Equality-case construction from a continuous part v1 and a purely jumping
// part v2 (piecewise constant): the region between -lambda*v2 - v1/2 and
// v1/2 + (1-lambda)*v2.
template <class S>
PolyVerticalSet<S> prop14_construct(const PwAffineField<S>& v1, const PwAffineField<S>& v2,
                                    const S& lambda) {
    if (v1.complex != v2.complex) throw Error("mismatched complexes");
    if (lambda < S(0) || lambda > S(1)) throw Error("lambda must lie in [0,1]");
    if (mode_traits<S>::eq(lambda, S(1) / S(2)))
        throw Error("lambda = 1/2 is degenerate (yields the symmetral itself)");
    if (!v2.piecewise_constant()) throw Error("v2 must be piecewise constant");
    const auto cx = v1.complex;
    // v = v1 + v2 on the union of supports
    PwAffineField<S> v(cx);
    for (int i = 0; i < cx->num_cells(); ++i) {
        if (!v1.on(i) && !v2.on(i)) continue;
        AffinePiece<S> p{pt<S>(S(0), S(0)), S(0)};
        if (v1.on(i)) p = *v1.piece[i];
        if (v2.on(i)) p = detail::affine_lincomb(S(1), p, S(1), *v2.piece[i]);
        v.piece[i] = p;
    }
    validate_slice_field(v);
    // v1, v2 nonnegative
    for (int i = 0; i < cx->num_cells(); ++i)
        for (const auto* f : {&v1, &v2}) {
            if (!f->on(i)) continue;
            for (const auto& z : cx->cells[i].poly)
                if (mode_traits<S>::lt(f->piece[i]->eval(z), S(0)))
                    throw Error("v1, v2 must be nonnegative");
        }
    // v1 carries no jumps: both one-sided traces agree on every facet
    for (int fid = 0; fid < cx->num_facets(); ++fid) {
        FacetTrace<S> t = facet_trace(v1, fid);
        if (!mode_traits<S>::eq(t.left_a, t.right_a) || !mode_traits<S>::eq(t.left_b, t.right_b))
            throw Error("v1 must be continuous (no jumps, zero boundary values)");
    }
    // v2 not constant on {v > 0}
    {
        std::optional<S> first;
        bool varies = false;
        for (int i = 0; i < cx->num_cells(); ++i) {
            if (!v.on(i)) continue;
            S c = v2.on(i) ? v2.piece[i]->off : S(0);
            if (!first)
                first = c;
            else if (!mode_traits<S>::eq(*first, c))
                varies = true;
        }
        if (!varies) throw Error("v2 must be non-constant on the support");
    }
    PolyVerticalSet<S> E(cx);
    const AffinePiece<S> zero{pt<S>(S(0), S(0)), S(0)};
    S half = S(1) / S(2);
    for (int i = 0; i < cx->num_cells(); ++i) {
        if (!v.on(i)) continue;
        const AffinePiece<S>& p1 = v1.on(i) ? *v1.piece[i] : zero;
        const AffinePiece<S>& p2 = v2.on(i) ? *v2.piece[i] : zero;
        E.bounds[i] = GraphBounds<S>{
            detail::affine_lincomb(-lambda, p2, -half, p1),
            detail::affine_lincomb(S(1) - lambda, p2, half, p1),
        };
    }
    return E;
}

template <class S>
bool same_complex(const BaseCellComplex<S>& a, const BaseCellComplex<S>& b) {
    if (a.dim != b.dim || a.num_cells() != b.num_cells()) return false;
    for (int i = 0; i < a.num_cells(); ++i) {
        if (a.cells[i].poly.size() != b.cells[i].poly.size()) return false;
        for (std::size_t k = 0; k < a.cells[i].poly.size(); ++k)
            if (!pt_eq(a.cells[i].poly[k], b.cells[i].poly[k])) return false;
    }
    return true;
}

// True when the set's slice length matches v piece by piece.
template <class S>
bool is_v_distributed(const PolyVerticalSet<S>& E, const PwAffineField<S>& v) {
    if (E.complex != v.complex && !same_complex(*E.complex, *v.complex)) return false;
    for (int i = 0; i < E.complex->num_cells(); ++i) {
        if (E.on(i) != v.on(i)) return false;
        if (!E.on(i)) continue;
        AffinePiece<S> ve = detail::affine_sub(E.bounds[i]->u2, E.bounds[i]->u1);
        if (!mode_traits<S>::eq(ve.grad[0], v.piece[i]->grad[0]) ||
            !mode_traits<S>::eq(ve.grad[1], v.piece[i]->grad[1]) ||
            !mode_traits<S>::eq(ve.off, v.piece[i]->off))
            return false;
    }
    return true;
}

namespace detail {

// Exact integral of an affine integrand over a cell region cut out by
// affine constraints {l(z) >= 0}.
template <class S>
S region_integral(const BaseCellComplex<S>& cx, int cell,
                  const std::vector<AffinePiece<S>>& constraints, const AffinePiece<S>& f) {
    if (cx.dim == 1) {
        S lo = cx.cells[cell].poly[0][0], hi = cx.cells[cell].poly[1][0];
        for (const auto& c : constraints) {
            const S& g = c.grad[0];
            if (g == 0) {
                if (c.off < 0) return S(0);
                continue;
            }
            S root = -c.off / g;
            if (g > 0)
                lo = std::max(lo, root);
            else
                hi = std::min(hi, root);
        }
        if (!(lo < hi)) return S(0);
        Pt<S> mid = pt<S>((lo + hi) / S(2), S(0));
        return (hi - lo) * f.eval(mid);
    }
    Polygon<S> poly = cx.cells[cell].poly;
    for (const auto& c : constraints) {
        poly = clip_halfplane(poly, c.grad, c.off);
        if (poly.empty()) return S(0);
    }
    return polygon_area(poly) * f.eval(polygon_centroid(poly));
}

// Symmetric-difference volume between E and the symmetral translated to
// height t: integral of 2*min(|b - t|, v).
template <class S>
S symdiff_at(const PolyVerticalSet<S>& E, const S& t) {
    const auto& cx = *E.complex;
    S acc(0);
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        AffinePiece<S> v = affine_sub(E.bounds[i]->u2, E.bounds[i]->u1);
        AffinePiece<S> b = affine_avg(E.bounds[i]->u1, E.bounds[i]->u2);
        AffinePiece<S> bt{b.grad, b.off - t};                    // b - t
        AffinePiece<S> neg_bt{pt<S>(-b.grad[0], -b.grad[1]), t - b.off};
        AffinePiece<S> bt_minus_v = affine_sub(bt, v);
        AffinePiece<S> v_minus_bt = affine_sub(v, bt);
        AffinePiece<S> bt_plus_v = affine_lincomb(S(1), bt, S(1), v);
        AffinePiece<S> two_v = affine_lincomb(S(2), v, S(0), v);
        AffinePiece<S> two_bt = affine_lincomb(S(2), bt, S(0), bt);
        AffinePiece<S> neg_two_bt = affine_lincomb(S(-2), bt, S(0), bt);
        // 0 <= b-t <= v : 2(b-t)
        acc += region_integral(cx, i, {bt, v_minus_bt}, two_bt);
        // b-t > v : 2v
        acc += region_integral(cx, i, {bt_minus_v}, two_v);
        // -v <= b-t <= 0 : 2(t-b)
        acc += region_integral(cx, i, {neg_bt, bt_plus_v}, neg_two_bt);
        // b-t < -v : 2v
        AffinePiece<S> neg_bt_minus_v = affine_sub(neg_bt, v);
        acc += region_integral(cx, i, {neg_bt_minus_v}, two_v);
    }
    return acc;
}

}  // namespace detail

// Minimizes the symmetric-difference volume between E and t*e_n + F[v] over
// t. The objective is piecewise polynomial of degree <= 1 + dim in t with
// breakpoints at {b, b +- v} over cell vertices; pieces are reconstructed by
// exact interpolation and scanned for interior minima.
template <class S>
std::pair<S, S> min_translate_symdiff(const PolyVerticalSet<S>& E, const PwAffineField<S>& v) {
    if (!is_v_distributed(E, v)) throw Error("set is not v-distributed");
    const auto& cx = *E.complex;

    // a.e.-constant barycenter: exact translate, distance zero
    {
        std::optional<S> c;
        bool constant = true;
        for (int i = 0; i < cx.num_cells() && constant; ++i) {
            if (!E.on(i)) continue;
            AffinePiece<S> b = detail::affine_avg(E.bounds[i]->u1, E.bounds[i]->u2);
            if (!mode_traits<S>::is_zero(b.grad[0]) || !mode_traits<S>::is_zero(b.grad[1]))
                constant = false;
            else if (!c)
                c = b.off;
            else if (!mode_traits<S>::eq(*c, b.off))
                constant = false;
        }
        if (constant && c) return {*c, S(0)};
    }

    std::vector<S> cand;
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        AffinePiece<S> vv = detail::affine_sub(E.bounds[i]->u2, E.bounds[i]->u1);
        AffinePiece<S> bb = detail::affine_avg(E.bounds[i]->u1, E.bounds[i]->u2);
        for (const auto& z : cx.cells[i].poly) {
            S b = bb.eval(z), w = vv.eval(z);
            cand.push_back(b);
            cand.push_back(b - w);
            cand.push_back(b + w);
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    S best_t = cand.front();
    S best = detail::symdiff_at(E, best_t);
    auto consider = [&](const S& t) {
        S val = detail::symdiff_at(E, t);
        if (val < best) {
            best = val;
            best_t = t;
        }
    };
    for (std::size_t i = 1; i < cand.size(); ++i) consider(cand[i]);

    // Interior minima of each polynomial piece (degree <= 3): interpolate at
    // four nodes, then place the roots of the derivative.
    for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
        const S &t0 = cand[i], &t1 = cand[i + 1];
        if (!(t0 < t1)) continue;
        S h = (t1 - t0) / S(3);
        S y0 = detail::symdiff_at(E, t0);
        S y1 = detail::symdiff_at(E, t0 + h);
        S y2 = detail::symdiff_at(E, t0 + S(2) * h);
        S y3 = detail::symdiff_at(E, t1);
        // divided differences on equally spaced nodes -> cubic coefficients
        // p(s) = a3 s^3 + a2 s^2 + a1 s + a0 with s = (t - t0)/h in [0,3]
        S a0 = y0;
        S d1 = y1 - y0, d2 = y2 - y1, d3 = y3 - y2;
        S dd1 = (d2 - d1) / S(2), dd2 = (d3 - d2) / S(2);
        S a3 = (dd2 - dd1) / S(3);
        S a2 = dd1 - S(3) * a3;
        S a1 = d1 - a2 - a3;
        (void)a0;
        // p'(s) = 3 a3 s^2 + 2 a2 s + a1
        double A = 3 * to_double(a3), B = 2 * to_double(a2), C = to_double(a1);
        std::vector<double> roots;
        if (std::fabs(A) > 1e-300) {
            double disc = B * B - 4 * A * C;
            if (disc >= 0) {
                double sq = std::sqrt(disc);
                roots.push_back((-B + sq) / (2 * A));
                roots.push_back((-B - sq) / (2 * A));
            }
        } else if (std::fabs(B) > 1e-300) {
            roots.push_back(-C / B);
        }
        for (double s : roots) {
            if (s <= 0.0 || s >= 3.0) continue;
            consider(t0 + scalar_from_double<S>(s) * h);
        }
    }
    return {best_t, best};
}

}  // namespace steiner
