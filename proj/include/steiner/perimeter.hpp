#pragma once

// Perimeter computations, twice over. perimeter_formula evaluates the
// decomposition into a graph-area term, a jump term along facets, and a
// boundary term where the lower slice limit vanishes. oracle_perimeter
// measures the explicit polyhedral boundary (graph pieces over cells plus
// vertical walls along facets) and never touches the formula engine; the two
// must agree, and the test suite holds them to that.

#include "steiner/polyset.hpp"

#include <functional>

namespace steiner {

enum class PerimeterMode { F, W, U };

inline const char* mode_name(PerimeterMode m) {
    switch (m) {
        case PerimeterMode::F: return "F";
        case PerimeterMode::W: return "W";
        case PerimeterMode::U: return "U";
    }
    return "?";
}

// Optional restriction to a subset of cells and facets.
struct Region {
    std::optional<std::vector<int>> cells;
    std::optional<std::vector<int>> facets;

    bool has_cell(int i) const {
        if (!cells) return true;
        return std::find(cells->begin(), cells->end(), i) != cells->end();
    }
    bool has_facet(int i) const {
        if (!facets) return true;
        return std::find(facets->begin(), facets->end(), i) != facets->end();
    }
};

template <class S>
struct LedgerLine {
    bool is_cell = false;
    int id = -1;
    Amount<S> measure;
    Amount<S> ac, jump, boundary;
    // facet diagnostics (min of lower trace, max of upper trace, essential
    // infimum of the jump over the positive part, crossability)
    std::optional<S> v_inf, v_sup, jump_essinf;
    bool crossable = false;
};

template <class S>
struct PerimeterBreakdown {
    Amount<S> ac, jump, boundary;
    std::vector<LedgerLine<S>> lines;

    Amount<S> total() const { return ac + jump + boundary; }
};

namespace detail {

// Jump integrand along one facet, per mode, as a function of the facet
// parameter. All modes see the exterior as the empty section (zero traces).
template <class S>
PwAffine<S> jump_integrand(PerimeterMode mode, const FacetTrace<S>& u1t, const FacetTrace<S>& u2t) {
    PwAffine<S> u1l = u1t.left_fn(), u1r = u1t.right_fn();
    PwAffine<S> u2l = u2t.left_fn(), u2r = u2t.right_fn();
    PwAffine<S> vl = u2l - u1l, vr = u2r - u1r;
    switch (mode) {
        case PerimeterMode::F:
            // [v]
            return pw_abs(vl - vr);
        case PerimeterMode::W: {
            // min{ v^sup + v^inf , max{ [v], 2 [b] } }
            PwAffine<S> vsup = pw_max(vl, vr), vinf = pw_min(vl, vr);
            PwAffine<S> bl = S(1) / S(2) * (u1l + u2l), br = S(1) / S(2) * (u1r + u2r);
            PwAffine<S> jv = vsup - vinf;
            PwAffine<S> jb2 = S(2) * pw_abs(bl - br);
            return pw_min(vsup + vinf, pw_max(jv, jb2));
        }
        case PerimeterMode::U: {
            // min{ 2 (u2~ - u1~), [u1] + [u2] } with f~ = (f^sup + f^inf)/2
            PwAffine<S> u1m = S(1) / S(2) * (u1l + u1r);
            PwAffine<S> u2m = S(1) / S(2) * (u2l + u2r);
            PwAffine<S> ju1 = pw_abs(u1l - u1r), ju2 = pw_abs(u2l - u2r);
            return pw_min(S(2) * (u2m - u1m), ju1 + ju2);
        }
    }
    throw Error("invalid perimeter mode");
}

}  // namespace detail

// Shared engine over the bounds (u1, u2) of a vertically convex set.
template <class S>
PerimeterBreakdown<S> perimeter_formula_uu(PerimeterMode mode, const PolyVerticalSet<S>& E,
                                           const Region& region = {}) {
    const auto& cx = *E.complex;
    auto [v, b] = slice_and_barycenter(E);
    validate_slice_field(v);
    PwAffineField<S> u1(E.complex), u2(E.complex);
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        u1.piece[i] = E.bounds[i]->u1;
        u2.piece[i] = E.bounds[i]->u2;
    }

    PerimeterBreakdown<S> out;
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i) || !region.has_cell(i)) continue;
        const auto& g1 = E.bounds[i]->u1.grad;
        const auto& g2 = E.bounds[i]->u2.grad;
        Amount<S> a = cx.cells[i].measure *
                      (sqrt_amount<S>(S(1) + dot(g1, g1)) + sqrt_amount<S>(S(1) + dot(g2, g2)));
        out.ac += a;
        LedgerLine<S> line;
        line.is_cell = true;
        line.id = i;
        line.measure = Amount<S>(cx.cells[i].measure);
        line.ac = a;
        out.lines.push_back(std::move(line));
    }

    for (int f = 0; f < cx.num_facets(); ++f) {
        if (!region.has_facet(f)) continue;
        const Facet<S>& fac = cx.facets[f];
        FacetTrace<S> u1t = facet_trace(u1, f), u2t = facet_trace(u2, f);
        FacetClass<S> cls = classify_facet(v, f);
        FacetTrace<S> vt = facet_trace(v, f);
        PwAffine<S> vsup = vt.sup_fn();
        PwAffine<S> integrand = detail::jump_integrand(mode, u1t, u2t);

        Amount<S> jterm, bterm;
        if (fac.is_point()) {
            if (cls.min_zero_ae)
                bterm = Amount<S>(vsup.eval(S(0)));
            else
                jterm = Amount<S>(integrand.eval(S(0)));
        } else {
            PortionSet<S> zero = cls.min_zero;
            PortionSet<S> pos = zero.complement();
            S jp = integrand.integral_over(pos);
            S bp = vsup.integral_over(zero);
            jterm = jp * fac.measure;
            bterm = bp * fac.measure;
        }
        out.jump += jterm;
        out.boundary += bterm;

        LedgerLine<S> line;
        line.is_cell = false;
        line.id = f;
        line.measure = fac.measure;
        line.jump = jterm;
        line.boundary = bterm;
        line.v_inf = vt.inf_fn().min_over(PortionSet<S>::whole());
        line.v_sup = vsup.max_over(PortionSet<S>::whole());
        line.jump_essinf = cls.essinf_jump;
        line.crossable =
            fac.interior() && E.on(fac.left) && E.on(fac.right) &&
            (cls.min_zero_ae ||
             (cls.essinf_jump && mode_traits<S>::lt(S(0), *cls.essinf_jump)));
        out.lines.push_back(std::move(line));
    }
    return out;
}

template <class S>
PerimeterBreakdown<S> perimeter_formula_F(const PwAffineField<S>& v, const Region& region = {}) {
    return perimeter_formula_uu(PerimeterMode::F, steiner_symmetral(v), region);
}

template <class S>
PerimeterBreakdown<S> perimeter_formula_W(const PwAffineField<S>& v, const PwAffineField<S>& b,
                                          const Region& region = {}) {
    return perimeter_formula_uu(PerimeterMode::W, build_W(v, b), region);
}

template <class S>
PerimeterBreakdown<S> perimeter_formula_U(const PwAffineField<S>& u1, const PwAffineField<S>& u2,
                                          const Region& region = {}) {
    return perimeter_formula_uu(PerimeterMode::U, make_between_graphs(u1, u2), region);
}

// ------------------------------------------------------------------
// Boundary oracle
// ------------------------------------------------------------------

namespace detail {

// Area of the graph of an affine function over a convex cell, computed from
// the lifted polygon itself (3D cross products), not from the gradient.
template <class S>
Amount<S> lifted_graph_area(const Cell<S>& cell, const AffinePiece<S>& u) {
    const auto& poly = cell.poly;
    std::array<S, 3> n{S(0), S(0), S(0)};
    auto lift = [&](const Pt<S>& z) { return std::array<S, 3>{z[0], z[1], u.eval(z)}; };
    auto p0 = lift(poly[0]);
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
        auto a = lift(poly[k]), b = lift(poly[k + 1]);
        std::array<S, 3> e1{a[0] - p0[0], a[1] - p0[1], a[2] - p0[2]};
        std::array<S, 3> e2{b[0] - p0[0], b[1] - p0[1], b[2] - p0[2]};
        n[0] += e1[1] * e2[2] - e1[2] * e2[1];
        n[1] += e1[2] * e2[0] - e1[0] * e2[2];
        n[2] += e1[0] * e2[1] - e1[1] * e2[0];
    }
    S norm_sq = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    return S(1) / S(2) * sqrt_amount(norm_sq);
}

// Pointwise height of the vertical wall between the two sections along a
// facet: |I_left symdiff I_right| with I = (u1, u2), empty off the support.
template <class S>
PwAffine<S> wall_height(const FacetTrace<S>& u1t, const FacetTrace<S>& u2t) {
    PwAffine<S> u1l = u1t.left_fn(), u1r = u1t.right_fn();
    PwAffine<S> u2l = u2t.left_fn(), u2r = u2t.right_fn();
    PwAffine<S> len_l = u2l - u1l, len_r = u2r - u1r;
    PwAffine<S> overlap = pw_min(u2l, u2r) - pw_max(u1l, u1r);
    PwAffine<S> overlap_pos = pw_max(overlap, PwAffine<S>::constant(S(0)));
    return len_l + len_r - S(2) * overlap_pos;
}

}  // namespace detail

// Total boundary measure of E, built directly from the polyhedral boundary.
template <class S>
Amount<S> oracle_perimeter(const PolyVerticalSet<S>& E) {
    const auto& cx = *E.complex;
    PwAffineField<S> u1(E.complex), u2(E.complex);
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        u1.piece[i] = E.bounds[i]->u1;
        u2.piece[i] = E.bounds[i]->u2;
    }
    Amount<S> acc;
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        const Cell<S>& cell = cx.cells[i];
        if (cx.dim == 1) {
            const S &a = cell.poly[0][0], &b = cell.poly[1][0];
            for (const AffinePiece<S>* u : {&E.bounds[i]->u1, &E.bounds[i]->u2}) {
                S dy = u->eval(cell.poly[1]) - u->eval(cell.poly[0]);
                acc += sqrt_amount<S>((b - a) * (b - a) + dy * dy);
            }
        } else {
            acc += detail::lifted_graph_area(cell, E.bounds[i]->u1);
            acc += detail::lifted_graph_area(cell, E.bounds[i]->u2);
        }
    }
    for (int f = 0; f < cx.num_facets(); ++f) {
        FacetTrace<S> u1t = facet_trace(u1, f), u2t = facet_trace(u2, f);
        PwAffine<S> h = detail::wall_height(u1t, u2t);
        if (cx.facets[f].is_point())
            acc += Amount<S>(h.eval(S(0)));
        else
            acc += h.integral() * cx.facets[f].measure;
    }
    return acc;
}

// ------------------------------------------------------------------
// Horizontal-slice inequality
// ------------------------------------------------------------------

namespace detail {

// Base perimeter of the horizontal slice {z : u1(z) < t < u2(z)}.
template <class S>
Amount<S> slice_base_perimeter(const PolyVerticalSet<S>& E, const S& t) {
    const auto& cx = *E.complex;
    if (cx.dim == 1) {
        std::vector<std::pair<S, S>> parts;
        for (int i = 0; i < cx.num_cells(); ++i) {
            if (!E.on(i)) continue;
            S lo = cx.cells[i].poly[0][0], hi = cx.cells[i].poly[1][0];
            for (int which = 0; which < 2; ++which) {
                // u1 < t (which=0), u2 > t (which=1)
                const AffinePiece<S>& u = which == 0 ? E.bounds[i]->u1 : E.bounds[i]->u2;
                S g = which == 0 ? -u.grad[0] : u.grad[0];
                S c = which == 0 ? t - u.off : u.off - t;
                if (g == 0) {
                    if (c <= 0) lo = hi;  // empty
                    continue;
                }
                S root = -c / g;
                if (g > 0)
                    lo = std::max(lo, root);
                else
                    hi = std::min(hi, root);
            }
            if (lo < hi) parts.push_back({lo, hi});
        }
        std::sort(parts.begin(), parts.end());
        int components = 0;
        std::optional<S> reach;
        for (const auto& [a, b] : parts) {
            if (!reach || mode_traits<S>::lt(*reach, a)) {
                ++components;
                reach = b;
            } else {
                reach = std::max(*reach, b);
            }
        }
        return Amount<S>(S(2 * components));
    }
    // dim 2: clip each support cell, add clipped perimeters, subtract the
    // interfaces shared across interior facets twice.
    Amount<S> total;
    std::vector<Polygon<S>> clipped(cx.num_cells());
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        Polygon<S> poly = cx.cells[i].poly;
        const auto& u1 = E.bounds[i]->u1;
        const auto& u2 = E.bounds[i]->u2;
        poly = clip_halfplane(poly, pt<S>(-u1.grad[0], -u1.grad[1]), t - u1.off);  // u1 < t
        if (!poly.empty())
            poly = clip_halfplane(poly, u2.grad, u2.off - t);  // u2 > t
        clipped[i] = poly;
        for (std::size_t k = 0; k < poly.size(); ++k)
            total += sqrt_amount(dist_sq(poly[k], poly[(k + 1) % poly.size()]));
    }
    for (int f = 0; f < cx.num_facets(); ++f) {
        const Facet<S>& fac = cx.facets[f];
        if (!fac.interior() || !E.on(fac.left) || !E.on(fac.right)) continue;
        if (clipped[fac.left].empty() || clipped[fac.right].empty()) continue;
        PwAffineField<S> u1f(E.complex), u2f(E.complex);
        for (int side : {fac.left, fac.right}) {
            u1f.piece[side] = E.bounds[side]->u1;
            u2f.piece[side] = E.bounds[side]->u2;
        }
        FacetTrace<S> t1 = facet_trace(u1f, f), t2 = facet_trace(u2f, f);
        auto touching = [](const PwAffine<S>& lo, const PwAffine<S>& hi) {
            return lo.above(S(0)).intersect(hi.above(S(0)));
        };
        PwAffine<S> tl_lo = PwAffine<S>::constant(t) - t1.left_fn();   // t - u1_left > 0
        PwAffine<S> tl_hi = t2.left_fn() - PwAffine<S>::constant(t);   // u2_left - t > 0
        PwAffine<S> tr_lo = PwAffine<S>::constant(t) - t1.right_fn();
        PwAffine<S> tr_hi = t2.right_fn() - PwAffine<S>::constant(t);
        PortionSet<S> shared = touching(tl_lo, tl_hi).intersect(touching(tr_lo, tr_hi));
        S len = shared.drop_null().measure();
        if (len > 0) total -= (S(2) * len) * fac.measure;
    }
    return total;
}

}  // namespace detail

template <class S>
struct SliceCheck {
    Amount<S> lhs, rhs;
    bool holds = false;
};

// Integral over t of the base perimeter of the slice, against the oracle
// perimeter of E. The integrand is piecewise affine in t between the levels
// of u1, u2 at cell vertices, so midpoint sampling integrates it exactly.
template <class S>
SliceCheck<S> slice_inequality_check(const PolyVerticalSet<S>& E) {
    const auto& cx = *E.complex;
    std::vector<S> levels;
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        for (const auto& z : cx.cells[i].poly) {
            levels.push_back(E.bounds[i]->u1.eval(z));
            levels.push_back(E.bounds[i]->u2.eval(z));
        }
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    SliceCheck<S> out;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        S width = levels[i + 1] - levels[i];
        if (!(width > 0)) continue;
        S mid = (levels[i] + levels[i + 1]) / S(2);
        out.lhs += width * detail::slice_base_perimeter(E, mid);
    }
    out.rhs = oracle_perimeter(E);
    if (mode_traits<S>::exact && out.lhs.is_exact() && out.rhs.is_exact())
        out.holds = out.lhs.exact <= out.rhs.exact;
    else
        out.holds = out.lhs.value() <= out.rhs.value() + 1e-9;
    return out;
}

// ------------------------------------------------------------------
// Coarea identity for piecewise-constant barycenters
// ------------------------------------------------------------------

template <class S>
struct CoareaCheck {
    Amount<S> lhs, rhs;
    bool equal = false;
};

// Region: facet ids with the sub-portion to count. The left-hand side sweeps
// the level sets of b; the right-hand side adds up jump * measure directly.
template <class S>
CoareaCheck<S> coarea_check(const PwAffineField<S>& b,
                            const std::vector<std::pair<int, PortionSet<S>>>& region) {
    if (!b.piecewise_constant()) throw Error("coarea check needs a piecewise-constant field");
    const auto& cx = *b.complex;
    struct Entry {
        S lo, hi;
        Amount<S> measure;
    };
    std::vector<Entry> entries;
    std::vector<S> values;
    for (const auto& [fid, portion] : region) {
        const Facet<S>& fac = cx.facets[fid];
        S bl = b.eval_in(fac.left, fac.a);
        S br = b.eval_in(fac.right, fac.a);
        Amount<S> mu;
        if (fac.is_point())
            mu = portion.is_empty() ? Amount<S>(S(0)) : Amount<S>(S(1));
        else
            mu = portion.measure() * fac.measure;
        entries.push_back({std::min(bl, br), std::max(bl, br), mu});
        values.push_back(bl);
        values.push_back(br);
    }
    CoareaCheck<S> out;
    for (const auto& e : entries) out.rhs += (e.hi - e.lo) * e.measure;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        S gap = values[i + 1] - values[i];
        Amount<S> level;
        for (const auto& e : entries)
            if (e.lo <= values[i] && values[i + 1] <= e.hi) level += e.measure;
        out.lhs += gap * level;
    }
    if (mode_traits<S>::exact && out.lhs.is_exact() && out.rhs.is_exact())
        out.equal = out.lhs.exact == out.rhs.exact;
    else
        out.equal = std::fabs(out.lhs.value() - out.rhs.value()) <=
                    1e-9 * std::max(1.0, std::fabs(out.rhs.value()));
    return out;
}

// Default region: the positive-lower-limit portions of the interior facets
// of the support of v.
template <class S>
std::vector<std::pair<int, PortionSet<S>>> positive_inf_region(const PwAffineField<S>& v) {
    std::vector<std::pair<int, PortionSet<S>>> region;
    for (int f = 0; f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        FacetClass<S> cls = classify_facet(v, f);
        if (fac.is_point()) {
            if (!cls.min_zero_ae) region.push_back({f, PortionSet<S>::whole()});
        } else {
            PortionSet<S> pos = cls.min_zero.complement().drop_null();
            if (!pos.is_empty()) region.push_back({f, pos});
        }
    }
    return region;
}

}  // namespace steiner
