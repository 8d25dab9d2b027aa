#pragma once

// Piecewise-affine fields on a cell complex and their trace calculus along
// facets. The approximate upper/lower limits of such a field on a facet
// coincide with the pointwise max/min of its two one-sided traces; this
// identification is what the classification below computes, and it is
// cross-validated against the boundary oracle in the test suite.

#include "steiner/complex.hpp"
#include "steiner/pwaffine.hpp"

#include <optional>

namespace steiner {

template <class S>
struct AffinePiece {
    Pt<S> grad{};
    S off{};
    S eval(const Pt<S>& z) const { return dot(grad, z) + off; }
};

template <class S>
struct PwAffineField {
    ComplexPtr<S> complex;
    std::vector<std::optional<AffinePiece<S>>> piece;  // one entry per cell

    PwAffineField() = default;
    explicit PwAffineField(ComplexPtr<S> cx)
        : complex(std::move(cx)), piece(complex->num_cells()) {}

    bool on(int cell) const { return piece[cell].has_value(); }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < complex->num_cells(); ++i)
            if (on(i)) s.push_back(i);
        return s;
    }

    void set(int cell, Pt<S> grad, S off) { piece[cell] = AffinePiece<S>{std::move(grad), std::move(off)}; }
    void set_constant(int cell, S c) { piece[cell] = AffinePiece<S>{pt<S>(S(0), S(0)), std::move(c)}; }

    // Field value from inside a given cell (0 for non-support cells).
    S eval_in(int cell, const Pt<S>& z) const {
        if (cell == kExterior || !on(cell)) return S(0);
        return piece[cell]->eval(z);
    }

    bool piecewise_constant() const {
        for (const auto& p : piece)
            if (p && !(mode_traits<S>::is_zero(p->grad[0]) && mode_traits<S>::is_zero(p->grad[1])))
                return false;
        return true;
    }
};

// One-sided limits of a field along a facet, stored as affine functions of
// the facet parameter by their endpoint values. Exterior or non-support
// sides trace to zero.
template <class S>
struct FacetTrace {
    int facet = -1;
    S left_a{}, left_b{};    // trace from the left cell at endpoints a, b
    S right_a{}, right_b{};  // trace from the right cell

    PwAffine<S> left_fn() const { return PwAffine<S>::affine(left_a, left_b); }
    PwAffine<S> right_fn() const { return PwAffine<S>::affine(right_a, right_b); }
    PwAffine<S> sup_fn() const { return pw_max(left_fn(), right_fn()); }     // v^sup
    PwAffine<S> inf_fn() const { return pw_min(left_fn(), right_fn()); }     // v^inf
    PwAffine<S> jump_fn() const { return pw_abs(left_fn() - right_fn()); }   // [v]
};

template <class S>
FacetTrace<S> facet_trace(const PwAffineField<S>& v, int facet_id) {
    const auto& cx = *v.complex;
    if (facet_id < 0 || facet_id >= cx.num_facets()) throw Error("unknown facet id");
    const Facet<S>& f = cx.facets[facet_id];
    // snap within the point-coincidence tolerance so zero sets and crossing
    // parameters stay clean in double mode (no-op for exact scalars)
    auto snap = [](S x) { return mode_traits<S>::is_zero(x) ? S(0) : x; };
    FacetTrace<S> t;
    t.facet = facet_id;
    t.left_a = snap(v.eval_in(f.left, f.a));
    t.left_b = snap(v.eval_in(f.left, f.b));
    t.right_a = snap(v.eval_in(f.right, f.a));
    t.right_b = snap(v.eval_in(f.right, f.b));
    return t;
}

// Per-facet classification of a slice-length field: where the lower limit
// vanishes, where the jump is positive, and the essential infimum of the
// jump over the part where the lower limit is positive.
template <class S>
struct FacetClass {
    int facet = -1;
    PortionSet<S> min_zero;          // {v^inf = 0}, closed portions
    PortionSet<S> jump_pos;          // closure of {[v] > 0}
    std::optional<S> essinf_jump;    // over {v^inf > 0}; nullopt = +infinity
    bool min_zero_ae = false;        // v^inf = 0 a.e. on the facet
};

// "a.e." on a facet is dimension-dependent: point facets carry counting
// measure (the point itself matters), segment facets carry length (isolated
// points are negligible).
template <class S>
FacetClass<S> classify_facet(const PwAffineField<S>& v, int facet_id) {
    const Facet<S>& f = v.complex->facets[facet_id];
    FacetTrace<S> t = facet_trace(v, facet_id);
    FacetClass<S> c;
    c.facet = facet_id;
    PwAffine<S> vin = t.inf_fn();
    PwAffine<S> jmp = t.jump_fn();
    if (f.is_point()) {
        S vi = vin.eval(S(0));
        S ji = jmp.eval(S(0));
        bool zero = mode_traits<S>::is_zero(vi);
        c.min_zero = zero ? PortionSet<S>::whole() : PortionSet<S>::empty();
        c.jump_pos = mode_traits<S>::is_zero(ji) ? PortionSet<S>::empty() : PortionSet<S>::whole();
        c.min_zero_ae = zero;
        if (!zero) c.essinf_jump = ji;
        return c;
    }
    c.min_zero = vin.zero_set();
    c.jump_pos = jmp.above(S(0));
    PortionSet<S> pos = c.min_zero.complement().drop_null();
    c.min_zero_ae = pos.is_empty();
    if (!pos.is_empty()) c.essinf_jump = jmp.min_over(pos);
    return c;
}

template <class S>
std::vector<FacetClass<S>> classify_facets(const PwAffineField<S>& v) {
    std::vector<FacetClass<S>> out;
    out.reserve(v.complex->num_facets());
    for (int i = 0; i < v.complex->num_facets(); ++i) out.push_back(classify_facet(v, i));
    return out;
}

// A slice-length field must be nonnegative on every closed support cell and
// must not vanish identically (or on a positive-measure part, which for an
// affine piece is the same thing) inside a support cell.
template <class S>
void validate_slice_field(const PwAffineField<S>& v) {
    if (!v.complex) throw Error("field has no complex");
    bool any = false;
    for (int i = 0; i < v.complex->num_cells(); ++i) {
        if (!v.on(i)) continue;
        any = true;
        const auto& cell = v.complex->cells[i];
        bool all_zero = true;
        for (const auto& z : cell.poly) {
            S val = v.piece[i]->eval(z);
            if (mode_traits<S>::lt(val, S(0)))
                throw Error("slice-length field negative on a closed cell");
            if (!mode_traits<S>::is_zero(val)) all_zero = false;
        }
        if (all_zero) throw Error("slice-length field vanishes on a support cell");
    }
    if (!any) throw Error("slice-length field has empty support");
}

}  // namespace steiner
