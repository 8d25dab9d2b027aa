#include "steiner/field.hpp"

#include <doctest.h>

#include <random>

using namespace steiner;

namespace {

Polygon<Rat> rect(Rat x0, Rat y0, Rat x1, Rat y1) {
    return {pt<Rat>(x0, y0), pt<Rat>(x1, y0), pt<Rat>(x1, y1), pt<Rat>(x0, y1)};
}

// step profile 1 | 2 on the halves of (0,1)
PwAffineField<Rat> step_field() {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
    PwAffineField<Rat> v(cx);
    v.set_constant(0, Rat(1));
    v.set_constant(1, Rat(2));
    return v;
}

int facet_at(const BaseCellComplex<Rat>& cx, Rat x) {
    for (int f = 0; f < cx.num_facets(); ++f)
        if (cx.facets[f].a[0] == x && cx.facets[f].is_point()) return f;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("one-sided limits of a step") {
    auto v = step_field();
    int mid = facet_at(*v.complex, Rat(1, 2));
    FacetTrace<Rat> t = facet_trace(v, mid);
    CHECK(t.inf_fn().eval(Rat(0)) == Rat(1));
    CHECK(t.sup_fn().eval(Rat(0)) == Rat(2));
    CHECK(t.jump_fn().eval(Rat(0)) == Rat(1));
}

TEST_CASE("exterior trace is zero") {
    auto v = step_field();
    int left = facet_at(*v.complex, Rat(0));
    FacetTrace<Rat> t = facet_trace(v, left);
    CHECK(t.inf_fn().eval(Rat(0)) == Rat(0));
    CHECK(t.sup_fn().eval(Rat(0)) == Rat(1));
    CHECK(t.jump_fn().eval(Rat(0)) == Rat(1));
    CHECK_THROWS_AS(facet_trace(v, 99), Error);
}

TEST_CASE("tapered jump along a dim-2 facet") {
    auto cx = build_complex_2d<Rat>(
        {rect(Rat(0), Rat(0), Rat(1, 2), Rat(1)), rect(Rat(1, 2), Rat(0), Rat(1), Rat(1))});
    PwAffineField<Rat> v(cx);
    v.set_constant(0, Rat(1));                          // left: 1
    v.set(1, pt<Rat>(Rat(0), Rat(1)), Rat(0));          // right: z2
    int mid = -1;
    for (int f = 0; f < cx->num_facets(); ++f)
        if (cx->facets[f].interior()) mid = f;
    REQUIRE(mid >= 0);
    FacetTrace<Rat> t = facet_trace(v, mid);
    // facet runs from (1/2,0) to (1/2,1); jump |1 - z2| tapers to 0
    CHECK(t.jump_fn().eval(Rat(0)) == Rat(1));
    CHECK(t.jump_fn().eval(Rat(1)) == Rat(0));
    CHECK(t.inf_fn().eval(Rat(1, 2)) == Rat(1, 2));  // min(1, z2)
    CHECK(t.inf_fn().eval(Rat(0)) == Rat(0));

    FacetClass<Rat> cls = classify_facet(v, mid);
    CHECK(cls.min_zero.measure() == Rat(0));  // a single point, null
    CHECK(!cls.min_zero_ae);
    REQUIRE(cls.essinf_jump.has_value());
    CHECK(*cls.essinf_jump == Rat(0));  // affine minimum at the far endpoint
}

TEST_CASE("classification of the step facet") {
    auto v = step_field();
    FacetClass<Rat> cls = classify_facet(v, facet_at(*v.complex, Rat(1, 2)));
    CHECK(cls.min_zero.is_empty());
    CHECK(!cls.jump_pos.is_empty());
    REQUIRE(cls.essinf_jump.has_value());
    CHECK(*cls.essinf_jump == Rat(1));
}

TEST_CASE("no jump means empty jump portion and zero ess-inf") {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
    PwAffineField<Rat> v(cx);
    v.set_constant(0, Rat(1));
    v.set_constant(1, Rat(1));
    FacetClass<Rat> cls = classify_facet(v, facet_at(*cx, Rat(1, 2)));
    CHECK(cls.jump_pos.is_empty());
    REQUIRE(cls.essinf_jump.has_value());
    CHECK(*cls.essinf_jump == Rat(0));
}

TEST_CASE("jump equals sup minus inf at facet endpoints (random fields)") {
    std::mt19937_64 rng(7);
    auto rnd = [&](int lo, int hi) { return Rat(static_cast<long>(lo + rng() % (hi - lo + 1)), 4); };
    for (int trial = 0; trial < 25; ++trial) {
        auto cx = build_complex_2d<Rat>(
            {rect(Rat(0), Rat(0), Rat(1, 2), Rat(1)), rect(Rat(1, 2), Rat(0), Rat(1), Rat(1))});
        PwAffineField<Rat> v(cx);
        for (int c = 0; c < 2; ++c) v.set(c, pt<Rat>(rnd(0, 4), rnd(0, 4)), rnd(0, 8));
        for (int f = 0; f < cx->num_facets(); ++f) {
            FacetTrace<Rat> t = facet_trace(v, f);
            for (Rat tau : {Rat(0), Rat(1)}) {
                Rat gap = t.sup_fn().eval(tau) - t.inf_fn().eval(tau);
                CHECK(gap == t.jump_fn().eval(tau));
                CHECK(gap >= 0);
            }
        }
    }
}

TEST_CASE("classification is invariant under cell relabeling") {
    auto cx1 = build_complex_1d<Rat>({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
    auto cx2 = build_complex_1d<Rat>({{Rat(1, 2), Rat(1)}, {Rat(0), Rat(1, 2)}});
    PwAffineField<Rat> v1(cx1), v2(cx2);
    v1.set(0, pt<Rat>(Rat(2), Rat(0)), Rat(0));
    v1.set_constant(1, Rat(3));
    v2.set(1, pt<Rat>(Rat(2), Rat(0)), Rat(0));
    v2.set_constant(0, Rat(3));
    // facet ordering is by position, so classifications line up facet by facet
    REQUIRE(cx1->num_facets() == cx2->num_facets());
    for (int f = 0; f < cx1->num_facets(); ++f) {
        FacetClass<Rat> a = classify_facet(v1, f), b = classify_facet(v2, f);
        CHECK(a.min_zero_ae == b.min_zero_ae);
        CHECK(a.min_zero.measure() == b.min_zero.measure());
        CHECK(a.essinf_jump.has_value() == b.essinf_jump.has_value());
        if (a.essinf_jump) CHECK(*a.essinf_jump == *b.essinf_jump);
    }
}

TEST_CASE("classification is invariant under rigid motions of the base") {
    // rotate by the 3-4-5 angle and translate: all rational, so exact
    const Rat c(3, 5), s(4, 5), tx(7, 3), ty(-2);
    auto rot = [&](const Pt<Rat>& z) {
        return pt<Rat>(c * z[0] - s * z[1] + tx, s * z[0] + c * z[1] + ty);
    };
    Polygon<Rat> left{pt<Rat>(Rat(0), Rat(0)), pt<Rat>(Rat(1, 2), Rat(0)),
                      pt<Rat>(Rat(1, 2), Rat(1)), pt<Rat>(Rat(0), Rat(1))};
    Polygon<Rat> right{pt<Rat>(Rat(1, 2), Rat(0)), pt<Rat>(Rat(1), Rat(0)),
                       pt<Rat>(Rat(1), Rat(1)), pt<Rat>(Rat(1, 2), Rat(1))};
    Polygon<Rat> left_r, right_r;
    for (const auto& z : left) left_r.push_back(rot(z));
    for (const auto& z : right) right_r.push_back(rot(z));
    auto cx = build_complex_2d<Rat>({left, right});
    auto cx_r = build_complex_2d<Rat>({left_r, right_r});

    PwAffineField<Rat> v(cx), v_r(cx_r);
    v.set_constant(0, Rat(1));
    v.set(1, pt<Rat>(Rat(0), Rat(1)), Rat(0));  // z2 on the right cell
    // the rotated field composes with the inverse motion
    v_r.set_constant(0, Rat(1));
    // z2 = -s (x - tx) + c (y - ty)
    v_r.set(1, pt<Rat>(-s, c), s * tx - c * ty);

    REQUIRE(cx->num_facets() == cx_r->num_facets());
    for (int f = 0; f < cx->num_facets(); ++f) {
        // match facets by measure of image: interior facet is unique here
        if (!cx->facets[f].interior()) continue;
        for (int g = 0; g < cx_r->num_facets(); ++g) {
            if (!cx_r->facets[g].interior()) continue;
            auto a = classify_facet(v, f);
            auto b = classify_facet(v_r, g);
            CHECK(a.min_zero.measure() == b.min_zero.measure());
            CHECK(a.jump_pos.measure() == b.jump_pos.measure());
            REQUIRE(a.essinf_jump.has_value());
            REQUIRE(b.essinf_jump.has_value());
            CHECK(*a.essinf_jump == *b.essinf_jump);
            CHECK(cx->facets[f].length_sq == cx_r->facets[g].length_sq);
        }
    }
}

TEST_CASE("facet measures account for support boundaries once") {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}, {Rat(2), Rat(3)}});
    PwAffineField<Rat> v(cx);
    v.set_constant(0, Rat(1));
    v.set_constant(1, Rat(2));  // third cell off the support
    Amount<Rat> sum;
    for (int f = 0; f < cx->num_facets(); ++f) {
        const auto& fac = cx->facets[f];
        int sides = (fac.left != kExterior && v.on(fac.left)) +
                    (fac.right != kExterior && v.on(fac.right));
        sum += Rat(sides) * fac.measure;
    }
    Amount<Rat> cells;
    for (int c : v.support()) cells += cell_boundary_measure(*cx, c);
    CHECK(sum.exact == cells.exact);
}

TEST_CASE("slice-field validation") {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1)}});
    PwAffineField<Rat> ok(cx);
    ok.set(0, pt<Rat>(Rat(1), Rat(0)), Rat(0));  // v = z, zero only at the left end
    CHECK_NOTHROW(validate_slice_field(ok));

    PwAffineField<Rat> neg(cx);
    neg.set(0, pt<Rat>(Rat(1), Rat(0)), Rat(-1, 2));
    CHECK_THROWS_AS(validate_slice_field(neg), Error);

    PwAffineField<Rat> zero(cx);
    zero.set_constant(0, Rat(0));
    CHECK_THROWS_AS(validate_slice_field(zero), Error);

    PwAffineField<Rat> empty(cx);
    CHECK_THROWS_AS(validate_slice_field(empty), Error);
}
