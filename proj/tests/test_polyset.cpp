#include "steiner/polyset.hpp"

#include <doctest.h>

#include <random>

using namespace steiner;

namespace {

PwAffineField<Rat> unit_field() {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1)}});
    PwAffineField<Rat> v(cx);
    v.set_constant(0, Rat(1));
    return v;
}

PwAffineField<Rat> step_field() {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
    PwAffineField<Rat> v(cx);
    v.set_constant(0, Rat(1));
    v.set_constant(1, Rat(2));
    return v;
}

}  // namespace

TEST_CASE("symmetral of the unit slice profile is the centered unit square") {
    auto v = unit_field();
    auto F = steiner_symmetral(v);
    REQUIRE(F.on(0));
    CHECK(F.bounds[0]->u1.off == Rat(-1, 2));
    CHECK(F.bounds[0]->u2.off == Rat(1, 2));
    CHECK(volume(F) == Rat(1));
    auto [vv, bb] = slice_and_barycenter(F);
    CHECK(bb.piece[0]->off == Rat(0));
    CHECK(vv.piece[0]->off == Rat(1));
}

TEST_CASE("symmetral of a step profile stacks symmetric rectangles") {
    auto F = steiner_symmetral(step_field());
    CHECK(F.bounds[0]->u1.off == Rat(-1, 2));
    CHECK(F.bounds[1]->u2.off == Rat(1));
    CHECK(volume(F) == Rat(3, 2));
}

TEST_CASE("negative slice profile is rejected") {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1)}});
    PwAffineField<Rat> v(cx);
    v.set(0, pt<Rat>(Rat(-2), Rat(0)), Rat(1));  // dips below zero on (1/2,1)
    CHECK_THROWS_AS(steiner_symmetral(v), Error);
}

TEST_CASE("recentered set returns its data exactly") {
    auto v = unit_field();
    PwAffineField<Rat> b(v.complex);
    b.set_constant(0, Rat(1, 2));
    auto W = build_W(v, b);
    CHECK(W.bounds[0]->u1.off == Rat(0));
    CHECK(W.bounds[0]->u2.off == Rat(1));
    auto [vv, bb] = slice_and_barycenter(W);
    CHECK(vv.piece[0]->off == Rat(1));
    CHECK(bb.piece[0]->off == Rat(1, 2));
}

TEST_CASE("zero barycenter reproduces the symmetral") {
    auto v = step_field();
    auto F = steiner_symmetral(v);
    auto W = build_W(v, PwAffineField<Rat>(v.complex));
    for (int i = 0; i < 2; ++i) {
        CHECK(W.bounds[i]->u1.off == F.bounds[i]->u1.off);
        CHECK(W.bounds[i]->u2.off == F.bounds[i]->u2.off);
    }
}

TEST_CASE("slice/barycenter roundtrip on random inputs") {
    std::mt19937_64 rng(11);
    auto rnd = [&](int span) { return Rat(static_cast<long>(rng() % (2 * span + 1)) - span, 8); };
    for (int trial = 0; trial < 40; ++trial) {
        auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1, 3)}, {Rat(1, 3), Rat(1)}});
        PwAffineField<Rat> v(cx), b(cx);
        for (int c = 0; c < 2; ++c) {
            Rat lo = Rat(1, 8) + Rat(static_cast<long>(rng() % 16), 8);
            v.set(c, pt<Rat>(Rat(0), Rat(0)), lo);
            b.set(c, pt<Rat>(rnd(8), Rat(0)), rnd(8));
        }
        auto W = build_W(v, b);
        auto [vv, bb] = slice_and_barycenter(W);
        for (int c = 0; c < 2; ++c) {
            CHECK(vv.piece[c]->off == v.piece[c]->off);
            CHECK(bb.piece[c]->off == b.piece[c]->off);
            CHECK(bb.piece[c]->grad[0] == b.piece[c]->grad[0]);
        }
        // recentering never changes the volume
        CHECK(volume(W) == volume(steiner_symmetral(v)));
    }
}

TEST_CASE("symmetrizing the slice length of a symmetral is idempotent") {
    auto v = step_field();
    auto F = steiner_symmetral(v);
    auto [vv, bb] = slice_and_barycenter(F);
    auto F2 = steiner_symmetral(vv);
    for (int i = 0; i < 2; ++i) {
        CHECK(F2.bounds[i]->u1.off == F.bounds[i]->u1.off);
        CHECK(F2.bounds[i]->u2.off == F.bounds[i]->u2.off);
        CHECK(F2.bounds[i]->u1.grad[0] == F.bounds[i]->u1.grad[0]);
    }
}

TEST_CASE("volume is translation invariant") {
    auto v = step_field();
    Rat base = volume(steiner_symmetral(v));
    CHECK(base == Rat(3, 2));
    auto E = translate_over_partition(v, {{0, 0}, {1, 1}}, {{0, Rat(0)}, {1, Rat(7, 3)}});
    CHECK(volume(E) == base);
}

TEST_CASE("translate over a partition") {
    auto v = step_field();
    SUBCASE("all offsets zero gives the symmetral") {
        auto E = translate_over_partition(v, {{0, 0}, {1, 0}}, {{0, Rat(0)}});
        auto F = steiner_symmetral(v);
        for (int i = 0; i < 2; ++i) CHECK(E.bounds[i]->u1.off == F.bounds[i]->u1.off);
    }
    SUBCASE("single part translates globally") {
        auto E = translate_over_partition(v, {{0, 0}, {1, 0}}, {{0, Rat(3)}});
        auto [t, val] = min_translate_symdiff(E, v);
        CHECK(t == Rat(3));
        CHECK(val == Rat(0));
    }
    SUBCASE("unassigned support cell is an error") {
        CHECK_THROWS_AS(translate_over_partition(v, {{0, 0}}, {{0, Rat(0)}}), Error);
    }
}

TEST_CASE("minimal translation distance") {
    auto v = step_field();
    SUBCASE("the symmetral itself") {
        auto [t, val] = min_translate_symdiff(steiner_symmetral(v), v);
        CHECK(t == Rat(0));
        CHECK(val == Rat(0));
    }
    SUBCASE("right half lifted by 1/2: distance 1/2 attained on [0,1/2]") {
        auto E = translate_over_partition(v, {{0, 0}, {1, 1}}, {{0, Rat(0)}, {1, Rat(1, 2)}});
        auto [t, val] = min_translate_symdiff(E, v);
        CHECK(val == Rat(1, 2));
        CHECK(t >= Rat(0));
        CHECK(t <= Rat(1, 2));
        // the objective min(|t|,1) + min(|t-1/2|,2) really is flat there
        CHECK(detail::symdiff_at(E, Rat(0)) == Rat(1, 2));
        CHECK(detail::symdiff_at(E, Rat(1, 4)) == Rat(1, 2));
        CHECK(detail::symdiff_at(E, Rat(1, 2)) == Rat(1, 2));
        CHECK(detail::symdiff_at(E, Rat(-1, 4)) == Rat(1));
    }
    SUBCASE("mismatched slice profile is an error") {
        auto other = unit_field();
        CHECK_THROWS_AS(min_translate_symdiff(steiner_symmetral(v), other), Error);
    }
}

TEST_CASE("minimal translation with an affine barycenter needs interior minima") {
    auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1)}});
    PwAffineField<Rat> v(cx), b(cx);
    v.set_constant(0, Rat(1));
    b.set(0, pt<Rat>(Rat(1), Rat(0)), Rat(0));  // b = z
    auto E = build_W(v, b);
    auto [t, val] = min_translate_symdiff(E, v);
    // objective is t^2 + (1-t)^2 on [0,1], minimized at 1/2
    CHECK(to_double(val) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(to_double(t) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("equality-case construction from a jump part") {
    auto v2 = step_field();
    PwAffineField<Rat> v1(v2.complex);  // zero
    SUBCASE("lambda apart from 1/2 works") {
        auto E = prop14_construct(v1, v2, Rat(0));
        CHECK(E.bounds[0]->u1.off == Rat(0));
        CHECK(E.bounds[0]->u2.off == Rat(1));
        CHECK(E.bounds[1]->u2.off == Rat(2));
        auto [t, val] = min_translate_symdiff(E, v2);
        CHECK(val == Rat(1, 2));
    }
    SUBCASE("lambda = 1/2 is rejected") {
        CHECK_THROWS_AS(prop14_construct(v1, v2, Rat(1, 2)), Error);
    }
    SUBCASE("constant v2 is rejected") {
        auto cx = v2.complex;
        PwAffineField<Rat> flat(cx);
        flat.set_constant(0, Rat(1));
        flat.set_constant(1, Rat(1));
        CHECK_THROWS_AS(prop14_construct(v1, flat, Rat(0)), Error);
    }
    SUBCASE("a jumping v1 is rejected") {
        CHECK_THROWS_AS(prop14_construct(v2, v2, Rat(0)), Error);
    }
}

TEST_CASE("double mode mirrors the rational results") {
    auto cx = build_complex_1d<double>({{0.0, 0.5}, {0.5, 1.0}});
    PwAffineField<double> v(cx);
    v.set_constant(0, 1.0);
    v.set_constant(1, 2.0);
    auto E = translate_over_partition(v, {{0, 0}, {1, 1}}, {{0, 0.0}, {1, 0.5}});
    auto [t, val] = min_translate_symdiff(E, v);
    CHECK(val == doctest::Approx(0.5));
    CHECK(volume(E) == doctest::Approx(1.5));
}
