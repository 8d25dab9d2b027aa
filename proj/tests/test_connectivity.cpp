#include "steiner/connectivity.hpp"

#include "steiner/random_scenes.hpp"

#include <doctest.h>

using namespace steiner;

namespace {

Polygon<Rat> rect(Rat x0, Rat y0, Rat x1, Rat y1) {
    return {pt<Rat>(x0, y0), pt<Rat>(x1, y0), pt<Rat>(x1, y1), pt<Rat>(x0, y1)};
}

ComplexPtr<Rat> split_square() {
    return build_complex_2d<Rat>(
        {rect(Rat(0), Rat(0), Rat(1, 2), Rat(1)), rect(Rat(1, 2), Rat(0), Rat(1), Rat(1))});
}

int interior_facet(const BaseCellComplex<Rat>& cx) {
    for (int f = 0; f < cx.num_facets(); ++f)
        if (cx.facets[f].interior()) return f;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("a fully covered shared facet disconnects two cells") {
    auto cx = split_square();
    int f = interior_facet(*cx);
    auto r = essentially_disconnects<Rat>(*cx, {0, 1}, {{f, PortionSet<Rat>::whole()}});
    CHECK(r.disconnects);
    CHECK(r.part_plus.size() == 1);
    CHECK(r.part_minus.size() == 1);
}

TEST_CASE("the empty selection does not disconnect a connected complex") {
    auto cx = split_square();
    auto r = essentially_disconnects<Rat>(*cx, {0, 1}, {});
    CHECK(!r.disconnects);
}

TEST_CASE("half of the shared facet does not disconnect") {
    auto cx = split_square();
    int f = interior_facet(*cx);
    PortionSet<Rat> half{{{Rat(0), Rat(1, 2)}}};
    auto r = essentially_disconnects<Rat>(*cx, {0, 1}, {{f, half}});
    CHECK(!r.disconnects);
}

TEST_CASE("removing a null part of the cover changes nothing") {
    auto cx = split_square();
    int f = interior_facet(*cx);
    // whole facet minus one point still covers up to null
    PortionSet<Rat> almost{{{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}}};
    auto r1 = essentially_disconnects<Rat>(*cx, {0, 1}, {{f, almost}});
    CHECK(r1.disconnects);
    // a null selection (single points) covers nothing of positive measure
    PortionSet<Rat> dust{{{Rat(1, 4), Rat(1, 4)}, {Rat(3, 4), Rat(3, 4)}}};
    auto r2 = essentially_disconnects<Rat>(*cx, {0, 1}, {{f, dust}});
    CHECK(!r2.disconnects);
}

TEST_CASE("monotonicity: enlarging the selection never flips true to false") {
    std::mt19937_64 rng(41);
    SceneGenOptions opt;
    opt.dim = 2;
    opt.max_cells = 6;
    for (int trial = 0; trial < 25; ++trial) {
        auto scene = random_scene<Rat>(rng, opt);
        const auto& cx = *scene.complex;
        std::vector<int> sup = scene.v.support();
        if (sup.size() < 2) continue;
        // random selection K, then K' = K plus one more covered facet
        std::map<int, PortionSet<Rat>> K;
        std::vector<int> interior;
        for (int f = 0; f < cx.num_facets(); ++f)
            if (cx.facets[f].interior()) interior.push_back(f);
        for (int f : interior)
            if (rng() % 2) K[f] = PortionSet<Rat>::whole();
        auto before = essentially_disconnects<Rat>(cx, sup, K);
        std::map<int, PortionSet<Rat>> K2 = K;
        K2[interior[rng() % interior.size()]] = PortionSet<Rat>::whole();
        auto after = essentially_disconnects<Rat>(cx, sup, K2);
        if (before.disconnects) CHECK(after.disconnects);

        // null-stability: adding dust portions never changes the verdict
        std::map<int, PortionSet<Rat>> K3 = K;
        for (int f : interior)
            if (!K3.count(f)) K3[f] = PortionSet<Rat>{{{Rat(1, 3), Rat(1, 3)}}};
        auto dusted = essentially_disconnects<Rat>(cx, sup, K3);
        CHECK(dusted.disconnects == before.disconnects);
    }
}

TEST_CASE("refining a cell does not create disconnections") {
    // connected verdicts survive subdividing a cell into two
    auto coarse = build_complex_2d<Rat>({rect(Rat(0), Rat(0), Rat(1), Rat(1))});
    auto fine = build_complex_2d<Rat>(
        {rect(Rat(0), Rat(0), Rat(1, 2), Rat(1)), rect(Rat(1, 2), Rat(0), Rat(1), Rat(1))});
    auto rc = essentially_disconnects<Rat>(*coarse, {0}, {});
    auto rf = essentially_disconnects<Rat>(*fine, {0, 1}, {});
    CHECK(!rc.disconnects);
    CHECK(!rf.disconnects);  // the new interior facet is uncovered
}

TEST_CASE("indecomposability of the symmetral") {
    SUBCASE("one interval is indecomposable") {
        auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1)}});
        PwAffineField<Rat> v(cx);
        v.set_constant(0, Rat(1));
        CHECK(is_indecomposable_F(v));
    }
    SUBCASE("a pinched tent is decomposable") {
        auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
        PwAffineField<Rat> v(cx);
        v.set(0, pt<Rat>(Rat(-2), Rat(0)), Rat(1));  // 1 - 2z
        v.set(1, pt<Rat>(Rat(2), Rat(0)), Rat(-1));  // 2z - 1
        CHECK(!is_indecomposable_F(v));
    }
    SUBCASE("a point zero in dim 2 is negligible") {
        // positive except at one interior vertex: still indecomposable
        Pt<Rat> c = pt<Rat>(Rat(1, 2), Rat(1, 2));
        Pt<Rat> p00 = pt<Rat>(Rat(0), Rat(0)), p10 = pt<Rat>(Rat(1), Rat(0));
        Pt<Rat> p11 = pt<Rat>(Rat(1), Rat(1)), p01 = pt<Rat>(Rat(0), Rat(1));
        auto cx = build_complex_2d<Rat>({Polygon<Rat>{p00, p10, c}, Polygon<Rat>{p10, p11, c},
                                         Polygon<Rat>{p11, p01, c}, Polygon<Rat>{p01, p00, c}});
        PwAffineField<Rat> v(cx);
        v.set(0, pt<Rat>(Rat(0), Rat(-2)), Rat(1));  // bottom: 1 - 2y
        v.set(1, pt<Rat>(Rat(2), Rat(0)), Rat(-1));  // right: 2x - 1
        v.set(2, pt<Rat>(Rat(0), Rat(2)), Rat(-1));  // top: 2y - 1
        v.set(3, pt<Rat>(Rat(-2), Rat(0)), Rat(1));  // left: 1 - 2x
        CHECK(is_indecomposable_F(v));
    }
    SUBCASE("empty support is an error") {
        auto cx = build_complex_1d<Rat>({{Rat(0), Rat(1)}});
        PwAffineField<Rat> v(cx);
        CHECK_THROWS_AS(is_indecomposable_F(v), Error);
    }
}
