#pragma once

// Named example scenes with their expected outcomes, used for regression
// testing and as ready-made CLI inputs: step and pinched-tent profiles, the
// rigid tapered and pinched polyhedra over a square base, nested-diamond
// refinements, distance-to-Cantor-set truncations, and cumulative rational
// step profiles.

#include "steiner/rigidity.hpp"
#include "steiner/scene.hpp"

namespace steiner {

struct GalleryExpectation {
    std::optional<RigidityStatus> verdict;
    std::optional<std::string> epsilon;  // formatted; set when the verdict pins one
    bool equality_case = false;          // scene's (v, b) verifies as an equality case
};

template <class S>
struct GalleryEntry {
    std::string name;
    int depth = 0;
    Scene<S> scene;
    GalleryExpectation expected;
};

std::vector<std::string> gallery_names();

// depth is ignored by the fixed scenes; constructions use depth >= 1.
template <class S>
GalleryEntry<S> gallery_entry(const std::string& name, int depth);

json gallery_scene_json(const std::string& name, int depth, const std::string& arithmetic);

// ------------------------------------------------------------------
// builders
// ------------------------------------------------------------------

namespace gallery_detail {

template <class S>
Scene<S> scene_of(ComplexPtr<S> cx, PwAffineField<S> v, std::optional<PwAffineField<S>> b = {}) {
    Scene<S> scene;
    scene.complex = cx;
    for (int i = 0; i < cx->num_cells(); ++i) scene.cell_names.push_back("c" + std::to_string(i));
    scene.fields.emplace("v", std::move(v));
    if (b) scene.fields.emplace("b", std::move(*b));
    return scene;
}

template <class S>
GalleryEntry<S> step_profile() {
    auto cx = build_complex_1d<S>({{S(0), S(1) / S(2)}, {S(1) / S(2), S(1)}});
    PwAffineField<S> v(cx);
    v.set_constant(0, S(1));
    v.set_constant(1, S(2));
    GalleryEntry<S> e;
    e.name = "fig1a";
    e.scene = scene_of<S>(cx, std::move(v));
    e.expected.verdict = RigidityStatus::non_rigid;
    e.expected.epsilon = "1";
    return e;
}

template <class S>
GalleryEntry<S> pinched_tent() {
    auto cx = build_complex_1d<S>({{S(0), S(1) / S(2)}, {S(1) / S(2), S(1)}});
    PwAffineField<S> v(cx);
    v.set(0, pt<S>(S(-2), S(0)), S(1));
    v.set(1, pt<S>(S(2), S(0)), S(-1));
    GalleryEntry<S> e;
    e.name = "fig1b";
    e.scene = scene_of<S>(cx, std::move(v));
    e.expected.verdict = RigidityStatus::non_rigid;
    return e;
}

// vertical wall whose jump tapers to zero: rigid despite the wall
template <class S>
GalleryEntry<S> tapered_wall() {
    S h = S(1) / S(2);
    auto cx = build_complex_2d<S>(
        {{pt<S>(S(0), S(0)), pt<S>(h, S(0)), pt<S>(h, S(1)), pt<S>(S(0), S(1))},
         {pt<S>(h, S(0)), pt<S>(S(1), S(0)), pt<S>(S(1), S(1)), pt<S>(h, S(1))}});
    PwAffineField<S> v(cx);
    v.set_constant(0, S(1));
    v.set(1, pt<S>(S(0), S(1)), S(0));
    GalleryEntry<S> e;
    e.name = "casetta";
    e.scene = scene_of<S>(cx, std::move(v));
    e.expected.verdict = RigidityStatus::rigid;
    return e;
}

// sections pinched to zero at one interior point: rigid, no vertical walls
template <class S>
GalleryEntry<S> pinched_center() {
    S h = S(1) / S(2);
    Pt<S> c = pt<S>(h, h);
    Pt<S> p00 = pt<S>(S(0), S(0)), p10 = pt<S>(S(1), S(0));
    Pt<S> p11 = pt<S>(S(1), S(1)), p01 = pt<S>(S(0), S(1));
    auto cx = build_complex_2d<S>({Polygon<S>{p00, p10, c}, Polygon<S>{p10, p11, c},
                                   Polygon<S>{p11, p01, c}, Polygon<S>{p01, p00, c}});
    PwAffineField<S> v(cx);
    v.set(0, pt<S>(S(0), S(-2)), S(1));
    v.set(1, pt<S>(S(2), S(0)), S(-1));
    v.set(2, pt<S>(S(0), S(2)), S(-1));
    v.set(3, pt<S>(S(-2), S(0)), S(1));
    GalleryEntry<S> e;
    e.name = "salsicciotto";
    e.scene = scene_of<S>(cx, std::move(v));
    e.expected.verdict = RigidityStatus::rigid;
    return e;
}

// nested corner diamonds: piecewise-constant profile with jumps 2^-g along
// generation-g diamonds; every finite refinement admits a crossable cut.
template <class S>
GalleryEntry<S> nested_diamonds(int depth) {
    if (depth < 1) throw Error("depth must be at least 1");
    if (depth > 6) throw Error("depth capped at 6");
    struct CellSpec {
        Polygon<S> poly;
        S value;
    };
    std::vector<CellSpec> cells;
    // region of diamond Q(c, l) (vertices (c +- l, 0), (c, +- l)) carrying
    // `value`, refined by two corner children per generation
    auto emit = [&](auto&& self, const S& c, const S& l, const S& value, int gen) -> void {
        if (gen == depth) {
            cells.push_back({{pt<S>(c - l, S(0)), pt<S>(c, -l), pt<S>(c + l, S(0)), pt<S>(c, l)},
                             value});
            return;
        }
        S h = l / S(2), q = l / S(4);
        // middle hexagon
        cells.push_back({{pt<S>(c - h, -h), pt<S>(c, -l), pt<S>(c + h, -h), pt<S>(c + h, h),
                          pt<S>(c, l), pt<S>(c - h, h)},
                         value});
        // caps minus corner children, two triangles each
        cells.push_back({{pt<S>(c - S(3) * q, q), pt<S>(c - h, h), pt<S>(c - h, S(0))}, value});
        cells.push_back({{pt<S>(c - S(3) * q, -q), pt<S>(c - h, S(0)), pt<S>(c - h, -h)}, value});
        cells.push_back({{pt<S>(c + S(3) * q, q), pt<S>(c + h, S(0)), pt<S>(c + h, h)}, value});
        cells.push_back({{pt<S>(c + S(3) * q, -q), pt<S>(c + h, -h), pt<S>(c + h, S(0))}, value});
        S inc = S(1) / S(1 << (gen + 1));
        self(self, c - S(3) * q, q, value - inc, gen + 1);
        self(self, c + S(3) * q, q, value + inc, gen + 1);
    };
    emit(emit, S(0), S(1), S(1), 0);
    std::vector<Polygon<S>> polys;
    for (const auto& cs : cells) polys.push_back(cs.poly);
    auto cx = build_complex_2d<S>(polys);
    PwAffineField<S> v(cx);
    for (std::size_t i = 0; i < cells.size(); ++i)
        v.set_constant(static_cast<int>(i), cells[i].value);
    GalleryEntry<S> e;
    e.name = "example11";
    e.depth = depth;
    e.scene = scene_of<S>(cx, std::move(v));
    e.expected.verdict = RigidityStatus::non_rigid;
    return e;
}

// distance to the level-k middle-thirds set, with the staircase barycenter:
// tents over the removed gaps, constant barycenter per gap.
template <class S>
GalleryEntry<S> cantor_truncation(int depth) {
    if (depth < 1) throw Error("depth must be at least 1");
    if (depth > 8) throw Error("depth capped at 8");
    struct Gap {
        S lo, hi, level;
    };
    std::vector<Gap> gaps;
    auto collect = [&](auto&& self, const S& lo, const S& hi, const S& vlo, const S& vhi,
                       int gen) -> void {
        if (gen > depth) return;
        S third = (hi - lo) / S(3);
        S mid_val = (vlo + vhi) / S(2);
        gaps.push_back({lo + third, hi - third, mid_val});
        self(self, lo, lo + third, vlo, mid_val, gen + 1);
        self(self, hi - third, hi, mid_val, vhi, gen + 1);
    };
    collect(collect, S(0), S(1), S(0), S(1), 1);
    std::sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.lo < b.lo; });
    std::vector<std::pair<S, S>> intervals;
    for (const Gap& g : gaps) {
        S mid = (g.lo + g.hi) / S(2);
        intervals.push_back({g.lo, mid});
        intervals.push_back({mid, g.hi});
    }
    auto cx = build_complex_1d<S>(intervals);
    PwAffineField<S> v(cx), b(cx);
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        const Gap& g = gaps[k];
        int up = static_cast<int>(2 * k), down = up + 1;
        v.set(up, pt<S>(S(1), S(0)), -g.lo);   // z - lo
        v.set(down, pt<S>(S(-1), S(0)), g.hi); // hi - z
        b.set_constant(up, g.level);
        b.set_constant(down, g.level);
    }
    GalleryEntry<S> e;
    e.name = "cantor";
    e.depth = depth;
    e.scene = scene_of<S>(cx, std::move(v), std::move(b));
    e.expected.verdict = depth == 1 ? RigidityStatus::rigid : RigidityStatus::non_rigid;
    e.expected.equality_case = true;
    return e;
}

// cumulative steps at the first N rationals of an enumeration of [0,1)
template <class S>
GalleryEntry<S> rational_steps(int count) {
    if (count < 2) throw Error("depth must be at least 2");
    if (count > 24) throw Error("depth capped at 24");
    std::vector<S> qs{S(0)};
    for (long den = 2; static_cast<int>(qs.size()) < count; ++den)
        for (long num = 1; num < den && static_cast<int>(qs.size()) < count; ++num) {
            S q = S(num) / S(den);
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
        }
    std::vector<S> alphas;
    for (int h = 0; h < count; ++h) alphas.push_back(S(1) / S(1L << (h + 1)));
    std::vector<S> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<S, S>> intervals;
    for (int i = 0; i < count; ++i)
        intervals.push_back({sorted[i], i + 1 < count ? sorted[i + 1] : S(1)});
    auto cx = build_complex_1d<S>(intervals);
    PwAffineField<S> v(cx), b(cx);
    for (int i = 0; i < count; ++i) {
        S val(0);
        for (int h = 0; h < count; ++h)
            if (qs[h] <= sorted[i]) val += alphas[h];
        v.set_constant(i, val);
        b.set_constant(i, val / S(2));
    }
    GalleryEntry<S> e;
    e.name = "rationals";
    e.depth = count;
    e.scene = scene_of<S>(cx, std::move(v), std::move(b));
    e.expected.verdict = RigidityStatus::non_rigid;
    e.expected.equality_case = true;
    return e;
}

// region between 0 and a step profile: the lambda = 0 jump-part construction
template <class S>
GalleryEntry<S> prop14_step() {
    auto cx = build_complex_1d<S>({{S(0), S(1) / S(2)}, {S(1) / S(2), S(1)}});
    PwAffineField<S> v(cx), b(cx);
    v.set_constant(0, S(1));
    v.set_constant(1, S(2));
    b.set_constant(0, S(1) / S(2));
    b.set_constant(1, S(1));
    GalleryEntry<S> e;
    e.name = "prop14";
    e.scene = scene_of<S>(cx, std::move(v), std::move(b));
    e.expected.verdict = RigidityStatus::non_rigid;
    e.expected.epsilon = "1";
    e.expected.equality_case = true;
    return e;
}

}  // namespace gallery_detail

template <class S>
GalleryEntry<S> gallery_entry(const std::string& name, int depth) {
    using namespace gallery_detail;
    if (name == "fig1a") return step_profile<S>();
    if (name == "fig1b") return pinched_tent<S>();
    if (name == "casetta" || name == "casetta-analog") return tapered_wall<S>();
    if (name == "salsicciotto" || name == "salsicciotto-analog") return pinched_center<S>();
    if (name == "example11") return nested_diamonds<S>(depth > 0 ? depth : 1);
    if (name == "cantor") return cantor_truncation<S>(depth > 0 ? depth : 1);
    if (name == "rationals") return rational_steps<S>(depth > 0 ? depth : 5);
    if (name == "prop14") return prop14_step<S>();
    throw Error("unknown gallery name '" + name + "'");
}

}  // namespace steiner
