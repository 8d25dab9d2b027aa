#pragma once

// Seeded random scenes for property tests and the acceptance suite. All
// coordinates and field values live on coarse rational grids, so that in
// rational mode every decision the toolkit makes about them is exact and the
// gap between "equality case" and "strict inequality" stays far above the
// double-mode tolerances.

#include "steiner/field.hpp"

#include <random>

namespace steiner {

struct SceneGenOptions {
    int dim = 1;
    int max_cells = 8;
    bool continuous = false;   // no jumps across interior facets
    bool pwconst_b = false;    // piecewise-constant barycenter
    bool allow_zeros = true;   // let v touch zero at vertices
    bool allow_gaps = true;    // leave some cells off the support
    bool axis_aligned = true;  // dim 2: rectangle subdivisions only
};

template <class S>
struct RandomScene {
    ComplexPtr<S> complex;
    PwAffineField<S> v, b;
};

namespace detail {

inline long rnd_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

template <class S>
S grid(std::mt19937_64& rng, long lo_num, long hi_num, long den) {
    return S(rnd_int(rng, lo_num, hi_num)) / S(den);
}

template <class S>
RandomScene<S> random_scene_1d(std::mt19937_64& rng, const SceneGenOptions& opt) {
    int ncells = static_cast<int>(rnd_int(rng, 1, opt.max_cells));
    std::vector<long> cuts{0, 32};
    while (static_cast<int>(cuts.size()) < ncells + 1) {
        long c = rnd_int(rng, 1, 31);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<S, S>> intervals;
    for (int i = 0; i < ncells; ++i)
        intervals.push_back({S(cuts[i]) / S(32), S(cuts[i + 1]) / S(32)});
    auto cx = build_complex_1d<S>(intervals);

    RandomScene<S> scene;
    scene.complex = cx;
    scene.v = PwAffineField<S>(cx);
    scene.b = PwAffineField<S>(cx);

    std::vector<bool> support(ncells, true);
    if (opt.allow_gaps && ncells >= 2 && rnd_int(rng, 0, 3) == 0)
        support[rnd_int(rng, 0, ncells - 1)] = false;
    bool any = false;
    for (bool s : support) any = any || s;
    if (!any) support[0] = true;

    auto value = [&](bool can_zero) -> S {
        if (can_zero && rnd_int(rng, 0, 4) == 0) return S(0);
        return grid<S>(rng, 1, 16, 8);
    };
    // node values, shared when continuity is requested
    std::vector<S> node_vals(ncells + 1);
    for (int i = 0; i <= ncells; ++i) node_vals[i] = value(opt.allow_zeros);
    for (int i = 0; i < ncells; ++i) {
        if (!support[i]) continue;
        S a = intervals[i].first, b = intervals[i].second;
        S va = opt.continuous ? node_vals[i] : value(opt.allow_zeros);
        S vb = opt.continuous ? node_vals[i + 1] : value(opt.allow_zeros);
        if (va == 0 && vb == 0) vb = S(1) / S(2);
        S g = (vb - va) / (b - a);
        scene.v.set(i, pt<S>(g, S(0)), va - g * a);
        if (opt.pwconst_b) {
            scene.b.set_constant(i, grid<S>(rng, -16, 16, 8));
        } else {
            S ba = grid<S>(rng, -16, 16, 8), bb = grid<S>(rng, -16, 16, 8);
            S bg = (bb - ba) / (b - a);
            scene.b.set(i, pt<S>(bg, S(0)), ba - bg * a);
        }
    }
    return scene;
}

template <class S>
RandomScene<S> random_scene_2d(std::mt19937_64& rng, const SceneGenOptions& opt) {
    // recursive rectangle subdivision of the unit square on a 1/16 grid
    struct R {
        long x0, y0, x1, y1;  // sixteenths
    };
    std::vector<R> rects{{0, 0, 16, 16}};
    while (static_cast<int>(rects.size()) < opt.max_cells) {
        std::size_t k = rng() % rects.size();
        R r = rects[k];
        bool vertical = rng() % 2 == 0;
        if (vertical && r.x1 - r.x0 < 2) vertical = false;
        if (!vertical && r.y1 - r.y0 < 2) {
            if (r.x1 - r.x0 < 2) break;
            vertical = true;
        }
        if (vertical) {
            long c = rnd_int(rng, r.x0 + 1, r.x1 - 1);
            rects[k] = {r.x0, r.y0, c, r.y1};
            rects.push_back({c, r.y0, r.x1, r.y1});
        } else {
            long c = rnd_int(rng, r.y0 + 1, r.y1 - 1);
            rects[k] = {r.x0, r.y0, r.x1, c};
            rects.push_back({r.x0, c, r.x1, r.y1});
        }
    }
    std::vector<Polygon<S>> polys;
    auto q = [](long n) { return S(n) / S(16); };
    bool triangulate = opt.continuous;  // affine continuity needs triangles
    for (const R& r : rects) {
        if (triangulate) {
            polys.push_back({pt<S>(q(r.x0), q(r.y0)), pt<S>(q(r.x1), q(r.y0)),
                             pt<S>(q(r.x1), q(r.y1))});
            polys.push_back({pt<S>(q(r.x0), q(r.y0)), pt<S>(q(r.x1), q(r.y1)),
                             pt<S>(q(r.x0), q(r.y1))});
        } else {
            polys.push_back({pt<S>(q(r.x0), q(r.y0)), pt<S>(q(r.x1), q(r.y0)),
                             pt<S>(q(r.x1), q(r.y1)), pt<S>(q(r.x0), q(r.y1))});
        }
    }
    auto cx = build_complex_2d<S>(polys);

    RandomScene<S> scene;
    scene.complex = cx;
    scene.v = PwAffineField<S>(cx);
    scene.b = PwAffineField<S>(cx);

    if (opt.continuous) {
        // one shared value per grid node; affine on each triangle
        std::map<std::pair<long, long>, S> node;
        auto node_val = [&](const Pt<S>& z) -> S {
            long xi = static_cast<long>(to_double(z[0]) * 16 + 0.5);
            long yi = static_cast<long>(to_double(z[1]) * 16 + 0.5);
            auto key = std::make_pair(xi, yi);
            auto it = node.find(key);
            if (it != node.end()) return it->second;
            S val = (opt.allow_zeros && rnd_int(rng, 0, 4) == 0) ? S(0) : grid<S>(rng, 1, 16, 8);
            node[key] = val;
            return val;
        };
        for (int i = 0; i < cx->num_cells(); ++i) {
            const auto& tri = cx->cells[i].poly;
            // affine through three vertex values (Cramer)
            const Pt<S>&A = tri[0], &B = tri[1], &C = tri[2];
            S fa = node_val(A), fb = node_val(B), fc = node_val(C);
            S det = (B[0] - A[0]) * (C[1] - A[1]) - (C[0] - A[0]) * (B[1] - A[1]);
            S gx = ((fb - fa) * (C[1] - A[1]) - (fc - fa) * (B[1] - A[1])) / det;
            S gy = ((fc - fa) * (B[0] - A[0]) - (fb - fa) * (C[0] - A[0])) / det;
            if (fa == 0 && fb == 0 && fc == 0) {
                scene.v.set_constant(i, S(1) / S(2));  // keep the slice field valid
            } else {
                scene.v.set(i, pt<S>(gx, gy), fa - gx * A[0] - gy * A[1]);
            }
            scene.b.set_constant(i, opt.pwconst_b ? grid<S>(rng, -16, 16, 8) : S(0));
        }
        return scene;
    }

    std::vector<bool> support(cx->num_cells(), true);
    if (opt.allow_gaps && cx->num_cells() >= 2 && rnd_int(rng, 0, 3) == 0)
        support[rnd_int(rng, 0, cx->num_cells() - 1)] = false;
    for (int i = 0; i < cx->num_cells(); ++i) {
        if (!support[i]) continue;
        Pt<S> g = pt<S>(grid<S>(rng, -8, 8, 8), grid<S>(rng, -8, 8, 8));
        // shift so the minimum over the cell sits at a chosen margin
        std::optional<S> lowest;
        for (const auto& z : cx->cells[i].poly) {
            S val = dot(g, z);
            if (!lowest || val < *lowest) lowest = val;
        }
        S margin = (opt.allow_zeros && rnd_int(rng, 0, 3) == 0) ? S(0) : grid<S>(rng, 1, 8, 8);
        scene.v.set(i, g, margin - *lowest);
        if (opt.pwconst_b) {
            scene.b.set_constant(i, grid<S>(rng, -16, 16, 8));
        } else {
            Pt<S> bg = pt<S>(grid<S>(rng, -8, 8, 8), grid<S>(rng, -8, 8, 8));
            scene.b.set(i, bg, grid<S>(rng, -16, 16, 8));
        }
    }
    return scene;
}

}  // namespace detail

template <class S>
RandomScene<S> random_scene(std::mt19937_64& rng, const SceneGenOptions& opt) {
    RandomScene<S> scene = opt.dim == 1 ? detail::random_scene_1d<S>(rng, opt)
                                        : detail::random_scene_2d<S>(rng, opt);
    validate_slice_field(scene.v);
    return scene;
}

}  // namespace steiner
