#pragma once

// Rigidity deciders. A slice-length field on a finite complex always falls
// in the class the polyhedral decider covers, so that path is the general
// one; the planar and no-vertical-boundary paths are independent routes that
// must agree with it on their own domains. Witness construction performs the
// single vertical translation over one side of a crossable cut.

#include "steiner/connectivity.hpp"
#include "steiner/perimeter.hpp"

#include <set>
#include <sstream>

namespace steiner {

enum class RigidityStatus { rigid, non_rigid, out_of_class };

inline const char* status_name(RigidityStatus s) {
    switch (s) {
        case RigidityStatus::rigid: return "rigid";
        case RigidityStatus::non_rigid: return "non_rigid";
        case RigidityStatus::out_of_class: return "out_of_class";
    }
    return "?";
}

enum class DeciderPath { automatic, planar, no_vertical, polyhedral };

inline const char* path_name(DeciderPath p) {
    switch (p) {
        case DeciderPath::automatic: return "auto";
        case DeciderPath::planar: return "planar";
        case DeciderPath::no_vertical: return "no_vertical";
        case DeciderPath::polyhedral: return "polyhedral";
    }
    return "?";
}

template <class S>
struct RigidityWitness {
    std::vector<int> cells_translated;   // G_plus
    std::vector<int> cells_fixed;        // G_minus
    std::optional<S> epsilon;            // nullopt: unconstrained (cut fully on {v^inf = 0})
    S t{};                               // chosen vertical offset
    PolyVerticalSet<S> set;              // the constructed equality case
};

template <class S>
struct RigidityVerdict {
    RigidityStatus status = RigidityStatus::out_of_class;
    std::string theorem_path;
    std::optional<RigidityWitness<S>> witness;
    std::string notes;
};

// ------------------------------------------------------------------
// Equality-case verification
// ------------------------------------------------------------------

template <class S>
struct EqualityReport {
    bool equality_case = false;
    std::vector<int> gradient_violations;  // cells with a nonzero barycenter gradient
    std::vector<int> jump_violations;      // facets where 2[b] > [v] somewhere on {v^inf > 0}
    std::string summary() const {
        std::ostringstream os;
        if (equality_case) {
            os << "equality case";
        } else {
            os << "not an equality case:";
            for (int c : gradient_violations) os << " grad(cell " << c << ")";
            for (int f : jump_violations) os << " jump(facet " << f << ")";
        }
        return os.str();
    }
};

// E is an equality case of the symmetrization inequality iff its barycenter
// has zero gradient on every cell and the barycenter jump stays within half
// the slice jump wherever the lower slice limit is positive.
template <class S>
EqualityReport<S> check_equality_case(const PolyVerticalSet<S>& E, const PwAffineField<S>& v) {
    if (!is_v_distributed(E, v)) throw Error("set is not v-distributed");
    auto [ve, b] = slice_and_barycenter(E);
    const auto& cx = *E.complex;
    EqualityReport<S> rep;
    for (int i = 0; i < cx.num_cells(); ++i) {
        if (!E.on(i)) continue;
        const auto& g = b.piece[i]->grad;
        if (!mode_traits<S>::is_zero(g[0]) || !mode_traits<S>::is_zero(g[1]))
            rep.gradient_violations.push_back(i);
    }
    for (int f = 0; f < cx.num_facets(); ++f) {
        const Facet<S>& fac = cx.facets[f];
        FacetClass<S> cls = classify_facet(ve, f);
        FacetTrace<S> bt = facet_trace(b, f);
        PwAffine<S> excess = S(2) * bt.jump_fn() - facet_trace(ve, f).jump_fn();
        if (fac.is_point()) {
            if (!cls.min_zero_ae && mode_traits<S>::lt(S(0), excess.eval(S(0))))
                rep.jump_violations.push_back(f);
        } else {
            PortionSet<S> pos = cls.min_zero.complement().drop_null();
            auto worst = excess.max_over(pos);
            if (worst && mode_traits<S>::lt(S(0), *worst)) rep.jump_violations.push_back(f);
        }
    }
    rep.equality_case = rep.gradient_violations.empty() && rep.jump_violations.empty();
    return rep;
}

// ------------------------------------------------------------------
// Deciders
// ------------------------------------------------------------------

namespace detail {

template <class S>
bool facet_crossable(const FacetClass<S>& cls) {
    return cls.min_zero_ae || (cls.essinf_jump && mode_traits<S>::lt(S(0), *cls.essinf_jump));
}

template <class S>
RigidityVerdict<S> decide_polyhedral(const PwAffineField<S>& v) {
    AdjacencyGraph<S> g = build_adjacency(v);
    std::vector<int> index(v.complex->num_cells(), -1);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(g.nodes.size()));
    for (const auto& e : g.edges)
        if (!facet_crossable(e.cls)) uf.unite(index[e.cell_a], index[e.cell_b]);

    RigidityVerdict<S> verdict;
    verdict.theorem_path = "polyhedral";
    int root0 = uf.find(index[g.nodes.front()]);
    std::vector<int> plus, minus;
    for (int c : g.nodes)
        (uf.find(index[c]) == root0 ? plus : minus).push_back(c);
    if (minus.empty()) {
        verdict.status = RigidityStatus::rigid;
        return verdict;
    }
    verdict.status = RigidityStatus::non_rigid;
    RigidityWitness<S> w;
    w.cells_translated = plus;
    w.cells_fixed = minus;
    std::set<int> plus_set(plus.begin(), plus.end());
    std::optional<S> eps;
    for (const auto& e : g.edges) {
        bool across = plus_set.count(e.cell_a) != plus_set.count(e.cell_b);
        if (!across) continue;
        if (e.cls.min_zero_ae) continue;  // no constraint from a fully vanishing facet
        if (!eps || *e.cls.essinf_jump < *eps) eps = e.cls.essinf_jump;
    }
    w.epsilon = eps;
    w.t = eps ? *eps / S(2) : S(1);
    std::map<int, int> part;
    for (int c : plus) part[c] = 1;
    for (int c : minus) part[c] = 0;
    w.set = translate_over_partition(v, part, {{1, w.t}, {0, S(0)}});
    verdict.witness = std::move(w);
    return verdict;
}

template <class S>
RigidityVerdict<S> decide_planar(const PwAffineField<S>& v) {
    if (v.complex->dim != 1) throw Error("planar decider needs a one-dimensional base");
    RigidityVerdict<S> verdict;
    verdict.theorem_path = "planar";
    // support must form a single chain of adjacent intervals
    std::vector<int> sup = v.support();
    std::sort(sup.begin(), sup.end(), [&](int a, int b) {
        return v.complex->cells[a].poly[0][0] < v.complex->cells[b].poly[0][0];
    });
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; ok && i + 1 < sup.size(); ++i) {
        const S& b_prev = v.complex->cells[sup[i]].poly[1][0];
        const S& a_next = v.complex->cells[sup[i + 1]].poly[0][0];
        if (!mode_traits<S>::eq(b_prev, a_next)) {
            ok = false;
            why = "support is not an interval";
        }
    }
    for (int f = 0; ok && f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        FacetTrace<S> t = facet_trace(v, f);
        if (!mode_traits<S>::is_zero(t.jump_fn().eval(S(0)))) {
            ok = false;
            why = "slice length jumps inside the support";
        } else if (mode_traits<S>::is_zero(t.inf_fn().eval(S(0)))) {
            ok = false;
            why = "slice length vanishes inside the support";
        }
    }
    if (ok) {
        verdict.status = RigidityStatus::rigid;
        return verdict;
    }
    verdict = decide_polyhedral(v);  // reuse the witness machinery
    verdict.theorem_path = "planar";
    verdict.notes = why;
    return verdict;
}

template <class S>
RigidityVerdict<S> decide_no_vertical(const PwAffineField<S>& v) {
    // applicability: no jump over the positive-lower-limit part of any facet
    for (int f = 0; f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        FacetClass<S> cls = classify_facet(v, f);
        if (fac.is_point()) {
            if (!cls.min_zero_ae && !cls.jump_pos.is_empty())
                throw Error("no-vertical decider inapplicable: jump over a positive section");
        } else {
            PortionSet<S> bad = cls.jump_pos.intersect(cls.min_zero.complement()).drop_null();
            if (!bad.is_empty())
                throw Error("no-vertical decider inapplicable: jump over a positive section");
        }
    }
    RigidityVerdict<S> verdict;
    verdict.theorem_path = "no_vertical";
    if (is_indecomposable_F(v)) {
        verdict.status = RigidityStatus::rigid;
        return verdict;
    }
    verdict = decide_polyhedral(v);
    verdict.theorem_path = "no_vertical";
    return verdict;
}

}  // namespace detail

template <class S>
RigidityVerdict<S> decide_rigidity(const PwAffineField<S>& v,
                                   DeciderPath path = DeciderPath::automatic) {
    try {
        validate_slice_field(v);
    } catch (const Error& e) {
        RigidityVerdict<S> out;
        out.status = RigidityStatus::out_of_class;
        out.theorem_path = path_name(path);
        out.notes = e.what();
        return out;
    }
    switch (path) {
        case DeciderPath::automatic:
        case DeciderPath::polyhedral:
            return detail::decide_polyhedral(v);
        case DeciderPath::planar:
            return detail::decide_planar(v);
        case DeciderPath::no_vertical:
            return detail::decide_no_vertical(v);
    }
    throw Error("unknown decider path");
}

// ------------------------------------------------------------------
// Mismatched stairway property
// ------------------------------------------------------------------

template <class S>
struct StairwayReport {
    bool holds = false;  // every admissible stairway has a mismatched step
    // when it fails: a valid stairway (partition + offsets)
    std::vector<int> cells_plus, cells_minus;
    S offset_plus{}, offset_minus{};
};

// On a finite complex any stairway cutting a cell interior is mismatched
// there, and among facet-aligned stairways a valid one exists iff a
// crossable cut exists; so the property holds iff the polyhedral decider
// reports rigid.
template <class S>
StairwayReport<S> mismatched_stairway_check(const PwAffineField<S>& v) {
    RigidityVerdict<S> verdict = decide_rigidity(v, DeciderPath::polyhedral);
    StairwayReport<S> rep;
    rep.holds = verdict.status == RigidityStatus::rigid;
    if (!rep.holds && verdict.witness) {
        rep.cells_plus = verdict.witness->cells_translated;
        rep.cells_minus = verdict.witness->cells_fixed;
        rep.offset_plus = verdict.witness->t;
        rep.offset_minus = S(0);
    }
    return rep;
}

// ------------------------------------------------------------------
// Witness construction and exhaustive search
// ------------------------------------------------------------------

// Translates F[v] vertically by t over the given cells. The cut must be
// crossable and t at most half its jump floor.
template <class S>
PolyVerticalSet<S> construct_witness(const PwAffineField<S>& v, const std::vector<int>& cut_cells,
                                     const S& t) {
    validate_slice_field(v);
    std::set<int> plus(cut_cells.begin(), cut_cells.end());
    std::vector<int> sup = v.support();
    bool nontrivial = false, proper = false;
    for (int c : sup) (plus.count(c) ? nontrivial : proper) = true;
    if (!nontrivial || !proper) throw Error("cut must be a nontrivial partition of the support");
    std::optional<S> eps;
    for (int f = 0; f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        if (plus.count(fac.left) == plus.count(fac.right)) continue;
        FacetClass<S> cls = classify_facet(v, f);
        if (!detail::facet_crossable(cls)) throw Error("cut is not crossable");
        if (cls.min_zero_ae) continue;
        if (!eps || *cls.essinf_jump < *eps) eps = cls.essinf_jump;
    }
    if (eps && t > *eps / S(2)) throw Error("offset exceeds half the cut jump floor");
    if (!(t > S(0))) throw Error("offset must be positive");
    std::map<int, int> part;
    for (int c : sup) part[c] = plus.count(c) ? 1 : 0;
    return translate_over_partition(v, part, {{1, t}, {0, S(0)}});
}

// Exhaustive search over all two-part cuts of the support and a grid of
// offsets; returns a non-translate equality case when one exists. Used to
// confirm rigid verdicts at desk scale.
template <class S>
std::optional<std::pair<std::vector<int>, S>> search_equality_witness(const PwAffineField<S>& v,
                                                                      int grid_radius = 32) {
    std::vector<int> sup = v.support();
    if (sup.size() < 2 || sup.size() > 20) return std::nullopt;
    // grid step: an eighth of the smallest positive jump value, else 1/8
    std::optional<S> min_jump;
    for (int f = 0; f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        FacetTrace<S> t = facet_trace(v, f);
        for (const S& j : {t.jump_fn().eval(S(0)), t.jump_fn().eval(S(1))})
            if (j > S(0) && (!min_jump || j < *min_jump)) min_jump = j;
    }
    S delta = (min_jump ? *min_jump : S(1)) / S(8);
    std::size_t m = sup.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
        if (mask & 1) continue;  // fix the first support cell on the zero side
        std::map<int, int> part;
        for (std::size_t i = 0; i < m; ++i) part[sup[i]] = (mask >> i) & 1 ? 1 : 0;
        for (int k = -grid_radius; k <= grid_radius; ++k) {
            if (k == 0) continue;
            S t = S(k) * delta;
            PolyVerticalSet<S> E = translate_over_partition(v, part, {{1, t}, {0, S(0)}});
            if (check_equality_case(E, v).equality_case) {
                std::vector<int> cut;
                for (std::size_t i = 0; i < m; ++i)
                    if ((mask >> i) & 1) cut.push_back(sup[i]);
                return std::make_pair(cut, t);
            }
        }
    }
    return std::nullopt;
}

}  // namespace steiner
