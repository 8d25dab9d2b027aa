#pragma once

// Essential-disconnection decisions reduced to cuts of the cell-adjacency
// graph. The reduction is exact on cell complexes: cells are convex, hence
// indecomposable, so any partition interface relevant to the decision can be
// replaced by a cell-aligned one; a facet-union K cannot split a single
// convex cell. Randomized refinement tests exercise this claim.

#include "steiner/field.hpp"

#include <map>
#include <numeric>

namespace steiner {

template <class S>
struct AdjacencyEdge {
    int facet = -1;
    int cell_a = -1, cell_b = -1;
    FacetClass<S> cls;
};

template <class S>
struct AdjacencyGraph {
    std::vector<int> nodes;  // support cells
    std::vector<AdjacencyEdge<S>> edges;
};

template <class S>
AdjacencyGraph<S> build_adjacency(const PwAffineField<S>& v) {
    AdjacencyGraph<S> g;
    g.nodes = v.support();
    for (int f = 0; f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        g.edges.push_back({f, fac.left, fac.right, classify_facet(v, f)});
    }
    return g;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// A facet is fully covered by a portion selection when the uncovered part is
// null for the facet's measure: empty for point facets, zero length for
// segment facets (double mode: below 1e-12 of the parameter range).
template <class S>
bool portion_covers_facet(const BaseCellComplex<S>& cx, int facet, const PortionSet<S>& K) {
    if (cx.facets[facet].is_point()) return !K.is_empty();
    S uncovered = K.complement().measure();
    if constexpr (mode_traits<S>::exact)
        return uncovered <= 0;
    else
        return uncovered <= 1e-12;
}

}  // namespace detail

template <class S>
struct DisconnectionResult {
    bool disconnects = false;
    std::vector<int> part_plus, part_minus;  // witness cell partition
};

// K essentially disconnects G iff removing the facets fully covered by K
// (up to H^(n-2)-null) splits the adjacency graph of the cells of G.
template <class S>
DisconnectionResult<S> essentially_disconnects(const BaseCellComplex<S>& cx,
                                               const std::vector<int>& support_cells,
                                               const std::map<int, PortionSet<S>>& K) {
    if (support_cells.empty()) throw Error("empty support");
    std::vector<int> index(cx.num_cells(), -1);
    for (std::size_t i = 0; i < support_cells.size(); ++i) index[support_cells[i]] = static_cast<int>(i);
    detail::UnionFind uf(static_cast<int>(support_cells.size()));
    for (int f = 0; f < cx.num_facets(); ++f) {
        const Facet<S>& fac = cx.facets[f];
        if (!fac.interior()) continue;
        int a = index[fac.left], b = index[fac.right];
        if (a < 0 || b < 0) continue;
        auto it = K.find(f);
        bool removed = it != K.end() && detail::portion_covers_facet(cx, f, it->second);
        if (!removed) uf.unite(a, b);
    }
    DisconnectionResult<S> r;
    int root0 = uf.find(0);
    for (std::size_t i = 0; i < support_cells.size(); ++i) {
        if (uf.find(static_cast<int>(i)) == root0)
            r.part_plus.push_back(support_cells[i]);
        else
            r.part_minus.push_back(support_cells[i]);
    }
    r.disconnects = !r.part_minus.empty();
    if (!r.disconnects) {
        r.part_plus.clear();
    }
    return r;
}

// The symmetral of v is indecomposable iff the set where the lower slice
// limit vanishes does not essentially disconnect the support.
template <class S>
bool is_indecomposable_F(const PwAffineField<S>& v) {
    validate_slice_field(v);
    std::map<int, PortionSet<S>> K;
    for (int f = 0; f < v.complex->num_facets(); ++f) {
        const Facet<S>& fac = v.complex->facets[f];
        if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
        K[f] = classify_facet(v, f).min_zero;
    }
    return !essentially_disconnects(*v.complex, v.support(), K).disconnects;
}

}  // namespace steiner
