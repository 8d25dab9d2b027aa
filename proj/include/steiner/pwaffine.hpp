#pragma once

// Continuous piecewise-affine functions on the unit parameter interval, and
// finite unions of closed subintervals of it. Facet integrands (one-sided
// traces, jumps, min/max expressions, wall heights) are all values of this
// type; integration and portion extraction are exact in rational mode.

#include "steiner/number.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace steiner {

// Sorted disjoint closed subintervals of [0,1]. Degenerate intervals (a==b)
// are kept; whether they matter depends on the measure in play (length for
// segment facets, counting for point facets), which the caller knows.
template <class S>
struct PortionSet {
    std::vector<std::pair<S, S>> iv;

    static PortionSet whole() { return {{{S(0), S(1)}}}; }
    static PortionSet empty() { return {}; }

    bool is_empty() const { return iv.empty(); }

    S measure() const {
        S m(0);
        for (const auto& [a, b] : iv) m += b - a;
        return m;
    }

    void normalize() {
        std::sort(iv.begin(), iv.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<S, S>> out;
        for (auto& p : iv) {
            if (p.second < p.first) continue;
            if (!out.empty() && p.first <= out.back().second)
                out.back().second = std::max(out.back().second, p.second);
            else
                out.push_back(p);
        }
        iv = std::move(out);
    }

    PortionSet unite(const PortionSet& o) const {
        PortionSet r = *this;
        r.iv.insert(r.iv.end(), o.iv.begin(), o.iv.end());
        r.normalize();
        return r;
    }

    PortionSet intersect(const PortionSet& o) const {
        PortionSet r;
        for (const auto& [a1, b1] : iv)
            for (const auto& [a2, b2] : o.iv) {
                S a = std::max(a1, a2), b = std::min(b1, b2);
                if (a <= b) r.iv.push_back({a, b});
            }
        r.normalize();
        return r;
    }

    // Complement within [0,1], as closed intervals (closures of the open
    // complement components).
    PortionSet complement() const {
        PortionSet r;
        S lo(0);
        for (const auto& [a, b] : iv) {
            if (lo < a) r.iv.push_back({lo, a});
            lo = std::max(lo, b);
        }
        if (lo < S(1)) r.iv.push_back({lo, S(1)});
        r.normalize();
        return r;
    }

    // Positive-length components only.
    PortionSet drop_null() const {
        PortionSet r;
        for (const auto& p : iv)
            if (p.second > p.first) r.iv.push_back(p);
        return r;
    }
};

// f : [0,1] -> S, continuous, affine between consecutive nodes.
template <class S>
struct PwAffine {
    std::vector<S> xs;  // 0 = xs[0] < ... < xs[m-1] = 1
    std::vector<S> ys;

    static PwAffine constant(S c) { return {{S(0), S(1)}, {c, c}}; }
    static PwAffine affine(S at0, S at1) { return {{S(0), S(1)}, {std::move(at0), std::move(at1)}}; }

    S eval(const S& x) const {
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        std::size_t i = (it == xs.begin()) ? 0 : (it - xs.begin() - 1);
        if (i + 1 >= xs.size()) i = xs.size() - 2;
        const S &x0 = xs[i], &x1 = xs[i + 1];
        if (x1 == x0) return ys[i];
        S t = (x - x0) / (x1 - x0);
        return ys[i] + t * (ys[i + 1] - ys[i]);
    }

    PwAffine refined(const std::vector<S>& extra) const {
        std::vector<S> nx = xs;
        nx.insert(nx.end(), extra.begin(), extra.end());
        std::sort(nx.begin(), nx.end());
        nx.erase(std::unique(nx.begin(), nx.end()), nx.end());
        PwAffine r;
        for (const S& x : nx) {
            if (x < S(0) || x > S(1)) continue;
            r.xs.push_back(x);
            r.ys.push_back(eval(x));
        }
        return r;
    }

    friend PwAffine binop(const PwAffine& f, const PwAffine& g, bool take_min) {
        PwAffine F = f.refined(g.xs);
        PwAffine G = g.refined(f.xs);
        // insert crossing points of f - g inside each piece
        std::vector<S> crossings;
        for (std::size_t i = 0; i + 1 < F.xs.size(); ++i) {
            S d0 = F.ys[i] - G.ys[i], d1 = F.ys[i + 1] - G.ys[i + 1];
            if ((d0 > 0 && d1 < 0) || (d0 < 0 && d1 > 0)) {
                S t = d0 / (d0 - d1);
                crossings.push_back(F.xs[i] + t * (F.xs[i + 1] - F.xs[i]));
            }
        }
        F = F.refined(crossings);
        G = G.refined(crossings);
        PwAffine r;
        r.xs = F.xs;
        r.ys.resize(F.xs.size());
        for (std::size_t i = 0; i < F.xs.size(); ++i)
            r.ys[i] = take_min ? std::min(F.ys[i], G.ys[i]) : std::max(F.ys[i], G.ys[i]);
        return r;
    }

    friend PwAffine pw_min(const PwAffine& f, const PwAffine& g) { return binop(f, g, true); }
    friend PwAffine pw_max(const PwAffine& f, const PwAffine& g) { return binop(f, g, false); }

    friend PwAffine operator+(const PwAffine& f, const PwAffine& g) {
        PwAffine F = f.refined(g.xs), G = g.refined(f.xs);
        for (std::size_t i = 0; i < F.ys.size(); ++i) F.ys[i] += G.ys[i];
        return F;
    }
    friend PwAffine operator-(const PwAffine& f, const PwAffine& g) {
        PwAffine F = f.refined(g.xs), G = g.refined(f.xs);
        for (std::size_t i = 0; i < F.ys.size(); ++i) F.ys[i] -= G.ys[i];
        return F;
    }
    friend PwAffine operator*(const S& s, PwAffine f) {
        for (auto& y : f.ys) y = s * y;
        return f;
    }
    PwAffine negated() const { return S(-1) * *this; }

    friend PwAffine pw_abs(const PwAffine& f) { return pw_max(f, f.negated()); }

    S integral() const {
        S acc(0);
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            acc += (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]) / S(2);
        return acc;
    }

    S integral_over(const PortionSet<S>& P) const {
        S acc(0);
        for (const auto& [a, b] : P.iv) {
            if (!(a < b)) continue;
            PwAffine g = refined({a, b});
            for (std::size_t i = 0; i + 1 < g.xs.size(); ++i) {
                if (g.xs[i] >= a && g.xs[i + 1] <= b)
                    acc += (g.xs[i + 1] - g.xs[i]) * (g.ys[i] + g.ys[i + 1]) / S(2);
            }
        }
        return acc;
    }

    // {x : f(x) = 0}, exact; a union of nodes and whole pieces.
    PortionSet<S> zero_set() const {
        PortionSet<S> r;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const S &y0 = ys[i], &y1 = ys[i + 1];
            if (y0 == 0 && y1 == 0) {
                r.iv.push_back({xs[i], xs[i + 1]});
            } else if (y0 == 0) {
                r.iv.push_back({xs[i], xs[i]});
            } else if ((y0 > 0 && y1 < 0) || (y0 < 0 && y1 > 0)) {
                S t = y0 / (y0 - y1);
                S x = xs[i] + t * (xs[i + 1] - xs[i]);
                r.iv.push_back({x, x});
            }
        }
        if (ys.back() == 0) r.iv.push_back({S(1), S(1)});
        r.normalize();
        return r;
    }

    // Closure of {x : f(x) > c}.
    PortionSet<S> above(const S& c) const {
        PortionSet<S> r;
        PwAffine g = *this;
        for (auto& y : g.ys) y -= c;
        for (std::size_t i = 0; i + 1 < g.xs.size(); ++i) {
            S y0 = g.ys[i], y1 = g.ys[i + 1];
            if (y0 > 0 && y1 > 0) {
                r.iv.push_back({g.xs[i], g.xs[i + 1]});
            } else if (y0 > 0 || y1 > 0) {
                if (y0 == y1) continue;
                S t = y0 / (y0 - y1);
                S x = g.xs[i] + t * (g.xs[i + 1] - g.xs[i]);
                if (y0 > 0)
                    r.iv.push_back({g.xs[i], std::min(x, g.xs[i + 1])});
                else
                    r.iv.push_back({std::max(x, g.xs[i]), g.xs[i + 1]});
            }
        }
        r.normalize();
        return r;
    }

    // Minimum over the closure of a portion set (+infinity when empty,
    // reported as nullopt).
    std::optional<S> min_over(const PortionSet<S>& P) const {
        std::optional<S> best;
        auto consider = [&](const S& v) {
            if (!best || v < *best) best = v;
        };
        for (const auto& [a, b] : P.iv) {
            consider(eval(a));
            consider(eval(b));
            for (std::size_t i = 0; i < xs.size(); ++i)
                if (xs[i] > a && xs[i] < b) consider(ys[i]);
        }
        return best;
    }

    std::optional<S> max_over(const PortionSet<S>& P) const {
        auto neg = negated().min_over(P);
        if (!neg) return std::nullopt;
        return -*neg;
    }
};

}  // namespace steiner
