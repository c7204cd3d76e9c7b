/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace thetacut {

namespace {

// ---------------------------------------------------------------- bitsets

constexpr int kWords = 4; // capacity 256 vertices

struct Bits {
    std::array<std::uint64_t, kWords> w{};

    static Bits first_n(int n) {
        Bits b;
        for (int i = 0; i < kWords; ++i) {
            if (n >= 64) {
                b.w[i] = ~0ULL;
                n -= 64;
            } else if (n > 0) {
                b.w[i] = (1ULL << n) - 1;
                n = 0;
            }
        }
        return b;
    }

    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(1ULL << (v & 63)); }
    bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }

    Bits operator&(const Bits& o) const {
        Bits r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    Bits minus(const Bits& o) const {
        Bits r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    bool intersects(const Bits& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                fn(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

struct BitGraph {
    int n;
    std::vector<Bits> adj;        // open neighborhood
    std::vector<Bits> adj_closed; // N[v]

    explicit BitGraph(const Graph& g) : n(g.num_vertices()), adj(n), adj_closed(n) {
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v)) adj[v].set(u);
            adj_closed[v] = adj[v];
            adj_closed[v].set(v);
        }
    }
};

// alpha of a subgraph whose max degree is <= 2: disjoint paths and cycles
int alpha_deg2(const BitGraph& bg, Bits rem) {
    int total = 0;
    while (!rem.empty()) {
        const int start = rem.first();
        // walk the component, counting vertices and edges
        Bits comp;
        comp.set(start);
        Bits frontier = comp;
        while (!frontier.empty()) {
            Bits next;
            frontier.for_each([&](int v) {
                Bits nb = bg.adj[v] & rem;
                next = next | nb.minus(comp);
                comp = comp | nb;
            });
            comp.set(start);
            frontier = next;
        }
        int vertices = comp.count();
        int edge_ends = 0;
        comp.for_each([&](int v) { edge_ends += (bg.adj[v] & comp).count(); });
        const int edges = edge_ends / 2;
        // path: floor((k+1)/2); cycle (edges == vertices): floor(k/2)
        total += edges == vertices ? vertices / 2 : (vertices + 1) / 2;
        rem = rem.minus(comp);
    }
    return total;
}

// greedy clique cover: number of cliques needed is an upper bound on alpha
int clique_cover_bound(const BitGraph& bg, Bits rem) {
    int cliques = 0;
    while (!rem.empty()) {
        int v = rem.first();
        Bits common = bg.adj[v] & rem;
        rem.reset(v);
        while (!common.empty()) {
            const int u = common.first();
            rem.reset(u);
            common = common & bg.adj[u] & rem;
        }
        ++cliques;
    }
    return cliques;
}

int max_degree_vertex(const BitGraph& bg, const Bits& rem, int& max_deg) {
    int best = -1;
    max_deg = -1;
    rem.for_each([&](int v) {
        const int d = (bg.adj[v] & rem).count();
        if (d > max_deg) {
            max_deg = d;
            best = v;
        }
    });
    return best;
}

// returns max(lb, alpha(rem)); prunes any subtree that cannot beat lb
int mis_rec(const BitGraph& bg, Bits rem, int lb) {
    int taken = 0;
    for (;;) {
        if (rem.empty()) break;
        // vertices of degree <= 1 belong to some maximum stable set
        bool reduced = false;
        int pending = -1;
        rem.for_each([&](int v) {
            if (pending < 0 && (bg.adj[v] & rem).count() <= 1) pending = v;
        });
        if (pending >= 0) {
            rem = rem.minus(bg.adj_closed[pending]);
            ++taken;
            reduced = true;
        }
        if (reduced) continue;

        int max_deg = 0;
        const int v = max_degree_vertex(bg, rem, max_deg);
        if (max_deg <= 2) return std::max(lb, taken + alpha_deg2(bg, rem));

        if (taken + clique_cover_bound(bg, rem) <= lb) return lb;

        // include v
        int best = std::max(lb, taken + 1 + mis_rec(bg, rem.minus(bg.adj_closed[v]),
                                                    std::max(0, lb - taken - 1)));
        // exclude v
        Bits without = rem;
        without.reset(v);
        best = std::max(best, taken + mis_rec(bg, without, std::max(0, best - taken)));
        return best;
    }
    return std::max(lb, taken);
}

} // namespace

int exact_alpha(const Graph& g, int guard) {
    const int n = g.num_vertices();
    if (n > guard)
        throw GuardError("exact_alpha guard exceeded: n=" + std::to_string(n) +
                         " > " + std::to_string(guard));
    if (n > 64 * kWords) throw GuardError("exact_alpha capacity exceeded");
    if (n == 0) return 0;
    BitGraph bg(g);
    return mis_rec(bg, Bits::first_n(n), 0);
}

namespace {

struct ChiSearch {
    const BitGraph& bg;
    int k;
    std::vector<int> color;          // -1 = uncolored
    std::vector<Bits> class_members; // vertices per color class

    bool feasible(int colored) {
        if (colored == bg.n) return true;
        // most-saturated uncolored vertex (ties: higher degree)
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < bg.n; ++v) {
            if (color[v] >= 0) continue;
            int sat = 0;
            for (int c = 0; c < k; ++c)
                if (class_members[c].intersects(bg.adj[v])) ++sat;
            const int deg = bg.adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int used = 0;
        for (int c = 0; c < k; ++c)
            if (!class_members[c].empty()) ++used;
        // first-use symmetry breaking: at most one brand-new class is tried
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (class_members[c].intersects(bg.adj[pick])) continue;
            color[pick] = c;
            class_members[c].set(pick);
            if (feasible(colored + 1)) return true;
            class_members[c].reset(pick);
            color[pick] = -1;
        }
        return false;
    }
};

} // namespace

int exact_chi(const Graph& g, int guard) {
    const int n = g.num_vertices();
    if (n > guard)
        throw GuardError("exact_chi guard exceeded: n=" + std::to_string(n) +
                         " > " + std::to_string(guard));
    if (n == 0) return 0;
    if (g.num_edges() == 0) return 1;
    BitGraph bg(g);
    const int omega = exact_alpha(g.complement(), guard);
    for (int k = omega;; ++k) {
        ChiSearch search{bg, k, std::vector<int>(n, -1), std::vector<Bits>(k)};
        if (search.feasible(0)) return k;
    }
}

namespace {

void stable_sets_rec(const BitGraph& bg, int v, std::uint32_t chosen, Bits blocked,
                     const std::function<void(const StableSetMatrix&)>& fn) {
    if (v == bg.n) {
        fn(StableSetMatrix{bg.n, chosen});
        return;
    }
    stable_sets_rec(bg, v + 1, chosen, blocked, fn); // exclude v
    if (!blocked.test(v))
        stable_sets_rec(bg, v + 1, chosen | (1u << v), blocked | bg.adj[v], fn);
}

} // namespace

void for_each_stable_set_matrix(const Graph& g,
                                const std::function<void(const StableSetMatrix&)>& fn,
                                int guard) {
    const int n = g.num_vertices();
    if (n > guard || n > 20)
        throw GuardError("stable set enumeration guard exceeded: n=" + std::to_string(n));
    BitGraph bg(g);
    stable_sets_rec(bg, 0, 0, Bits{}, fn);
}

namespace {

// restricted-growth strings restricted to stable classes
void colorings_rec(const BitGraph& bg, int v, int used, std::vector<int>& color,
                   std::vector<Bits>& classes,
                   const std::function<void(const ColoringMatrix&)>& fn) {
    if (v == bg.n) {
        fn(ColoringMatrix{bg.n, used, color});
        return;
    }
    for (int c = 0; c <= used && c < bg.n; ++c) {
        const bool fresh = c == used;
        if (!fresh && classes[c].intersects(bg.adj[v])) continue;
        color[v] = c;
        classes[c].set(v);
        colorings_rec(bg, v + 1, used + (fresh ? 1 : 0), color, classes, fn);
        classes[c].reset(v);
    }
    color[v] = -1;
}

} // namespace

void for_each_coloring_matrix(const Graph& g,
                              const std::function<void(const ColoringMatrix&)>& fn,
                              int guard) {
    const int n = g.num_vertices();
    if (n > guard || n > 20)
        throw GuardError("coloring enumeration guard exceeded: n=" + std::to_string(n));
    if (n == 0) return;
    BitGraph bg(g);
    std::vector<int> color(n, -1);
    std::vector<Bits> classes(n);
    colorings_rec(bg, 0, 0, color, classes, fn);
}

std::size_t count_stable_sets(const Graph& g, int guard) {
    std::size_t c = 0;
    for_each_stable_set_matrix(g, [&](const StableSetMatrix&) { ++c; }, guard);
    return c;
}

std::size_t count_coloring_matrices(const Graph& g, int guard) {
    std::size_t c = 0;
    for_each_coloring_matrix(g, [&](const ColoringMatrix&) { ++c; }, guard);
    return c;
}

bool check_cut_validity(const Cut& cut, const Graph& g, Problem problem) {
    constexpr double kSlack = 1e-9;
    bool valid = true;
    if (problem == Problem::stable) {
        for_each_stable_set_matrix(g, [&](const StableSetMatrix& m) {
            if (valid && cut.violation([&](int r, int c) { return m.entry(r, c); }) > kSlack)
                valid = false;
        });
    } else {
        for_each_coloring_matrix(g, [&](const ColoringMatrix& m) {
            if (valid && cut.violation([&](int r, int c) { return m.entry(r, c); }) > kSlack)
                valid = false;
        });
    }
    return valid;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> index(g.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

} // namespace thetacut
