/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/generators.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thetacut/rng.hpp"

namespace thetacut {

std::string GenSpec::name() const {
    std::ostringstream s;
    switch (family) {
        case Family::near_regular: s << "reg_n" << n << "_r" << r << "_s" << seed; break;
        case Family::erdos_renyi: s << "rand_n" << n << "_p" << p << "_s" << seed; break;
        case Family::torus: s << "torus_" << d; break;
        case Family::queen: s << "queen_" << d << "_" << d; break;
        case Family::mycielski: s << "myciel" << levels + 2; break;
        case Family::cycle: s << "C" << length; break;
    }
    return s.str();
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::near_regular: return gen_near_regular(spec.n, spec.r, spec.seed);
        case Family::erdos_renyi: return gen_erdos_renyi(spec.n, spec.p, spec.seed);
        case Family::torus: return gen_torus(spec.d);
        case Family::queen: return gen_queen(spec.d);
        case Family::mycielski: return gen_mycielski(spec.levels);
        case Family::cycle: return gen_cycle(spec.length);
    }
    throw std::logic_error("unknown family");
}

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    Xoshiro256 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_near_regular(int n, int r, std::uint64_t seed) {
    if (n < 2 || r < 2) throw std::invalid_argument("near_regular needs n >= 2, r >= 2");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw std::invalid_argument("near_regular needs n*r even");
    const int nr = n * r;
    // random perfect matching: shuffle 0..nr-1, pair consecutive entries
    std::vector<int> perm(nr);
    std::iota(perm.begin(), perm.end(), 0);
    Xoshiro256 rng(seed);
    for (int i = nr - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nr; i += 2) {
        const int gu = perm[i] / r;     // consecutive groups of r vertices
        const int gv = perm[i + 1] / r;
        if (gu != gv) edges.emplace_back(gu, gv); // drop loops; ctor drops multiples
    }
    return Graph(n, edges);
}

Graph gen_torus(int d) {
    if (d < 3) throw std::invalid_argument("torus needs d >= 3");
    const int n = d * d;
    auto label = [d](int i, int j) { return (i % d) * d + (j % d); };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            edges.emplace_back(label(i, j), label(i + 1, j));
            edges.emplace_back(label(i, j), label(i, j + 1));
        }
    return Graph(n, edges);
}

Graph gen_queen(int d) {
    if (d < 1) throw std::invalid_argument("queen needs d >= 1");
    const int n = d * d;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        const int ra = a / d, ca = a % d;
        for (int b = a + 1; b < n; ++b) {
            const int rb = b / d, cb = b % d;
            if (ra == rb || ca == cb || ra - ca == rb - cb || ra + ca == rb + cb)
                edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Graph mycielskian(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.reserve(3 * edges.size() + n);
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v + n); // shadow of v sees neighbors of v
        edges.emplace_back(v, u + n);
    }
    const int apex = 2 * n;
    for (int v = 0; v < n; ++v) edges.emplace_back(v + n, apex);
    return Graph(2 * n + 1, edges);
}

Graph gen_mycielski(int levels) {
    if (levels < 0) throw std::invalid_argument("mycielski needs levels >= 0");
    Graph g(2, {{0, 1}});
    for (int t = 0; t <= levels; ++t) g = mycielskian(g);
    return g;
}

Graph gen_cycle(int length) {
    if (length < 3) throw std::invalid_argument("cycle needs length >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(length);
    for (int v = 0; v < length; ++v) edges.emplace_back(v, (v + 1) % length);
    return Graph(length, edges);
}

} // namespace thetacut
