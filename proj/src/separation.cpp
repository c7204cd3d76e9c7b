/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/separation.hpp"

#include <algorithm>
#include <stdexcept>

#include "thetacut/rng.hpp"

namespace thetacut {

namespace {

// accumulate a coefficient on the (row <= col)-normalized entry
void put(std::vector<CutTerm>& coeffs, int r, int c, double v) {
    if (r > c) std::swap(r, c);
    for (auto& t : coeffs)
        if (t.row == r && t.col == c) {
            t.coeff += v;
            return;
        }
    coeffs.push_back({r, c, v});
}

int mi(int vertex) { return vertex + 1; } // vertex -> matrix index (0 = border)

double entry(const Eigen::MatrixXd& Y, int u, int v) { return Y(mi(u), mi(v)); }

void emit(std::vector<Violation>& out, Cut cut, const Eigen::MatrixXd& Y) {
    const double amount = cut.violation([&](int r, int c) { return Y(r, c); });
    if (amount > 0.0) out.push_back({std::move(cut), amount});
}

} // namespace

Cut make_nonneg_cut(int i, int j) {
    if (i > j) std::swap(i, j);
    Cut c;
    c.family = CutFamily::nonneg;
    c.coeffs = {{mi(i), mi(j), -1.0}};
    c.rhs = 0.0;
    c.witness = {i, j};
    return c;
}

Cut make_tri_stab_a_cut(int i, int j, int k) {
    if (i > j) std::swap(i, j);
    Cut c;
    c.family = CutFamily::tri_stab_a;
    put(c.coeffs, mi(i), mi(k), 1.0);
    put(c.coeffs, mi(j), mi(k), 1.0);
    put(c.coeffs, mi(i), mi(j), -1.0);
    put(c.coeffs, mi(k), mi(k), -1.0);
    c.rhs = 0.0;
    c.witness = {i, j, k}; // unordered pair first, distinguished vertex last
    return c;
}

Cut make_tri_stab_b_cut(int i, int j, int k) {
    int v[3] = {i, j, k};
    std::sort(v, v + 3);
    Cut c;
    c.family = CutFamily::tri_stab_b;
    for (int t = 0; t < 3; ++t) put(c.coeffs, mi(v[t]), mi(v[t]), 1.0);
    put(c.coeffs, mi(v[0]), mi(v[1]), -1.0);
    put(c.coeffs, mi(v[0]), mi(v[2]), -1.0);
    put(c.coeffs, mi(v[1]), mi(v[2]), -1.0);
    c.rhs = 1.0;
    c.witness = {v[0], v[1], v[2]};
    return c;
}

Cut make_tri_col_cut(int i, int j, int k) {
    if (i > k) std::swap(i, k);
    Cut c;
    c.family = CutFamily::tri_col;
    put(c.coeffs, mi(i), mi(j), 1.0);
    put(c.coeffs, mi(j), mi(k), 1.0);
    put(c.coeffs, mi(i), mi(k), -1.0);
    c.rhs = 1.0;
    c.witness = {i, k, j}; // endpoints sorted, middle vertex last
    return c;
}

Cut make_clique_vertex_cut(const VertexSet& q, int j) {
    Cut c;
    c.family = CutFamily::clique_vertex;
    for (int i : q) put(c.coeffs, mi(i), mi(j), 1.0);
    put(c.coeffs, mi(j), mi(j), -1.0);
    c.rhs = 0.0;
    c.witness = q;
    c.witness.push_back(j);
    return c;
}

Cut make_clique_join_cut(const VertexSet& q, const VertexSet& qp) {
    Cut c;
    c.family = CutFamily::clique_join;
    for (int i : q) put(c.coeffs, mi(i), mi(i), 1.0);
    for (int i : qp) put(c.coeffs, mi(i), mi(i), 1.0);
    for (int i : q)
        for (int j : qp) put(c.coeffs, mi(i), mi(j), -1.0);
    c.rhs = 1.0;
    c.witness = q;
    c.witness.push_back(-1); // separator between the two cliques
    c.witness.insert(c.witness.end(), qp.begin(), qp.end());
    return c;
}

Cut make_clique_vertex_col_cut(const VertexSet& q, int k) {
    Cut c;
    c.family = CutFamily::clique_vertex_col;
    for (int i : q) put(c.coeffs, mi(i), mi(k), 1.0);
    c.rhs = 1.0;
    c.witness = q;
    c.witness.push_back(k);
    return c;
}

Cut make_c5_pairsum_cut(const Cycle& cyc, bool coloring) {
    if (cyc.length() != 5) throw std::invalid_argument("pair-sum cut needs a 5-cycle");
    Cut c;
    c.family = coloring ? CutFamily::c5_pairsum_col : CutFamily::c5_pairsum_stab;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            put(c.coeffs, mi(cyc.vertices[a]), mi(cyc.vertices[b]), 1.0);
    c.rhs = coloring ? 2.0 : 1.0;
    c.witness = cyc.vertices;
    return c;
}

namespace {

Cut oddcycle_base(CutFamily family, const Cycle& cyc, int k) {
    if (cyc.length() % 2 == 0 || cyc.length() < 5)
        throw std::invalid_argument("odd cycle of length >= 5 required");
    Cut c;
    c.family = family;
    c.witness = cyc.vertices;
    c.witness.push_back(k);
    return c;
}

} // namespace

Cut make_oddcycle_vertex_stab_cut(const Cycle& cyc, int k) {
    Cut c = oddcycle_base(CutFamily::oddcycle_vertex_stab, cyc, k);
    const double h = (cyc.length() - 1) / 2;
    for (int i : cyc.vertices) put(c.coeffs, mi(i), mi(k), 1.0);
    put(c.coeffs, mi(k), mi(k), -h);
    c.rhs = 0.0;
    return c;
}

Cut make_oddcycle_vertex_stab_complement_cut(const Cycle& cyc, int k) {
    Cut c = oddcycle_base(CutFamily::oddcycle_vertex_stab_complement, cyc, k);
    const double h = (cyc.length() - 1) / 2;
    for (int i : cyc.vertices) put(c.coeffs, mi(i), mi(i), 1.0);
    put(c.coeffs, mi(k), mi(k), h);
    for (int i : cyc.vertices) put(c.coeffs, mi(i), mi(k), -1.0);
    c.rhs = h;
    return c;
}

Cut make_oddcycle_vertex_col_cut(const Cycle& cyc, int k) {
    Cut c = oddcycle_base(CutFamily::oddcycle_vertex_col, cyc, k);
    for (int i : cyc.vertices) put(c.coeffs, mi(i), mi(k), 1.0);
    c.rhs = (cyc.length() - 1) / 2;
    return c;
}

std::vector<Violation> sep_nonneg(const Eigen::MatrixXd& Y, const Graph& g, double eps) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.is_edge(i, j)) continue;
            if (entry(Y, i, j) < -eps) emit(out, make_nonneg_cut(i, j), Y);
        }
    return out;
}

std::vector<Violation> sep_triangle_stable(const Eigen::MatrixXd& Y, const Graph& g) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double yij = entry(Y, i, j);
            // (6a): one candidate per distinguished k outside {i,j}
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (entry(Y, i, k) + entry(Y, j, k) - yij - entry(Y, k, k) > 0)
                    emit(out, make_tri_stab_a_cut(i, j, k), Y);
            }
            // (6b): unordered triples
            for (int k = j + 1; k < n; ++k) {
                const double lhs = entry(Y, i, i) + entry(Y, j, j) + entry(Y, k, k) -
                                   yij - entry(Y, i, k) - entry(Y, j, k);
                if (lhs > 1.0) emit(out, make_tri_stab_b_cut(i, j, k), Y);
            }
        }
    return out;
}

std::vector<Violation> sep_triangle_coloring(const Eigen::MatrixXd& Y, const Graph& g) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (int j = 0; j < n; ++j) // middle vertex
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                if (entry(Y, i, j) + entry(Y, j, k) - entry(Y, i, k) > 1.0)
                    emit(out, make_tri_col_cut(i, j, k), Y);
            }
        }
    return out;
}

std::vector<Violation> sep_clique_vertex(const Eigen::MatrixXd& Y, const Graph& g,
                                         const std::vector<VertexSet>& cliques) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (const auto& q : cliques)
        for (int j = 0; j < n; ++j) {
            if (std::binary_search(q.begin(), q.end(), j)) continue;
            double lhs = -entry(Y, j, j);
            for (int i : q) lhs += entry(Y, i, j);
            if (lhs > 0) emit(out, make_clique_vertex_cut(q, j), Y);
        }
    return out;
}

std::vector<Violation> sep_clique_join(const Eigen::MatrixXd& Y, const Graph& g,
                                       const std::vector<VertexSet>& cliques,
                                       std::uint64_t seed) {
    (void)g;
    std::vector<Violation> out;
    const std::size_t K = cliques.size();
    if (K < 2) return out;

    auto disjoint = [](const VertexSet& a, const VertexSet& b) {
        auto it = a.begin();
        for (int v : b) {
            while (it != a.end() && *it < v) ++it;
            if (it != a.end() && *it == v) return false;
        }
        return true;
    };
    auto try_pair = [&](std::size_t a, std::size_t b) {
        const VertexSet& q = cliques[a];
        const VertexSet& qp = cliques[b];
        if (q.size() + qp.size() > 6 || !disjoint(q, qp)) return;
        double lhs = -1.0;
        for (int i : q) lhs += entry(Y, i, i);
        for (int i : qp) lhs += entry(Y, i, i);
        for (int i : q)
            for (int j : qp) lhs -= entry(Y, i, j);
        if (lhs > 0) emit(out, make_clique_join_cut(q, qp), Y);
    };

    constexpr std::size_t kPairBudget = 1000000;
    if (K * (K - 1) / 2 <= kPairBudget) {
        for (std::size_t a = 0; a < K; ++a)
            for (std::size_t b = a + 1; b < K; ++b) try_pair(a, b);
    } else {
        Xoshiro256 rng(seed);
        for (std::size_t t = 0; t < kPairBudget; ++t) {
            std::size_t a = rng.next_below(K);
            std::size_t b = rng.next_below(K);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            try_pair(a, b);
        }
        // sampling may emit the same pair twice
        std::sort(out.begin(), out.end(),
                  [](const Violation& x, const Violation& y) { return witness_less(x.cut, y.cut); });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const Violation& x, const Violation& y) {
                                  return witness_equal(x.cut, y.cut);
                              }),
                  out.end());
    }
    return out;
}

std::vector<Violation> sep_clique_vertex_coloring(const Eigen::MatrixXd& Y,
                                                  const Graph& g,
                                                  const std::vector<VertexSet>& cliques) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (const auto& q : cliques)
        for (int k = 0; k < n; ++k) {
            if (std::binary_search(q.begin(), q.end(), k)) continue;
            double lhs = 0.0;
            for (int i : q) lhs += entry(Y, i, k);
            if (lhs > 1.0) emit(out, make_clique_vertex_col_cut(q, k), Y);
        }
    return out;
}

std::vector<Violation> sep_c5_pairsum_stable(const Eigen::MatrixXd& Y, const Graph& g,
                                             const std::vector<Cycle>& cycles) {
    (void)g;
    std::vector<Violation> out;
    for (const auto& cyc : cycles) {
        if (cyc.length() != 5) continue;
        double lhs = 0.0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                lhs += entry(Y, cyc.vertices[a], cyc.vertices[b]);
        if (lhs > 1.0) emit(out, make_c5_pairsum_cut(cyc, false), Y);
    }
    return out;
}

std::vector<Violation> sep_c5_pairsum_coloring(const Eigen::MatrixXd& Y, const Graph& g,
                                               const std::vector<Cycle>& cycles) {
    (void)g;
    std::vector<Violation> out;
    for (const auto& cyc : cycles) {
        if (cyc.length() != 5) continue;
        double lhs = 0.0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                lhs += entry(Y, cyc.vertices[a], cyc.vertices[b]);
        if (lhs > 2.0) emit(out, make_c5_pairsum_cut(cyc, true), Y);
    }
    return out;
}

std::vector<Violation> sep_oddcycle_vertex_stable(const Eigen::MatrixXd& Y,
                                                  const Graph& g,
                                                  const std::vector<Cycle>& cycles) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (const auto& cyc : cycles) {
        const double h = (cyc.length() - 1) / 2;
        for (int k = 0; k < n; ++k) {
            if (std::find(cyc.vertices.begin(), cyc.vertices.end(), k) !=
                cyc.vertices.end())
                continue;
            double cross = 0.0, diag = 0.0;
            for (int i : cyc.vertices) {
                cross += entry(Y, i, k);
                diag += entry(Y, i, i);
            }
            if (cross - h * entry(Y, k, k) > 0)
                emit(out, make_oddcycle_vertex_stab_cut(cyc, k), Y);
            if (diag + h * entry(Y, k, k) - cross > h)
                emit(out, make_oddcycle_vertex_stab_complement_cut(cyc, k), Y);
        }
    }
    return out;
}

std::vector<Violation> sep_oddcycle_vertex_coloring(const Eigen::MatrixXd& Y,
                                                    const Graph& g,
                                                    const std::vector<Cycle>& cycles) {
    std::vector<Violation> out;
    const int n = g.num_vertices();
    for (const auto& cyc : cycles) {
        const double h = (cyc.length() - 1) / 2;
        for (int k = 0; k < n; ++k) {
            if (std::find(cyc.vertices.begin(), cyc.vertices.end(), k) !=
                cyc.vertices.end())
                continue;
            double cross = 0.0;
            for (int i : cyc.vertices) cross += entry(Y, i, k);
            if (cross > h) emit(out, make_oddcycle_vertex_col_cut(cyc, k), Y);
        }
    }
    return out;
}

Selection select_cuts(std::vector<FamilyViolations> by_family, int n, double threshold,
                      int cap_per_family) {
    if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");
    (void)n;
    Selection sel;
    for (auto& fam : by_family) {
        auto& v = fam.violations;
        if (fam.family == CutFamily::nonneg) {
            sel.above_threshold += v.size();
            for (auto& viol : v) sel.cuts.push_back(std::move(viol.cut));
            continue;
        }
        v.erase(std::remove_if(v.begin(), v.end(),
                               [&](const Violation& x) { return x.amount <= threshold; }),
                v.end());
        sel.above_threshold += v.size();
        std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
            if (a.amount != b.amount) return a.amount > b.amount;
            return witness_less(a.cut, b.cut);
        });
        const std::size_t keep = std::min<std::size_t>(v.size(), cap_per_family);
        for (std::size_t t = 0; t < keep; ++t) sel.cuts.push_back(std::move(v[t].cut));
    }
    return sel;
}

} // namespace thetacut
