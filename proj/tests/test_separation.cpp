#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>

#include "oracles.hpp"
#include "thetacut/exact.hpp"
#include "thetacut/generators.hpp"
#include "thetacut/model.hpp"
#include "thetacut/rng.hpp"
#include "thetacut/separation.hpp"
#include "thetacut/solver.hpp"

using namespace thetacut;

namespace {

Eigen::MatrixXd matrix_of(const StableSetMatrix& m) {
    Eigen::MatrixXd Y(m.n + 1, m.n + 1);
    for (int r = 0; r <= m.n; ++r)
        for (int c = 0; c <= m.n; ++c) Y(r, c) = m.entry(r, c);
    return Y;
}

Eigen::MatrixXd matrix_of(const ColoringMatrix& m) {
    Eigen::MatrixXd Y(m.n + 1, m.n + 1);
    for (int r = 0; r <= m.n; ++r)
        for (int c = 0; c <= m.n; ++c) Y(r, c) = m.entry(r, c);
    return Y;
}

// a symmetric pseudo-random matrix with the structural zeros of the model,
// exercising the oracles away from feasibility
Eigen::MatrixXd scrambled_matrix(const Graph& g, std::uint64_t seed) {
    const int n = g.num_vertices();
    Xoshiro256 rng(seed);
    Eigen::MatrixXd Y(n + 1, n + 1);
    for (int r = 0; r <= n; ++r)
        for (int c = r; c <= n; ++c) Y(r, c) = Y(c, r) = rng.next_double() * 1.6 - 0.5;
    Y(0, 0) = 1.0;
    for (int i = 1; i <= n; ++i) Y(i, i) = std::abs(Y(i, i));
    for (auto [u, v] : g.edges()) Y(u + 1, v + 1) = Y(v + 1, u + 1) = 0.0;
    return Y;
}

// sorted (witness, amount) fingerprints for set comparison
std::vector<std::pair<std::vector<int>, double>> fingerprint(const std::vector<Violation>& vs) {
    std::vector<std::pair<std::vector<int>, double>> out;
    for (const auto& v : vs) out.emplace_back(v.cut.witness, v.amount);
    std::sort(out.begin(), out.end());
    return out;
}

void check_equal(const std::vector<Violation>& got,
                 std::vector<std::pair<std::vector<int>, double>> expected) {
    std::sort(expected.begin(), expected.end());
    auto fp = fingerprint(got);
    REQUIRE(fp.size() == expected.size());
    for (std::size_t i = 0; i < fp.size(); ++i) {
        CHECK(fp[i].first == expected[i].first);
        CHECK(fp[i].second == doctest::Approx(expected[i].second).epsilon(1e-12));
    }
}

double Ym(const Eigen::MatrixXd& Y, int u, int v) { return Y(u + 1, v + 1); }

} // namespace

TEST_CASE("sep_nonneg basics") {
    Graph g(4, {{0, 1}});
    Eigen::MatrixXd Y = Eigen::MatrixXd::Constant(5, 5, 0.2);
    CHECK(sep_nonneg(Y, g).empty());
    Y(2 + 1, 3 + 1) = Y(3 + 1, 2 + 1) = -0.1; // vertices 2,3
    auto v = sep_nonneg(Y, g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].amount == doctest::Approx(0.1));
    CHECK(v[0].cut.witness == std::vector<int>{2, 3});
    // never on edges: corrupt the edge entry, still nothing
    Y(1, 2) = Y(2, 1) = -0.5;
    CHECK(sep_nonneg(Y, g).size() == 1);
    // eps suppresses noise-level entries
    Y(2 + 1, 3 + 1) = Y(3 + 1, 2 + 1) = -1e-9;
    CHECK(sep_nonneg(Y, g, 1e-7).empty());
}

TEST_CASE("sep_nonneg equals a full scan on random matrices") {
    Graph g = gen_erdos_renyi(10, 0.4, 17);
    Eigen::MatrixXd Y = scrambled_matrix(g, 3);
    std::vector<std::pair<std::vector<int>, double>> expected;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (!g.is_edge(i, j) && Ym(Y, i, j) < 0)
                expected.push_back({{i, j}, -Ym(Y, i, j)});
    check_equal(sep_nonneg(Y, g), expected);
}

TEST_CASE("triangle separation equals brute force") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = gen_erdos_renyi(9, 0.35, seed);
        const int n = 9;
        Eigen::MatrixXd Y = scrambled_matrix(g, seed + 50);

        std::vector<std::pair<std::vector<int>, double>> exp_a, exp_b;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    const double a = Ym(Y, i, k) + Ym(Y, j, k) - Ym(Y, i, j) - Ym(Y, k, k);
                    if (a > 0) exp_a.push_back({{i, j, k}, a});
                }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const double b = Ym(Y, i, i) + Ym(Y, j, j) + Ym(Y, k, k) -
                                     Ym(Y, i, j) - Ym(Y, i, k) - Ym(Y, j, k) - 1.0;
                    if (b > 0) exp_b.push_back({{i, j, k}, b});
                }
        auto mixed = sep_triangle_stable(Y, g);
        std::vector<Violation> got_a, got_b;
        for (auto& v : mixed)
            (v.cut.family == CutFamily::tri_stab_a ? got_a : got_b).push_back(v);
        check_equal(got_a, exp_a);
        check_equal(got_b, exp_b);

        std::vector<std::pair<std::vector<int>, double>> exp_c;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    const double c = Ym(Y, i, j) + Ym(Y, j, k) - Ym(Y, i, k) - 1.0;
                    if (c > 0) exp_c.push_back({{i, k, j}, c});
                }
            }
        check_equal(sep_triangle_coloring(Y, g), exp_c);
    }
}

TEST_CASE("triangle families are empty on exact matrices") {
    Graph g = gen_erdos_renyi(8, 0.4, 21);
    for_each_stable_set_matrix(g, [&](const StableSetMatrix& sm) {
        Eigen::MatrixXd Y = matrix_of(sm);
        CHECK(sep_triangle_stable(Y, g).empty());
        CHECK(sep_nonneg(Y, g).empty());
    });
    for_each_coloring_matrix(g, [&](const ColoringMatrix& cm) {
        Eigen::MatrixXd Y = matrix_of(cm);
        CHECK(sep_triangle_coloring(Y, g).empty());
        CHECK(sep_nonneg(Y, g).empty());
    });
}

TEST_CASE("clique-vertex example: triangle plus outside vertex") {
    // triangle {0,1,2}, vertex 3 isolated
    Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(5, 5);
    for (int i : {0, 1, 2}) Y(i + 1, 3 + 1) = Y(3 + 1, i + 1) = 0.2;
    Y(3 + 1, 3 + 1) = 0.5;
    auto cliques = enumerate_cliques(g, 5);
    auto v = sep_clique_vertex(Y, g, cliques);
    REQUIRE(!v.empty());
    double best = 0;
    for (auto& viol : v) best = std::max(best, viol.amount);
    CHECK(best == doctest::Approx(0.1)); // 0.6 - 0.5 from Q = {0,1,2}
}

TEST_CASE("clique separation equals brute force over the clique list") {
    Graph g = gen_erdos_renyi(10, 0.45, 33);
    auto cliques = enumerate_cliques(g, 5);
    Eigen::MatrixXd Y = scrambled_matrix(g, 91);

    std::vector<std::pair<std::vector<int>, double>> exp_v, exp_j, exp_vc;
    for (const auto& q : cliques) {
        for (int j = 0; j < 10; ++j) {
            if (std::binary_search(q.begin(), q.end(), j)) continue;
            double s = -Ym(Y, j, j);
            double sc = 0;
            for (int i : q) {
                s += Ym(Y, i, j);
                sc += Ym(Y, i, j);
            }
            auto w = q;
            w.push_back(j);
            if (s > 0) exp_v.push_back({w, s});
            if (sc > 1) exp_vc.push_back({w, sc - 1});
        }
    }
    for (std::size_t a = 0; a < cliques.size(); ++a)
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            const auto& q = cliques[a];
            const auto& qp = cliques[b];
            if (q.size() + qp.size() > 6) continue;
            bool disjoint = true;
            for (int v : qp)
                if (std::binary_search(q.begin(), q.end(), v)) disjoint = false;
            if (!disjoint) continue;
            double s = -1.0;
            for (int i : q) s += Ym(Y, i, i);
            for (int i : qp) s += Ym(Y, i, i);
            for (int i : q)
                for (int j : qp) s -= Ym(Y, i, j);
            if (s > 0) {
                auto w = q;
                w.push_back(-1);
                w.insert(w.end(), qp.begin(), qp.end());
                exp_j.push_back({w, s});
            }
        }
    check_equal(sep_clique_vertex(Y, g, cliques), exp_v);
    check_equal(sep_clique_join(Y, g, cliques), exp_j);
    check_equal(sep_clique_vertex_coloring(Y, g, cliques), exp_vc);
}

TEST_CASE("clique-join on the counterexample values has no violation") {
    // two disjoint edges of C5 with diag 0.4, cross entries 0.209:
    // lhs 1.6 vs rhs 1 + 4*0.209 = 1.836
    Graph c5 = gen_cycle(5);
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(6, 6);
    Y(0, 0) = 1;
    for (int i = 1; i <= 5; ++i) {
        Y(i, i) = 0.4;
        Y(0, i) = Y(i, 0) = 0.4;
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j && !c5.is_edge(i - 1, j - 1)) Y(i, j) = 0.209;
    auto cliques = enumerate_cliques(c5, 5);
    CHECK(sep_clique_join(Y, c5, cliques).empty());
    // cross pairs of {1,2} x {3,4}: one of them is a cycle edge, so three
    // entries carry 0.209 and the lhs stays below the rhs of 1
    Cut join = make_clique_join_cut({0, 1}, {2, 3});
    CHECK(join.lhs([&](int r, int c) { return Y(r, c); }) == doctest::Approx(1.6 - 0.209 * 3));
}

TEST_CASE("clique families are empty on exact matrices") {
    Graph g = gen_erdos_renyi(8, 0.5, 77);
    auto cliques = enumerate_cliques(g, 5);
    for_each_stable_set_matrix(g, [&](const StableSetMatrix& sm) {
        Eigen::MatrixXd Y = matrix_of(sm);
        CHECK(sep_clique_vertex(Y, g, cliques).empty());
        CHECK(sep_clique_join(Y, g, cliques).empty());
    });
    for_each_coloring_matrix(g, [&](const ColoringMatrix& cm) {
        Eigen::MatrixXd Y = matrix_of(cm);
        CHECK(sep_clique_vertex_coloring(Y, g, cliques).empty());
    });
}

TEST_CASE("pair-sum separation on the solved theta(C5) optimum") {
    Graph c5 = gen_cycle(5);
    PrimalSolution sol = solve(build_theta_stable(c5));
    REQUIRE(sol.status == SolveStatus::optimal);
    auto cycles = enumerate_chordless_5cycles(c5);
    auto v = sep_c5_pairsum_stable(sol.Y, c5, cycles);
    REQUIRE(v.size() == 1);
    // circulant optimum: diag 1/sqrt(5), non-edges (1/sqrt(5))/phi, so the
    // pair sum is (5 - sqrt(5))/2 and the violation (3 - sqrt(5))/2
    CHECK(v[0].amount == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-6));
}

TEST_CASE("pair-sum coloring: all-ones matrix violates by 8") {
    Graph c5 = gen_cycle(5);
    Eigen::MatrixXd Y = Eigen::MatrixXd::Ones(6, 6);
    auto cycles = enumerate_chordless_5cycles(c5);
    auto v15 = sep_c5_pairsum_coloring(Y, c5, cycles);
    REQUIRE(v15.size() == 1);
    CHECK(v15[0].amount == doctest::Approx(8.0)); // all 10 pairs vs rhs 2
}

TEST_CASE("odd-cycle x vertex arithmetic examples") {
    // C5 plus one extra vertex adjacent to nothing
    Graph g(6, gen_cycle(5).edges());
    auto cycles = enumerate_chordless_5cycles(g);
    REQUIRE(cycles.size() == 1);

    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(7, 7);
    // (13): sum X_ik = 1.2 with X_kk = 0.5 -> violation 1.2 - 2*0.5 = 0.2
    for (int i = 0; i < 5; ++i) Y(i + 1, 5 + 1) = Y(5 + 1, i + 1) = 0.24;
    Y(5 + 1, 5 + 1) = 0.5;
    auto v = sep_oddcycle_vertex_stable(Y, g, cycles);
    REQUIRE(v.size() == 1);
    CHECK(v[0].cut.family == CutFamily::oddcycle_vertex_stab);
    CHECK(v[0].amount == doctest::Approx(0.2));

    // k with zero row and zero diagonal: (13) tight at 0, no violation
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(7, 7);
    CHECK(sep_oddcycle_vertex_stable(Z, g, cycles).empty());

    // all-ones violates the coloring variant by 5 - 2 = 3
    Eigen::MatrixXd J = Eigen::MatrixXd::Ones(7, 7);
    auto vc = sep_oddcycle_vertex_coloring(J, g, cycles);
    REQUIRE(vc.size() == 1);
    CHECK(vc[0].amount == doctest::Approx(3.0));
}

TEST_CASE("odd-cycle families equal brute force and hold on exact matrices") {
    Graph g = gen_erdos_renyi(9, 0.4, 106);
    auto cycles = enumerate_chordless_5cycles(g);
    REQUIRE(!cycles.empty()); // seed chosen to contain chordless 5-cycles
    Eigen::MatrixXd Y = scrambled_matrix(g, 7);

    std::vector<std::pair<std::vector<int>, double>> exp13, exp14, exp16;
    for (const auto& cyc : cycles)
        for (int k = 0; k < 9; ++k) {
            if (std::find(cyc.vertices.begin(), cyc.vertices.end(), k) != cyc.vertices.end())
                continue;
            double cross = 0, diag = 0;
            for (int i : cyc.vertices) {
                cross += Ym(Y, i, k);
                diag += Ym(Y, i, i);
            }
            auto w = cyc.vertices;
            w.push_back(k);
            const double v13 = cross - 2 * Ym(Y, k, k);
            const double v14 = diag + 2 * Ym(Y, k, k) - cross - 2;
            const double v16 = cross - 2;
            if (v13 > 0) exp13.push_back({w, v13});
            if (v14 > 0) exp14.push_back({w, v14});
            if (v16 > 0) exp16.push_back({w, v16});
        }
    auto mixed = sep_oddcycle_vertex_stable(Y, g, cycles);
    std::vector<Violation> got13, got14;
    for (auto& v : mixed)
        (v.cut.family == CutFamily::oddcycle_vertex_stab ? got13 : got14).push_back(v);
    check_equal(got13, exp13);
    check_equal(got14, exp14);
    check_equal(sep_oddcycle_vertex_coloring(Y, g, cycles), exp16);

    for_each_stable_set_matrix(g, [&](const StableSetMatrix& sm) {
        Eigen::MatrixXd E = matrix_of(sm);
        CHECK(sep_oddcycle_vertex_stable(E, g, cycles).empty());
        CHECK(sep_c5_pairsum_stable(E, g, cycles).empty());
    });
    for_each_coloring_matrix(g, [&](const ColoringMatrix& cm) {
        Eigen::MatrixXd E = matrix_of(cm);
        CHECK(sep_oddcycle_vertex_coloring(E, g, cycles).empty());
        CHECK(sep_c5_pairsum_coloring(E, g, cycles).empty());
    });
}

TEST_CASE("emitted amounts re-evaluate exactly against Y") {
    Graph g = gen_erdos_renyi(10, 0.4, 55);
    Eigen::MatrixXd Y = scrambled_matrix(g, 44);
    auto cliques = enumerate_cliques(g, 5);
    auto cycles = enumerate_chordless_5cycles(g);
    std::vector<Violation> all;
    for (auto&& vs :
         {sep_nonneg(Y, g), sep_triangle_stable(Y, g), sep_clique_vertex(Y, g, cliques),
          sep_clique_join(Y, g, cliques), sep_c5_pairsum_stable(Y, g, cycles),
          sep_oddcycle_vertex_stable(Y, g, cycles)})
        all.insert(all.end(), vs.begin(), vs.end());
    REQUIRE(!all.empty());
    for (const auto& v : all) {
        CHECK(v.amount > 0);
        CHECK(v.cut.violation([&](int r, int c) { return Y(r, c); }) ==
              doctest::Approx(v.amount).epsilon(1e-12));
    }
}

TEST_CASE("select_cuts: nonneg passthrough, threshold, cap, ties") {
    const int n = 100;
    std::vector<FamilyViolations> fams(2);
    fams[0].family = CutFamily::nonneg;
    for (int i = 0; i < 5; ++i)
        fams[0].violations.push_back({make_nonneg_cut(i, i + 1), 1e-6});
    fams[1].family = CutFamily::tri_stab_b;
    for (int i = 0; i < 500; ++i)
        fams[1].violations.push_back(
            {make_tri_stab_b_cut(i % 30, i % 30 + 1, i % 30 + 2 + i / 30), 0.03 + 1e-6 * i});
    Selection sel = select_cuts(fams, n, 0.025, 2 * n);
    CHECK(sel.cuts.size() == 5 + 200);
    CHECK(sel.above_threshold == 505);

    // all amounts below threshold: nothing from that family
    std::vector<FamilyViolations> weak(1);
    weak[0].family = CutFamily::tri_stab_b;
    weak[0].violations.push_back({make_tri_stab_b_cut(0, 1, 2), 0.02});
    CHECK(select_cuts(weak, n, 0.025, 2 * n).cuts.empty());

    // equal amounts break ties toward the smaller witness
    std::vector<FamilyViolations> tie(1);
    tie[0].family = CutFamily::tri_stab_b;
    tie[0].violations.push_back({make_tri_stab_b_cut(4, 5, 6), 0.5});
    tie[0].violations.push_back({make_tri_stab_b_cut(0, 1, 2), 0.5});
    Selection t = select_cuts(tie, n, 0.025, 1);
    REQUIRE(t.cuts.size() == 1);
    CHECK(t.cuts[0].witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("cuts emitted on solver iterates are valid (small soundness sweep)") {
    for (std::uint64_t seed : {5, 6}) {
        Graph g = gen_erdos_renyi(9, 0.45, seed);
        auto cliques = enumerate_cliques(g, 5);
        auto cycles = enumerate_chordless_5cycles(g);

        PrimalSolution sol = solve(build_theta_stable(g));
        REQUIRE(sol.status == SolveStatus::optimal);
        for (auto&& vs : {sep_nonneg(sol.Y, g), sep_triangle_stable(sol.Y, g),
                          sep_clique_vertex(sol.Y, g, cliques),
                          sep_clique_join(sol.Y, g, cliques),
                          sep_c5_pairsum_stable(sol.Y, g, cycles),
                          sep_oddcycle_vertex_stable(sol.Y, g, cycles)})
            for (const auto& v : vs) CHECK(check_cut_validity(v.cut, g, Problem::stable));

        PrimalSolution col = solve(build_theta_coloring(g));
        REQUIRE(col.status == SolveStatus::optimal);
        for (auto&& vs : {sep_nonneg(col.Y, g), sep_triangle_coloring(col.Y, g),
                          sep_clique_vertex_coloring(col.Y, g, cliques),
                          sep_c5_pairsum_coloring(col.Y, g, cycles),
                          sep_oddcycle_vertex_coloring(col.Y, g, cycles)})
            for (const auto& v : vs) CHECK(check_cut_validity(v.cut, g, Problem::coloring));
    }
}
