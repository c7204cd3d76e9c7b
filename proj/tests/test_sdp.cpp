#include <doctest.h>

#include <Eigen/Dense>
#include <sstream>

#include "oracles.hpp"
#include "thetacut/exact.hpp"
#include "thetacut/generators.hpp"
#include "thetacut/model.hpp"
#include "thetacut/separation.hpp"
#include "thetacut/solver.hpp"

using namespace thetacut;

namespace {

PrimalSolution solve_ok(const SdpModel& m, SolverConfig cfg = {}) {
    PrimalSolution sol = solve(m, cfg);
    REQUIRE((sol.status == SolveStatus::optimal || sol.status == SolveStatus::near_optimal));
    return sol;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// the paper's 5-cycle matrix: diag 0.4, edges 0, non-edges 0.209
Eigen::MatrixXd counterexample_matrix() {
    Graph c5 = gen_cycle(5);
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(6, 6);
    Y(0, 0) = 1.0;
    for (int i = 1; i <= 5; ++i) {
        Y(0, i) = Y(i, 0) = 0.4;
        Y(i, i) = 0.4;
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j && !c5.is_edge(i - 1, j - 1)) Y(i, j) = 0.209;
    return Y;
}

} // namespace

TEST_CASE("model invariants") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    CHECK(m.dim() == 6);
    CHECK(m.equalities().size() == 1 + 5 + 5);
    SdpModel mc = build_theta_coloring(c5);
    CHECK(mc.equalities().size() == 5 + 5 + 5);
    CHECK(mc.sense() == Sense::minimize);

    Cut bad = make_nonneg_cut(7, 8); // indices beyond dim
    CHECK_THROWS_AS(m.add_cuts({bad}), std::invalid_argument);
}

TEST_CASE("add_cuts deduplicates by (family, witness)") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    Cut c = make_nonneg_cut(0, 2);
    CHECK(m.add_cuts({c}) == 1);
    CHECK(m.add_cuts({c}) == 0);
    CHECK(m.cuts().size() == 1);
    CHECK(m.duplicates_skipped() == 1);
    CHECK(m.add_cuts({c, make_nonneg_cut(0, 3), make_nonneg_cut(0, 3)}) == 1);
    CHECK(m.cuts().size() == 2);
}

TEST_CASE("theta of empty and complete graphs") {
    for (int n : {3, 6}) {
        Graph empty(n, {});
        CHECK(solve_ok(build_theta_stable(empty)).objective == doctest::Approx(n).epsilon(1e-6));
        Graph kn = complete_graph(n);
        CHECK(solve_ok(build_theta_stable(kn)).objective == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(solve_ok(build_theta_coloring(kn)).objective == doctest::Approx(n).epsilon(1e-6));
    }
}

TEST_CASE("theta of odd cycles matches the closed form") {
    for (int n : {5, 7, 9, 11}) {
        const double expected = oracles::theta_odd_cycle(n);
        PrimalSolution sol = solve_ok(build_theta_stable(gen_cycle(n)));
        CHECK(sol.objective == doctest::Approx(expected).epsilon(1e-6));
    }
    // C5 is self-complementary, so the coloring relaxation lands on sqrt(5) too
    PrimalSolution col = solve_ok(build_theta_coloring(gen_cycle(5)));
    CHECK(col.objective == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("stable theta equals coloring theta of the complement") {
    for (std::uint64_t seed : {1, 2, 3, 4}) {
        Graph g = gen_erdos_renyi(12, 0.4, seed);
        const double a = solve_ok(build_theta_stable(g)).objective;
        const double b = solve_ok(build_theta_coloring(g.complement())).objective;
        CHECK(a == doctest::Approx(b).epsilon(1e-6));
    }
    Graph pet = oracles::petersen();
    CHECK(solve_ok(build_theta_stable(pet)).objective == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("solver residuals and certify agree") {
    Graph g = gen_erdos_renyi(15, 0.3, 5);
    SdpModel m = build_theta_stable(g);
    PrimalSolution sol = solve_ok(m);
    CHECK(sol.max_eq_violation <= 1e-7);
    CHECK(sol.min_eigenvalue >= -1e-9);
    CertifyReport rep = certify(sol, m, 1e-7);
    CHECK(rep.feasible);
    CHECK(rep.objective == doctest::Approx(sol.objective).epsilon(1e-9));
}

TEST_CASE("re-solving an unchanged model reproduces the objective") {
    Graph g = gen_erdos_renyi(10, 0.5, 8);
    SdpModel m = build_theta_stable(g);
    SolverConfig cfg;
    const double a = solve_ok(m, cfg).objective;
    const double b = solve_ok(m, cfg).objective;
    CHECK(std::abs(a - b) <= 2 * cfg.gaptol * (1 + std::abs(a)));
}

TEST_CASE("certify flags an infeasible matrix") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(6, 6);
    for (int i : {0, 1, 3})
        for (int j : {0, 1, 3}) Y(i, j) = 1.0; // stable set {1,3}, feasible
    Y(1, 2) = Y(2, 1) = 0.7;                   // corrupt an edge entry
    CertifyReport rep = certify(Y, m, 1e-8);
    CHECK_FALSE(rep.feasible);
    CHECK(rep.max_eq_violation == doctest::Approx(0.7));
}

TEST_CASE("hand-built stable set matrix is feasible with objective 2") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(6, 6);
    // stable set {1,3} (vertices 0 and 2): border and rank-1 block
    for (int i : {0, 1, 3})
        for (int j : {0, 1, 3}) Y(i, j) = 1.0;
    CertifyReport rep = certify(Y, m, 1e-12);
    CHECK(rep.feasible);
    CHECK(rep.objective == doctest::Approx(2.0));
}

TEST_CASE("paper counterexample matrix is feasible for the C5 model") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    Eigen::MatrixXd Y = counterexample_matrix();
    CertifyReport rep = certify(Y, m, 1e-9);
    CHECK(rep.min_eigenvalue >= -1e-9);
    CHECK(rep.max_eq_violation <= 1e-12);
    CHECK(rep.objective == doctest::Approx(2.0)); // sum x_i = 2 exactly

    // it satisfies the standard 5-cycle bound but violates the pair-sum cut
    Cut pairsum = make_c5_pairsum_cut(Cycle{{0, 1, 2, 3, 4}, true}, false);
    const double viol = pairsum.violation([&](int r, int c) { return Y(r, c); });
    CHECK(viol == doctest::Approx(0.045).epsilon(1e-12));
}

TEST_CASE("cut (12) drops theta(C5) to 2 and the lemma implication holds") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    CHECK(solve_ok(m).objective == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));

    Cut pairsum = make_c5_pairsum_cut(Cycle{{0, 1, 2, 3, 4}, true}, false);
    REQUIRE(m.add_cuts({pairsum}) == 1);
    PrimalSolution sol = solve_ok(m);
    CHECK(sol.objective == doctest::Approx(2.0).epsilon(1e-6));

    // witness expansion from the proof: a = (1,1,1,1,1,-2) gives
    // 2*pairsum - 3*sum(x) + 4 >= 0 for any feasible Y
    const Eigen::MatrixXd& Y = sol.Y;
    double pair_sum = 0.0, border_sum = 0.0;
    for (int i = 1; i <= 5; ++i) {
        border_sum += Y(0, i);
        for (int j = i + 1; j <= 5; ++j) pair_sum += Y(i, j);
    }
    CHECK(2 * pair_sum - 3 * border_sum + 4 >= -1e-9);
    CHECK(border_sum <= 2.0 + 1e-6);
}

TEST_CASE("adding zero cuts keeps the optimum") {
    Graph g = gen_erdos_renyi(8, 0.5, 2);
    SdpModel m = build_theta_stable(g);
    const double before = solve_ok(m).objective;
    m.add_cuts({});
    CHECK(solve_ok(m).objective == doctest::Approx(before).epsilon(1e-7));
}

TEST_CASE("monotonicity: valid stable cuts never increase the stable optimum") {
    Graph g = gen_erdos_renyi(9, 0.4, 6);
    SdpModel m = build_theta_stable(g);
    PrimalSolution sol = solve_ok(m);
    double prev = sol.objective;
    for (int round = 0; round < 2; ++round) {
        auto v6 = sep_triangle_stable(sol.Y, g);
        auto vnn = sep_nonneg(sol.Y, g);
        std::vector<Cut> cuts;
        for (auto& v : v6) cuts.push_back(v.cut);
        for (auto& v : vnn) cuts.push_back(v.cut);
        if (cuts.empty()) break;
        m.add_cuts(cuts);
        sol = solve_ok(m);
        CHECK(sol.objective <= prev + 1e-7 * (1 + std::abs(prev)));
        prev = sol.objective;
    }
    CHECK(prev >= exact_alpha(g) - 1e-6);
}

TEST_CASE("every stable set matrix stays feasible under stable-family cuts") {
    Graph g = gen_erdos_renyi(8, 0.35, 4);
    SdpModel m = build_theta_stable(g);
    PrimalSolution sol = solve_ok(m);
    std::vector<Cut> cuts;
    for (auto& v : sep_triangle_stable(sol.Y, g)) cuts.push_back(v.cut);
    for (auto& v : sep_nonneg(sol.Y, g)) cuts.push_back(v.cut);
    m.add_cuts(cuts);
    for_each_stable_set_matrix(g, [&](const StableSetMatrix& sm) {
        Eigen::MatrixXd Y(g.num_vertices() + 1, g.num_vertices() + 1);
        for (int r = 0; r <= g.num_vertices(); ++r)
            for (int c = 0; c <= g.num_vertices(); ++c) Y(r, c) = sm.entry(r, c);
        CHECK(certify(Y, m, 1e-9).feasible);
    });
}

TEST_CASE("coloring matrices stay feasible under coloring-family cuts") {
    Graph g = gen_erdos_renyi(7, 0.35, 14);
    SdpModel m = build_theta_coloring(g);
    PrimalSolution sol = solve_ok(m);
    std::vector<Cut> cuts;
    for (auto& v : sep_triangle_coloring(sol.Y, g)) cuts.push_back(v.cut);
    for (auto& v : sep_nonneg(sol.Y, g)) cuts.push_back(v.cut);
    m.add_cuts(cuts);
    for_each_coloring_matrix(g, [&](const ColoringMatrix& cm) {
        Eigen::MatrixXd Y(g.num_vertices() + 1, g.num_vertices() + 1);
        for (int r = 0; r <= g.num_vertices(); ++r)
            for (int c = 0; c <= g.num_vertices(); ++c) Y(r, c) = cm.entry(r, c);
        CHECK(certify(Y, m, 1e-9).feasible);
    });
}

TEST_CASE("benchmark theta values: torus(5) stable, myciel5 coloring") {
    CHECK(solve_ok(build_theta_stable(gen_torus(5))).objective ==
          doctest::Approx(11.180).epsilon(5e-4));
    CHECK(solve_ok(build_theta_coloring(gen_mycielski(3))).objective ==
          doctest::Approx(2.639).epsilon(5e-4));
}

TEST_CASE("min eigenvalue estimate: dense and Lanczos paths agree") {
    Eigen::MatrixXd A = Eigen::MatrixXd::Random(310, 310);
    Eigen::MatrixXd S = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(S, Eigen::EigenvaluesOnly);
    const double exact_min = dense.eigenvalues().minCoeff();
    CHECK(min_eigenvalue_estimate(S) == doctest::Approx(exact_min).epsilon(1e-6));
    Eigen::MatrixXd small = S.topLeftCorner(50, 50);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> d2(small, Eigen::EigenvaluesOnly);
    CHECK(min_eigenvalue_estimate(small) == doctest::Approx(d2.eigenvalues().minCoeff()));
}

TEST_CASE("model dump emits every row") {
    Graph c5 = gen_cycle(5);
    SdpModel m = build_theta_stable(c5);
    m.add_cuts({make_c5_pairsum_cut(Cycle{{0, 1, 2, 3, 4}, true}, false)});
    std::ostringstream out;
    dump_model(m, out);
    const std::string text = out.str();
    CHECK(text.find("sdp 6 max 11 1") == 0);
    CHECK(text.find("cutinfo 0 c5_pairsum_stab") != std::string::npos);
}
