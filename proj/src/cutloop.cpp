/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/cutloop.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace thetacut {

std::set<std::string> all_family_groups() {
    return {"nonneg", "tri", "clique", "c5", "oddcycle"};
}

long integer_bound_of(double bound, Problem problem) {
    // 1e-6 absorbs solver noise around integral optima
    return problem == Problem::stable ? static_cast<long>(std::floor(bound + 1e-6))
                                      : static_cast<long>(std::ceil(bound - 1e-6));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct PhaseDriver {
    const Graph& g;
    const LoopConfig& cfg;
    int phase;
    std::vector<VertexSet> cliques;   // phase 2 only
    std::vector<Cycle> cycles;        // phase 2 only

    bool enabled(const char* group) const { return cfg.groups.count(group) > 0; }

    // runs every active oracle for this phase and groups results by family
    std::vector<FamilyViolations> separate(const Eigen::MatrixXd& Y) const {
        std::vector<FamilyViolations> out;
        auto push = [&](CutFamily fam, std::vector<Violation> v) {
            out.push_back({fam, std::move(v)});
        };
        auto split = [&](std::vector<Violation> mixed, CutFamily a, CutFamily b) {
            std::vector<Violation> va, vb;
            for (auto& viol : mixed)
                (viol.cut.family == a ? va : vb).push_back(std::move(viol));
            push(a, std::move(va));
            push(b, std::move(vb));
        };
        const bool coloring = cfg.problem == Problem::coloring;
        if (phase == 1) {
            if (enabled("nonneg"))
                push(CutFamily::nonneg, sep_nonneg(Y, g, 10.0 * cfg.solver.feastol));
            if (enabled("tri")) {
                if (coloring) {
                    push(CutFamily::tri_col, sep_triangle_coloring(Y, g));
                } else {
                    split(sep_triangle_stable(Y, g), CutFamily::tri_stab_a,
                          CutFamily::tri_stab_b);
                }
            }
        } else {
            if (enabled("clique")) {
                if (coloring) {
                    push(CutFamily::clique_vertex_col,
                         sep_clique_vertex_coloring(Y, g, cliques));
                } else {
                    push(CutFamily::clique_vertex, sep_clique_vertex(Y, g, cliques));
                    push(CutFamily::clique_join, sep_clique_join(Y, g, cliques, cfg.seed));
                }
            }
            if (enabled("c5")) {
                if (coloring)
                    push(CutFamily::c5_pairsum_col, sep_c5_pairsum_coloring(Y, g, cycles));
                else
                    push(CutFamily::c5_pairsum_stab, sep_c5_pairsum_stable(Y, g, cycles));
            }
            if (enabled("oddcycle")) {
                if (coloring)
                    push(CutFamily::oddcycle_vertex_col,
                         sep_oddcycle_vertex_coloring(Y, g, cycles));
                else
                    split(sep_oddcycle_vertex_stable(Y, g, cycles),
                          CutFamily::oddcycle_vertex_stab,
                          CutFamily::oddcycle_vertex_stab_complement);
            }
        }
        return out;
    }
};

void log_iteration(const LoopConfig& cfg, const IterationRecord& rec) {
    if (cfg.verbosity < 1) return;
    int added = 0;
    for (const auto& [fam, cnt] : rec.cuts_added) added += cnt;
    std::fprintf(stderr,
                 "[phase%d] iter=%d obj=%.6f found=%zu added=%d pool=%zu time=%.2fs\n",
                 rec.phase, rec.iteration, rec.objective, rec.violations_found, added,
                 rec.pool_size, rec.solve_seconds);
}

// shared solve/separate/add loop; `initial` carries the model (with pool)
// and, for phase 2, the solution to separate first
PhaseResult run_phase(const Graph& g, const LoopConfig& cfg, int phase,
                      SdpModel model, PrimalSolution start_solution) {
    const auto t0 = Clock::now();
    PhaseDriver driver{g, cfg, phase};
    if (phase == 2) {
        driver.cliques = enumerate_cliques(g, 5);
        if (cfg.maximal_cliques_only)
            driver.cliques = filter_maximal_cliques(g, driver.cliques);
        for (int len : cfg.cycle_lengths) {
            auto found = enumerate_chordless_cycles(g, len, cfg.cycle_cap);
            driver.cycles.insert(driver.cycles.end(), found.begin(), found.end());
        }
    }

    const int stop_below = cfg.stop_below >= 0 ? cfg.stop_below : g.num_vertices();
    const int cap = cfg.cap_factor * g.num_vertices();

    PhaseResult res{std::move(model), std::move(start_solution), {}, false, false, "", 0.0};

    auto solve_once = [&](int iteration) -> bool {
        const auto ts = Clock::now();
        res.solution = solve(res.model, cfg.solver);
        IterationRecord rec;
        rec.phase = phase;
        rec.iteration = iteration;
        // the dual value is the valid side of the relaxation bound; at
        // optimal status the two coincide within gaptol
        rec.objective = res.solution.dual_objective;
        rec.status = res.solution.status;
        rec.pool_size = res.model.cuts().size();
        rec.solve_seconds = seconds_since(ts);
        res.trace.push_back(rec);
        if (res.solution.status == SolveStatus::near_optimal && cfg.verbosity >= 0)
            std::fprintf(stderr, "[phase%d] iter=%d solver returned near_optimal "
                                 "(accepted)\n", phase, iteration);
        if (res.solution.status == SolveStatus::optimal ||
            res.solution.status == SolveStatus::near_optimal)
            return true;
        res.failure = std::string("solver status ") + status_name(res.solution.status) +
                      " in phase " + std::to_string(phase);
        return false;
    };

    if (phase == 1) {
        if (!solve_once(0)) {
            res.seconds = seconds_since(t0);
            return res;
        }
        log_iteration(cfg, res.trace.back());
    }
    // phase 2 separates the phase-1 solution directly; no redundant solve

    for (int round = 1; round <= cfg.max_iters; ++round) {
        auto by_family = driver.separate(res.solution.Y);
        Selection sel = select_cuts(std::move(by_family), g.num_vertices(),
                                    cfg.threshold, cap);
        if (!res.trace.empty()) res.trace.back().violations_found = sel.above_threshold;
        if (sel.above_threshold < static_cast<std::size_t>(stop_below)) {
            res.complete = true;
            break;
        }
        for (auto& c : sel.cuts) c.birth_iteration = round;

        if (cfg.purge_slack) {
            const Eigen::MatrixXd& Y = res.solution.Y;
            res.model.remove_cuts_if([&](const Cut& c) {
                return c.violation([&](int r, int col) { return Y(r, col); }) < -0.1;
            });
        }

        const std::size_t added = res.model.add_cuts(sel.cuts);
        if (added == 0) { // every candidate already pooled; nothing can change
            res.complete = true;
            break;
        }
        if (!solve_once(round)) break;
        auto& rec = res.trace.back();
        for (const auto& c : sel.cuts) ++rec.cuts_added[family_name(c.family)];
        log_iteration(cfg, rec);

        if (cfg.time_limit > 0 && seconds_since(t0) > cfg.time_limit) {
            res.timed_out = true;
            break;
        }
        if (round == cfg.max_iters) res.complete = true;
    }

    res.seconds = seconds_since(t0);
    return res;
}

} // namespace

PhaseResult run_phase1(const Graph& g, const LoopConfig& cfg) {
    SdpModel model = cfg.problem == Problem::stable ? build_theta_stable(g)
                                                    : build_theta_coloring(g);
    return run_phase(g, cfg, 1, std::move(model), PrimalSolution{});
}

PhaseResult run_phase2(const Graph& g, const LoopConfig& cfg, PhaseResult phase1) {
    return run_phase(g, cfg, 2, std::move(phase1.model), std::move(phase1.solution));
}

BoundReport compute_bounds(const Graph& g, const LoopConfig& cfg,
                           const std::string& graph_name) {
    BoundReport rep;
    rep.graph_name = graph_name;
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    rep.problem = cfg.problem;
    rep.threshold = cfg.threshold;
    rep.cap_factor = cfg.cap_factor;
    rep.max_iters = cfg.max_iters;
    rep.seed = cfg.seed;
    rep.feastol = cfg.solver.feastol;
    rep.gaptol = cfg.solver.gaptol;

    auto last_good = [](const std::vector<IterationRecord>& trace, double fallback) {
        for (auto it = trace.rbegin(); it != trace.rend(); ++it)
            if (it->status == SolveStatus::optimal || it->status == SolveStatus::near_optimal)
                return it->objective;
        return fallback;
    };

    PhaseResult p1 = run_phase1(g, cfg);
    rep.iterations = p1.trace;
    rep.phase1_seconds = p1.seconds;
    rep.timed_out = p1.timed_out;
    rep.failure = p1.failure;
    if (p1.trace.empty()) return rep;
    rep.theta = p1.trace.front().objective;
    rep.theta_seconds = p1.trace.front().solve_seconds;
    rep.bound1 = last_good(p1.trace, p1.trace.front().objective);
    rep.bound2 = rep.bound1;
    rep.complete = p1.complete;

    if (!p1.failure.empty()) {
        rep.integer_bound = integer_bound_of(rep.bound1, cfg.problem);
        return rep;
    }

    if (cfg.run_phase2) {
        PhaseResult p2 = run_phase2(g, cfg, std::move(p1));
        rep.iterations.insert(rep.iterations.end(), p2.trace.begin(), p2.trace.end());
        rep.phase2_seconds = p2.seconds;
        rep.timed_out = rep.timed_out || p2.timed_out;
        if (!p2.failure.empty()) rep.failure = p2.failure;
        rep.bound2 = last_good(p2.trace, rep.bound1);
        rep.complete = rep.complete && p2.complete && p2.failure.empty();
    }

    rep.integer_bound = integer_bound_of(rep.bound2, cfg.problem);
    return rep;
}

} // namespace thetacut
