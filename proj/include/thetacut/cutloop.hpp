/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_CUTLOOP_HPP
#define THETACUT_CUTLOOP_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thetacut/model.hpp"
#include "thetacut/separation.hpp"
#include "thetacut/solver.hpp"

namespace thetacut {

// Family groups toggled from the CLI: nonneg, tri, clique, c5, oddcycle.
std::set<std::string> all_family_groups();

struct LoopConfig {
    Problem problem = Problem::stable;
    double threshold = 0.025;            // minimum violation worth adding
    int cap_factor = 2;                  // per-family cap = cap_factor * n
    int stop_below = -1;                 // violation count that ends a phase; -1 = n
    int max_iters = 10;                  // cut rounds per phase beyond the first solve
    SolverConfig solver;
    std::set<std::string> groups = all_family_groups();
    std::uint64_t seed = 1;
    double time_limit = 0.0;             // per-phase seconds; 0 = unlimited
    bool run_phase2 = true;
    bool maximal_cliques_only = false;
    std::vector<int> cycle_lengths = {5};
    std::size_t cycle_cap = 50000;
    bool purge_slack = false;            // drop far-from-tight cuts between solves
    int verbosity = 0;
};

struct IterationRecord {
    int phase = 0;     // 1 or 2
    int iteration = 0; // 0 = initial solve of the phase
    double objective = 0.0;
    SolveStatus status = SolveStatus::optimal;
    std::size_t violations_found = 0; // above-threshold count before capping
    std::map<std::string, int> cuts_added;
    std::size_t pool_size = 0;
    double solve_seconds = 0.0;
};

struct BoundReport {
    std::string graph_name;
    int n = 0;
    int m = 0;
    Problem problem = Problem::stable;
    double theta = 0.0;
    double bound1 = 0.0;
    double bound2 = 0.0;
    long integer_bound = 0;
    std::vector<IterationRecord> iterations;
    double theta_seconds = 0.0;
    double phase1_seconds = 0.0;
    double phase2_seconds = 0.0;
    bool complete = false; // both phases ran to their stop rule
    bool timed_out = false;
    std::string failure; // non-empty if a solve failed
    double threshold = 0.025;
    int cap_factor = 2;
    int max_iters = 10;
    std::uint64_t seed = 1;
    double feastol = 1e-8;
    double gaptol = 1e-8;
};

long integer_bound_of(double bound, Problem problem);

struct PhaseResult {
    SdpModel model;
    PrimalSolution solution;
    std::vector<IterationRecord> trace;
    bool complete = false;
    bool timed_out = false;
    std::string failure;
    double seconds = 0.0;
};

// Phase 1: nonnegativity + triangle families, iterating solve/separate/add
// until fewer than stop_below violations remain or max_iters rounds passed.
// The final objective is BOUND 1 (trace[0] holds the plain theta solve).
PhaseResult run_phase1(const Graph& g, const LoopConfig& cfg);

// Phase 2: clique and cycle families, separated first on the final Phase 1
// solution; Phase 1 cuts stay in the pool. Final objective is BOUND 2.
PhaseResult run_phase2(const Graph& g, const LoopConfig& cfg, PhaseResult phase1);

BoundReport compute_bounds(const Graph& g, const LoopConfig& cfg,
                           const std::string& graph_name = "graph");

} // namespace thetacut

#endif
