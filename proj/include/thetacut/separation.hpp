/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_SEPARATION_HPP
#define THETACUT_SEPARATION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "thetacut/cut.hpp"
#include "thetacut/graph.hpp"

namespace thetacut {

/// A violated cut with its violation amount (lhs - rhs at Y, always > 0).
struct Violation {
    Cut cut;
    double amount;
};

// ---- cut builders (vertices 0-based, mapped to matrix indices 1..n) ----

Cut make_nonneg_cut(int i, int j);
Cut make_tri_stab_a_cut(int i, int j, int k);            // X_ik+X_jk <= X_ij+x_k
Cut make_tri_stab_b_cut(int i, int j, int k);            // x_i+x_j+x_k <= 1+...
Cut make_tri_col_cut(int i, int j, int k);               // X_ij+X_jk <= X_ik+1, middle j
Cut make_clique_vertex_cut(const VertexSet& q, int j);   // (9)
Cut make_clique_join_cut(const VertexSet& q, const VertexSet& qp); // (10)
Cut make_clique_vertex_col_cut(const VertexSet& q, int k);         // (11)
Cut make_c5_pairsum_cut(const Cycle& c, bool coloring);            // (12)/(15)
Cut make_oddcycle_vertex_stab_cut(const Cycle& c, int k);          // (13)
Cut make_oddcycle_vertex_stab_complement_cut(const Cycle& c, int k); // (14)
Cut make_oddcycle_vertex_col_cut(const Cycle& c, int k);           // (16)

// ---- separation oracles ----
// Each scans its full candidate space against the bordered matrix Y and
// returns every violated candidate. Amounts re-evaluate through the built
// cut, so they match Cut::violation exactly.

// entries Y_ij < -eps on non-edges, i < j (edge entries are structural
// zeros). eps > 0 guards the cut loop against re-reporting rounding noise.
std::vector<Violation> sep_nonneg(const Eigen::MatrixXd& Y, const Graph& g,
                                  double eps = 0.0);
std::vector<Violation> sep_triangle_stable(const Eigen::MatrixXd& Y, const Graph& g);
std::vector<Violation> sep_triangle_coloring(const Eigen::MatrixXd& Y, const Graph& g);
std::vector<Violation> sep_clique_vertex(const Eigen::MatrixXd& Y, const Graph& g,
                                         const std::vector<VertexSet>& cliques);
// disjoint clique pairs with |Q|+|Q'| <= 6; above one million index pairs the
// space is sampled uniformly, driven by `seed`
std::vector<Violation> sep_clique_join(const Eigen::MatrixXd& Y, const Graph& g,
                                       const std::vector<VertexSet>& cliques,
                                       std::uint64_t seed = 0);
std::vector<Violation> sep_clique_vertex_coloring(const Eigen::MatrixXd& Y,
                                                  const Graph& g,
                                                  const std::vector<VertexSet>& cliques);
std::vector<Violation> sep_c5_pairsum_stable(const Eigen::MatrixXd& Y, const Graph& g,
                                             const std::vector<Cycle>& cycles);
std::vector<Violation> sep_oddcycle_vertex_stable(const Eigen::MatrixXd& Y,
                                                  const Graph& g,
                                                  const std::vector<Cycle>& cycles);
std::vector<Violation> sep_c5_pairsum_coloring(const Eigen::MatrixXd& Y, const Graph& g,
                                               const std::vector<Cycle>& cycles);
std::vector<Violation> sep_oddcycle_vertex_coloring(const Eigen::MatrixXd& Y,
                                                    const Graph& g,
                                                    const std::vector<Cycle>& cycles);

// ---- selection ----

struct FamilyViolations {
    CutFamily family;
    std::vector<Violation> violations;
};

struct Selection {
    std::vector<Cut> cuts;               // to add this round
    std::size_t above_threshold = 0;     // total count before capping
};

// Per the two-phase protocol: the nonneg family passes through entirely;
// every other family keeps amounts > threshold, sorted by amount descending
// (ties by witness), truncated to cap_per_family.
Selection select_cuts(std::vector<FamilyViolations> by_family, int n, double threshold,
                      int cap_per_family);

} // namespace thetacut

#endif
