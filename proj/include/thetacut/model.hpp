/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_MODEL_HPP
#define THETACUT_MODEL_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <unordered_set>
#include <vector>

#include "thetacut/cut.hpp"
#include "thetacut/exact.hpp" // Problem
#include "thetacut/graph.hpp"

namespace thetacut {

enum class Sense { maximize, minimize };

/// Sparse equality row over entries of the bordered matrix Y.
struct Equality {
    std::vector<CutTerm> coeffs;
    double rhs = 0.0;
};

enum class SolveStatus { optimal, near_optimal, infeasible, numerical_failure };

const char* status_name(SolveStatus s);

/// Solved primal matrix with the residuals the solver certifies itself by.
struct PrimalSolution {
    Eigen::MatrixXd Y;
    double objective = 0.0;
    SolveStatus status = SolveStatus::numerical_failure;
    double max_eq_violation = 0.0;
    double min_eigenvalue = 0.0;
    double duality_gap = 0.0;
    int iterations = 0;
    double dual_objective = 0.0;
};

// A bordered-PSD model of order dim = n+1: linear objective, structural
// equality rows, and an append-only pool of <=-cuts. The base relaxations
// are produced by build_theta_stable / build_theta_coloring below.
class SdpModel {
public:
    SdpModel(int dim, Sense sense, Problem problem)
        : dim_(dim), sense_(sense), problem_(problem) {}

    int dim() const { return dim_; }
    Sense sense() const { return sense_; }
    Problem problem() const { return problem_; }

    const std::vector<CutTerm>& objective() const { return objective_; }
    const std::vector<Equality>& equalities() const { return equalities_; }
    const std::vector<Cut>& cuts() const { return cuts_; }
    std::size_t duplicates_skipped() const { return duplicates_skipped_; }

    void set_objective(std::vector<CutTerm> terms);
    void add_equality(std::vector<CutTerm> terms, double rhs);

    // Appends cuts, silently skipping any whose (family, witness) key is
    // already pooled. Returns the number actually added.
    std::size_t add_cuts(const std::vector<Cut>& new_cuts);

    bool has_cut(const Cut& c) const;

    // Drops pooled cuts matching `pred` (used by --purge-slack only; the
    // default protocol never removes a cut). Returns how many were dropped.
    template <typename Pred>
    std::size_t remove_cuts_if(Pred&& pred) {
        const std::size_t before = cuts_.size();
        std::erase_if(cuts_, pred);
        if (cuts_.size() != before) {
            pool_keys_.clear();
            for (const auto& c : cuts_) pool_keys_.insert(CutKey{c.family, c.witness});
        }
        return before - cuts_.size();
    }

    double eval_objective(const Eigen::MatrixXd& Y) const;

private:
    struct CutKey {
        CutFamily family;
        std::vector<int> witness;
        bool operator==(const CutKey&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const CutKey& k) const;
    };

    void check_terms(const std::vector<CutTerm>& terms) const;

    int dim_;
    Sense sense_;
    Problem problem_;
    std::vector<CutTerm> objective_;
    std::vector<Equality> equalities_;
    std::vector<Cut> cuts_;
    std::unordered_set<CutKey, KeyHash> pool_keys_;
    std::size_t duplicates_skipped_ = 0;
};

// Eq.-(7)-style relaxation: max sum_i Y_{0,i} with Y_00 = 1,
// Y_ii = Y_{0,i}, Y_ij = 0 on edges. Optimum is the theta function of g.
SdpModel build_theta_stable(const Graph& g);

// Eq.-(8)-style relaxation: min Y_00 with border fixed to all-ones,
// diag fixed to one, Y_ij = 0 on edges. Optimum is theta of the complement,
// a lower bound on the chromatic number of g.
SdpModel build_theta_coloring(const Graph& g);

// sparse text dump (entry-indexed triplets) for external debugging
void dump_model(const SdpModel& model, std::ostream& out);

} // namespace thetacut

#endif
