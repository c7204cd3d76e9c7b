/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_SOLVER_HPP
#define THETACUT_SOLVER_HPP

#include <Eigen/Dense>

#include "thetacut/model.hpp"

namespace thetacut {

struct SolverConfig {
    double feastol = 1e-8;
    double gaptol = 1e-8;
    int max_solver_iters = 250;
    int verbosity = 0;
};

// Solves the model with an infeasible-start primal-dual predictor-corrector
// interior-point method (HKM direction) over the product of the PSD cone
// and a nonnegative slack per cut row. Deterministic; never throws on
// numerical trouble, the status tells.
PrimalSolution solve(const SdpModel& model, const SolverConfig& cfg = {});

/// Solver-independent feasibility check of a primal matrix.
struct CertifyReport {
    double max_eq_violation = 0.0;
    double max_cut_violation = 0.0;
    double min_eigenvalue = 0.0;
    double objective = 0.0;
    double tol = 0.0;
    bool feasible = false;

    double worst() const {
        double w = max_eq_violation;
        if (max_cut_violation > w) w = max_cut_violation;
        if (-min_eigenvalue > w) w = -min_eigenvalue;
        return w;
    }
};

// Re-evaluates every model row and the extreme eigenvalue of Y without any
// solver state; this is the trust boundary for claimed-optimal solutions.
CertifyReport certify(const Eigen::MatrixXd& Y, const SdpModel& model, double tol);

inline CertifyReport certify(const PrimalSolution& sol, const SdpModel& model,
                             double tol) {
    return certify(sol.Y, model, tol);
}

// Smallest eigenvalue: dense solve below order 300, Lanczos estimate above.
double min_eigenvalue_estimate(const Eigen::MatrixXd& S);

} // namespace thetacut

#endif
