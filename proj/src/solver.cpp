/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef THETACUT_HAVE_LAPACK
extern "C" {
void dpotrf_(const char* uplo, const int* n, double* a, const int* lda, int* info);
void dpotrs_(const char* uplo, const int* n, const int* nrhs, const double* a,
             const int* lda, double* b, const int* ldb, int* info);
}
#endif

namespace thetacut {

namespace {

// constraint row expanded to its full symmetric entry list, so that
// <F, M> = sum v * M(r, c) reproduces the literal sparse functional
struct ExpRow {
    struct Ent {
        int r, c;
        double v;
    };
    std::vector<Ent> ents;
    double rhs = 0.0;
    bool inequality = false;
};

ExpRow expand(const std::vector<CutTerm>& terms, double rhs, bool inequality) {
    ExpRow row;
    row.rhs = rhs;
    row.inequality = inequality;
    row.ents.reserve(terms.size() * 2);
    for (const auto& t : terms) {
        if (t.row == t.col) {
            row.ents.push_back({t.row, t.col, t.coeff});
        } else {
            row.ents.push_back({t.row, t.col, 0.5 * t.coeff});
            row.ents.push_back({t.col, t.row, 0.5 * t.coeff});
        }
    }
    return row;
}

double eval_row(const ExpRow& row, const Eigen::MatrixXd& M) {
    double v = 0.0;
    for (const auto& e : row.ents) v += e.v * M(e.r, e.c);
    return v;
}

void add_scaled(const ExpRow& row, double factor, Eigen::MatrixXd& M) {
    for (const auto& e : row.ents) M(e.r, e.c) += factor * e.v;
}

// largest step alpha with S + alpha * D staying positive semidefinite,
// capped at `cap`; S must be positive definite
double max_psd_step(const Eigen::MatrixXd& S, const Eigen::MatrixXd& D, double cap) {
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() != Eigen::Success) return 0.0;
    // smallest eigenvalue of L^-1 D L^-T
    Eigen::MatrixXd W = llt.matrixL().solve(D);
    W = llt.matrixL().solve(W.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        0.5 * (W + W.transpose()), Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues().minCoeff();
    if (lmin >= -1e-14) return cap;
    return std::min(cap, -1.0 / lmin);
}

// Cholesky factorization + solve for the Schur system; LAPACK when
// available (threaded), Eigen otherwise.
class SchurSolver {
public:
    // returns false if the matrix is not (numerically) positive definite
    bool factorize(Eigen::MatrixXd& M) {
#ifdef THETACUT_HAVE_LAPACK
        fac_ = std::move(M);
        const int n = static_cast<int>(fac_.rows());
        int info = 0;
        dpotrf_("L", &n, fac_.data(), &n, &info);
        return info == 0;
#else
        llt_.compute(M);
        return llt_.info() == Eigen::Success;
#endif
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
#ifdef THETACUT_HAVE_LAPACK
        Eigen::VectorXd x = rhs;
        const int n = static_cast<int>(fac_.rows());
        const int one = 1;
        int info = 0;
        dpotrs_("L", &n, &one, fac_.data(), &n, x.data(), &n, &info);
        return x;
#else
        return llt_.solve(rhs);
#endif
    }

private:
#ifdef THETACUT_HAVE_LAPACK
    Eigen::MatrixXd fac_;
#else
    Eigen::LLT<Eigen::MatrixXd> llt_;
#endif
};

struct Residuals {
    double prim_inf = 0.0; // max violation of equality/slacked-cut rows
    double dual_inf = 0.0; // max entry of C - A*(y) + Z
    double rel_gap = 0.0;
    double worst(double feastol_scale) const {
        return std::max({prim_inf, dual_inf, rel_gap * feastol_scale});
    }
};

} // namespace

PrimalSolution solve(const SdpModel& model, const SolverConfig& cfg) {
    const int dim = model.dim();
    const bool maximize = model.sense() == Sense::maximize;
    const double sense_factor = maximize ? 1.0 : -1.0;

    // canonical internal form: maximize <C, Y>
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(dim, dim);
    {
        ExpRow obj = expand(model.objective(), 0.0, false);
        add_scaled(obj, sense_factor, C);
    }

    std::vector<ExpRow> rows;
    rows.reserve(model.equalities().size() + model.cuts().size());
    for (const auto& eq : model.equalities()) rows.push_back(expand(eq.coeffs, eq.rhs, false));
    for (const auto& cut : model.cuts()) rows.push_back(expand(cut.coeffs, cut.rhs, true));
    const int k = static_cast<int>(rows.size());
    const int n_ineq = static_cast<int>(model.cuts().size());
    const int n_eq = k - n_ineq;

    Eigen::VectorXd b(k);
    for (int i = 0; i < k; ++i) b(i) = rows[i].rhs;

    const double max_abs_b = k > 0 ? b.cwiseAbs().maxCoeff() : 0.0;
    const double max_abs_c = C.cwiseAbs().maxCoeff();

    // infeasible start, scaled with problem size
    const double eta_p = std::max(10.0, 2.0 * dim);
    const double eta_d = std::max(10.0, 2.0 * std::sqrt(double(dim)) * (1.0 + max_abs_c));
    Eigen::MatrixXd X = eta_p * Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd Z = eta_d * Eigen::MatrixXd::Identity(dim, dim);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
    Eigen::VectorXd s = Eigen::VectorXd::Constant(n_ineq, eta_p);
    for (int j = 0; j < n_ineq; ++j) y(n_eq + j) = eta_d; // w_j == y_j for cut rows

    PrimalSolution out;
    out.Y = X;
    out.status = SolveStatus::numerical_failure;

    Eigen::MatrixXd Zi(dim, dim), Rd(dim, dim), dZ(dim, dim), dX(dim, dim);
    Eigen::MatrixXd dZ_aff(dim, dim), dX_aff(dim, dim);
    Eigen::MatrixXd M(k, k);
    Eigen::VectorXd rowZi(k), rowT(k), rhs(k), dy(k), dy_aff(k), ds(n_ineq), ds_aff(n_ineq);
    Eigen::MatrixXd W(dim, dim), T(dim, dim);

    SchurSolver schur;
    double best_score = 1e300;
    int stalled = 0;
    // snapshot of the best iterate so numerical degradation near the end
    // never worsens what we return
    Eigen::MatrixXd bestX = X;
    Eigen::VectorXd best_y = y;
    double best_gap = 1e300, best_prim = 1e300, best_dual = 1e300;

    auto finish = [&](SolveStatus status) {
        out.status = status;
        out.Y = X;
        out.objective = sense_factor * (C.cwiseProduct(X)).sum();
        out.dual_objective = sense_factor * b.dot(y);
        out.duality_gap = std::abs(out.dual_objective - out.objective);
        double eqviol = 0.0;
        for (int i = 0; i < n_eq; ++i)
            eqviol = std::max(eqviol, std::abs(eval_row(rows[i], X) - b(i)));
        out.max_eq_violation = eqviol;
        out.min_eigenvalue = min_eigenvalue_estimate(X);
        return out;
    };

    for (int iter = 0; iter < cfg.max_solver_iters; ++iter) {
        out.iterations = iter;

        // dual residual Rd := C + Z - A*(y); zero when dual-feasible
        Rd = C + Z;
        for (int i = 0; i < k; ++i) add_scaled(rows[i], -y(i), Rd);

        double prim_inf = 0.0;
        for (int i = 0; i < k; ++i) {
            double v = eval_row(rows[i], X) - b(i);
            if (rows[i].inequality) v += s(i - n_eq);
            prim_inf = std::max(prim_inf, std::abs(v));
        }
        double dual_inf = Rd.cwiseAbs().maxCoeff();
        for (int j = 0; j < n_ineq; ++j) {
            // LP-block dual slack is y itself; only positivity can drift
            if (y(n_eq + j) < 0) dual_inf = std::max(dual_inf, -y(n_eq + j));
        }

        const double pobj = (C.cwiseProduct(X)).sum();
        const double dobj = b.dot(y);
        const double rel_gap = std::abs(dobj - pobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
        const double rel_prim = prim_inf / (1.0 + max_abs_b);
        const double rel_dual = dual_inf / (1.0 + max_abs_c);

        if (cfg.verbosity >= 2)
            std::fprintf(stderr,
                         "  ipm %3d  pobj %+14.8e  dobj %+14.8e  gap %8.2e  pinf %8.2e  dinf %8.2e\n",
                         iter, pobj, dobj, rel_gap, rel_prim, rel_dual);

        const double score = std::max({rel_gap, rel_prim, rel_dual});
        if (score < best_score) {
            bestX = X;
            best_y = y;
            best_gap = rel_gap;
            best_prim = rel_prim;
            best_dual = rel_dual;
        }
        if (rel_gap <= cfg.gaptol && rel_prim <= cfg.feastol && rel_dual <= cfg.feastol)
            return finish(SolveStatus::optimal);

        if (score < 0.999 * best_score) {
            stalled = 0;
        } else if (++stalled >= 20) {
            if (cfg.verbosity >= 2) std::fprintf(stderr, "      exit: stalled\n");
            break;
        }
        best_score = std::min(best_score, score);

        // crude divergence check: contradictory cut pools push the dual
        // objective to -inf while primal infeasibility stays put
        if (std::abs(dobj) > 1e12 * (1.0 + max_abs_b) && rel_prim > 1e-6)
            return finish(SolveStatus::infeasible);

        const double mu = ((X.cwiseProduct(Z)).sum() + s.dot(y.tail(n_ineq))) / (dim + n_ineq);
        // complementarity at the floating-point floor; no progress possible
        if (mu < 1e-14 * (1.0 + std::abs(pobj))) {
            if (cfg.verbosity >= 2) std::fprintf(stderr, "      exit: mu floor\n");
            break;
        }

        // Z approaches singularity at the optimum; factorize with an
        // escalating shift if the plain Cholesky breaks down
        Eigen::LLT<Eigen::MatrixXd> zllt(Z);
        if (zllt.info() != Eigen::Success) {
            double shift = 1e-14 * (1.0 + Z.trace() / dim);
            for (int attempt = 0; attempt < 6 && zllt.info() != Eigen::Success; ++attempt) {
                zllt.compute(Z + shift * Eigen::MatrixXd::Identity(dim, dim));
                shift *= 100;
            }
            if (zllt.info() != Eigen::Success) {
                if (cfg.verbosity >= 2) std::fprintf(stderr, "      exit: Z factorization\n");
                break;
            }
        }
        Zi = zllt.solve(Eigen::MatrixXd::Identity(dim, dim));
        Zi = 0.5 * (Zi + Zi.transpose());

        // Schur matrix M_ij = <F_i, Zi F_j X> (+ s_j/w_j on cut diagonals)
#pragma omp parallel
        {
            Eigen::MatrixXd Wl(dim, dim);
#pragma omp for schedule(dynamic, 16)
            for (int j = 0; j < k; ++j) {
                Wl.setZero();
                for (const auto& e : rows[j].ents)
                    Wl.noalias() += e.v * (Zi.col(e.r) * X.col(e.c).transpose());
                for (int i = 0; i <= j; ++i) {
                    double acc = 0.0;
                    for (const auto& e : rows[i].ents) acc += e.v * Wl(e.r, e.c);
                    M(i, j) = acc;
                    M(j, i) = acc;
                }
            }
        }
        for (int j = 0; j < n_ineq; ++j) M(n_eq + j, n_eq + j) += s(j) / y(n_eq + j);

        {
            // tiny regularization keeps nearly dependent cut rows factorable
            double reg = 1e-13 * (1.0 + M.diagonal().cwiseAbs().maxCoeff());
            bool ok = false;
            for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
                Eigen::MatrixXd Mreg = M;
                if (attempt > 0) {
                    Mreg.diagonal().array() += reg;
                    reg *= 1e3;
                }
                ok = schur.factorize(Mreg);
            }
            if (!ok) {
                if (cfg.verbosity >= 2) std::fprintf(stderr, "      exit: Schur factorization\n");
                break;
            }
        }

        // common rhs pieces
        T.noalias() = Zi * Rd * X;
        for (int i = 0; i < k; ++i) {
            rowZi(i) = eval_row(rows[i], Zi);
            rowT(i) = eval_row(rows[i], T);
        }

        auto newton = [&](double mu_target, bool corrector) {
            for (int i = 0; i < k; ++i) {
                double r = mu_target * rowZi(i) - b(i) + rowT(i);
                if (rows[i].inequality) r += mu_target / y(i);
                rhs(i) = r;
            }
            if (corrector) {
                Eigen::MatrixXd U = Zi * dZ_aff * dX_aff;
                for (int i = 0; i < k; ++i) rhs(i) -= eval_row(rows[i], U);
                for (int j = 0; j < n_ineq; ++j)
                    rhs(n_eq + j) -= ds_aff(j) * dy_aff(n_eq + j) / y(n_eq + j);
            }
            dy = schur.solve(rhs);
            dZ = -Rd;
            for (int i = 0; i < k; ++i) add_scaled(rows[i], dy(i), dZ);
            dX.noalias() = mu_target * Zi - X - Zi * dZ * X;
            if (corrector) dX.noalias() -= Zi * dZ_aff * dX_aff;
            dX = 0.5 * (dX + dX.transpose()).eval();
            for (int j = 0; j < n_ineq; ++j) {
                double d = mu_target / y(n_eq + j) - s(j) -
                           s(j) / y(n_eq + j) * dy(n_eq + j);
                if (corrector) d -= ds_aff(j) * dy_aff(n_eq + j) / y(n_eq + j);
                ds(j) = d;
            }
        };

        auto lp_step = [&](const Eigen::VectorXd& v, const Eigen::VectorXd& dv,
                           int offset, double cap) {
            double a = cap;
            for (int j = 0; j < n_ineq; ++j) {
                const double val = offset < 0 ? s(j) : v(offset + j);
                const double dir = offset < 0 ? dv(j) : dv(offset + j);
                if (dir < 0) a = std::min(a, -val / dir);
            }
            return a;
        };

        // predictor (affine scaling)
        newton(0.0, false);
        double ap = std::min(max_psd_step(X, dX, 1e30), lp_step(s, ds, -1, 1e30));
        double ad = std::min(max_psd_step(Z, dZ, 1e30), lp_step(y, dy, n_eq, 1e30));
        ap = std::min(1.0, 0.99 * ap);
        ad = std::min(1.0, 0.99 * ad);

        const double mu_aff =
            (((X + ap * dX).cwiseProduct(Z + ad * dZ)).sum() +
             (s + ap * ds).dot((y + ad * dy).tail(n_ineq))) /
            (dim + n_ineq);
        double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3.0);
        if (!std::isfinite(sigma)) sigma = 0.5;
        // once feasible, pure centering cannot help; forcing the target down
        // keeps degenerate tails moving
        if (rel_prim <= cfg.feastol && rel_dual <= cfg.feastol) sigma = std::min(sigma, 0.2);

        dZ_aff = dZ;
        dX_aff = dX;
        ds_aff = ds;
        dy_aff = dy;
        newton(sigma * mu, true);

        ap = std::min(max_psd_step(X, dX, 1e30), lp_step(s, ds, -1, 1e30));
        ad = std::min(max_psd_step(Z, dZ, 1e30), lp_step(y, dy, n_eq, 1e30));
        // step closer to the boundary once feasibility is settled
        const double tau = std::min(0.995, 0.9 + 0.09 * std::min(ap, ad));
        ap = std::min(1.0, tau * ap);
        ad = std::min(1.0, tau * ad);

        if (cfg.verbosity >= 3)
            std::fprintf(stderr, "      step ap %.3e ad %.3e sigma %.3e mu %.3e\n", ap, ad,
                         sigma, mu);
        if (ap < 1e-10 && ad < 1e-10) {
            if (cfg.verbosity >= 2) std::fprintf(stderr, "      exit: zero step\n");
            break;
        }

        X.noalias() += ap * dX;
        s += ap * ds;
        y += ad * dy;
        Z.noalias() += ad * dZ;
    }

    // fall back to the best iterate seen and classify it
    X = bestX;
    y = best_y;
    {
        PrimalSolution res = finish(SolveStatus::numerical_failure);
        if (best_gap <= cfg.gaptol && best_prim <= cfg.feastol && best_dual <= cfg.feastol)
            res.status = SolveStatus::optimal;
        else if (best_gap <= 100 * cfg.gaptol && best_prim <= 100 * cfg.feastol &&
                 best_dual <= 100 * cfg.feastol)
            res.status = SolveStatus::near_optimal;
        out = res;
    }
    return out;
}

CertifyReport certify(const Eigen::MatrixXd& Y, const SdpModel& model, double tol) {
    CertifyReport rep;
    rep.tol = tol;
    for (const auto& eq : model.equalities()) {
        double v = 0.0;
        for (const auto& t : eq.coeffs) v += t.coeff * Y(t.row, t.col);
        rep.max_eq_violation = std::max(rep.max_eq_violation, std::abs(v - eq.rhs));
    }
    for (const auto& cut : model.cuts()) {
        const double v = cut.violation([&](int r, int c) { return Y(r, c); });
        rep.max_cut_violation = std::max(rep.max_cut_violation, v);
    }
    rep.min_eigenvalue = min_eigenvalue_estimate(Y);
    rep.objective = model.eval_objective(Y);
    rep.feasible = rep.max_eq_violation <= tol && rep.max_cut_violation <= tol &&
                   rep.min_eigenvalue >= -tol;
    return rep;
}

double min_eigenvalue_estimate(const Eigen::MatrixXd& S) {
    const int n = static_cast<int>(S.rows());
    if (n == 0) return 0.0;
    if (n < 300) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            0.5 * (S + S.transpose()), Eigen::EigenvaluesOnly);
        return eig.eigenvalues().minCoeff();
    }
    // Lanczos with full reorthogonalization on sigma*I - S, so the extreme
    // eigenvalue of interest becomes the largest one
    const double sigma = S.cwiseAbs().rowwise().sum().maxCoeff(); // Gershgorin
    const int steps = std::min(n, 120);
    Eigen::MatrixXd V(n, steps + 1);
    Eigen::VectorXd alpha(steps), beta(steps);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n) +
                        0.001 * Eigen::VectorXd::LinSpaced(n, 0.0, 1.0);
    v.normalize();
    V.col(0) = v;
    int m = 0;
    for (int j = 0; j < steps; ++j) {
        Eigen::VectorXd w = sigma * V.col(j) - S * V.col(j);
        alpha(j) = V.col(j).dot(w);
        w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
        w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
        beta(j) = w.norm();
        m = j + 1;
        if (beta(j) < 1e-12) break;
        V.col(j + 1) = w / beta(j);
    }
    Eigen::MatrixXd Tm = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
        Tm(j, j) = alpha(j);
        if (j + 1 < m) Tm(j, j + 1) = Tm(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Tm, Eigen::EigenvaluesOnly);
    return sigma - eig.eigenvalues().maxCoeff();
}

} // namespace thetacut
