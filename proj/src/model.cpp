/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/model.hpp"

#include <ostream>

namespace thetacut {

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::near_optimal: return "near_optimal";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::numerical_failure: return "numerical_failure";
    }
    return "?";
}

void SdpModel::check_terms(const std::vector<CutTerm>& terms) const {
    if (terms.empty()) throw std::invalid_argument("empty coefficient map");
    for (const auto& t : terms)
        if (t.row < 0 || t.col < 0 || t.row > t.col || t.col >= dim_)
            throw std::invalid_argument("coefficient index outside matrix of order " +
                                        std::to_string(dim_));
}

void SdpModel::set_objective(std::vector<CutTerm> terms) {
    check_terms(terms);
    objective_ = std::move(terms);
}

void SdpModel::add_equality(std::vector<CutTerm> terms, double rhs) {
    check_terms(terms);
    equalities_.push_back(Equality{std::move(terms), rhs});
}

std::size_t SdpModel::KeyHash::operator()(const CutKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.family) * 1099511628211ULL;
    for (int v : k.witness) h = (h ^ static_cast<std::size_t>(v + 2)) * 1099511628211ULL;
    return h;
}

bool SdpModel::has_cut(const Cut& c) const {
    return pool_keys_.count(CutKey{c.family, c.witness}) > 0;
}

std::size_t SdpModel::add_cuts(const std::vector<Cut>& new_cuts) {
    std::size_t added = 0;
    cuts_.reserve(cuts_.size() + new_cuts.size());
    for (const auto& c : new_cuts) {
        check_terms(c.coeffs);
        if (!pool_keys_.insert(CutKey{c.family, c.witness}).second) {
            ++duplicates_skipped_;
            continue;
        }
        cuts_.push_back(c);
        ++added;
    }
    return added;
}

double SdpModel::eval_objective(const Eigen::MatrixXd& Y) const {
    double v = 0.0;
    for (const auto& t : objective_) v += t.coeff * Y(t.row, t.col);
    return v;
}

SdpModel build_theta_stable(const Graph& g) {
    const int n = g.num_vertices();
    SdpModel m(n + 1, Sense::maximize, Problem::stable);
    std::vector<CutTerm> obj;
    obj.reserve(n);
    for (int i = 1; i <= n; ++i) obj.push_back({0, i, 1.0});
    m.set_objective(std::move(obj));
    m.add_equality({{0, 0, 1.0}}, 1.0);
    for (int i = 1; i <= n; ++i)
        m.add_equality({{0, i, -1.0}, {i, i, 1.0}}, 0.0); // diag(X) = x
    for (auto [u, v] : g.edges()) m.add_equality({{u + 1, v + 1, 1.0}}, 0.0);
    return m;
}

SdpModel build_theta_coloring(const Graph& g) {
    const int n = g.num_vertices();
    SdpModel m(n + 1, Sense::minimize, Problem::coloring);
    m.set_objective({{0, 0, 1.0}});
    for (int i = 1; i <= n; ++i) m.add_equality({{0, i, 1.0}}, 1.0); // border e
    for (int i = 1; i <= n; ++i) m.add_equality({{i, i, 1.0}}, 1.0); // diag(X) = e
    for (auto [u, v] : g.edges()) m.add_equality({{u + 1, v + 1, 1.0}}, 0.0);
    return m;
}

void dump_model(const SdpModel& model, std::ostream& out) {
    out << "sdp " << model.dim() << ' '
        << (model.sense() == Sense::maximize ? "max" : "min") << ' '
        << model.equalities().size() << ' ' << model.cuts().size() << '\n';
    for (const auto& t : model.objective())
        out << "obj " << t.row << ' ' << t.col << ' ' << t.coeff << '\n';
    for (std::size_t i = 0; i < model.equalities().size(); ++i) {
        const auto& eq = model.equalities()[i];
        for (const auto& t : eq.coeffs)
            out << "eq " << i << ' ' << t.row << ' ' << t.col << ' ' << t.coeff << '\n';
        out << "eqrhs " << i << ' ' << eq.rhs << '\n';
    }
    for (std::size_t j = 0; j < model.cuts().size(); ++j) {
        const auto& c = model.cuts()[j];
        out << "cutinfo " << j << ' ' << family_name(c.family) << '\n';
        for (const auto& t : c.coeffs)
            out << "cut " << j << ' ' << t.row << ' ' << t.col << ' ' << t.coeff << '\n';
        out << "cutrhs " << j << ' ' << c.rhs << '\n';
    }
}

} // namespace thetacut
