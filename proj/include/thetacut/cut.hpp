/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_CUT_HPP
#define THETACUT_CUT_HPP

#include <string>
#include <vector>

namespace thetacut {

// One family per inequality. The *_stab families are valid for stable-set
// matrices, the *_col families for coloring matrices; nonneg is valid for
// both (X >= 0 entrywise).
enum class CutFamily {
    nonneg,
    tri_stab_a,                      // X_ik + X_jk <= X_ij + x_k
    tri_stab_b,                      // x_i + x_j + x_k <= 1 + X_ik + X_jk + X_ij
    tri_col,                         // X_ij + X_jk <= X_ik + 1
    clique_vertex,                   // sum_{i in Q} X_ij <= X_jj
    clique_join,                     // sum diag(Q u Q') <= 1 + cross terms
    clique_vertex_col,               // sum_{i in Q} X_ik <= 1
    c5_pairsum_stab,                 // pair sum over 5-cycle <= 1
    oddcycle_vertex_stab,            // sum X_ik <= ((|C|-1)/2) X_kk
    oddcycle_vertex_stab_complement, // diag version scaled by 1 - X_kk
    c5_pairsum_col,                  // pair sum over 5-cycle <= 2
    oddcycle_vertex_col,             // sum X_ik <= (|C|-1)/2
};

const char* family_name(CutFamily f);
bool valid_for_stable(CutFamily f);
bool valid_for_coloring(CutFamily f);

/// One coefficient of a sparse linear functional over entries of the
/// bordered matrix Y. Indices are matrix positions 0..n (0 = border row),
/// with row <= col; an off-diagonal entry is counted once.
struct CutTerm {
    int row;
    int col;
    double coeff;
};

// A linear inequality  sum coeff * Y_{row,col} <= rhs  over the bordered
// matrix, tagged with the generating family and witness. Witness vertices
// are 0-based; clique_join separates the two cliques with a -1 marker.
struct Cut {
    std::vector<CutTerm> coeffs;
    double rhs = 0.0;
    CutFamily family = CutFamily::nonneg;
    std::vector<int> witness;
    int birth_iteration = -1;

    // lhs evaluated against any entry accessor (row, col) -> double
    template <typename EntryFn>
    double lhs(EntryFn&& entry) const {
        double v = 0.0;
        for (const auto& t : coeffs) v += t.coeff * entry(t.row, t.col);
        return v;
    }

    template <typename EntryFn>
    double violation(EntryFn&& entry) const {
        return lhs(entry) - rhs;
    }

    std::string describe() const;
};

/// Ordering on (family, witness); used for deduplication and for breaking
/// ties between equal violation amounts.
bool witness_less(const Cut& a, const Cut& b);
bool witness_equal(const Cut& a, const Cut& b);

} // namespace thetacut

#endif
