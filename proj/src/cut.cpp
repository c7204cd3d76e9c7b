/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/cut.hpp"

#include <sstream>
#include <tuple>

namespace thetacut {

const char* family_name(CutFamily f) {
    switch (f) {
        case CutFamily::nonneg: return "nonneg";
        case CutFamily::tri_stab_a: return "tri_stab_a";
        case CutFamily::tri_stab_b: return "tri_stab_b";
        case CutFamily::tri_col: return "tri_col";
        case CutFamily::clique_vertex: return "clique_vertex";
        case CutFamily::clique_join: return "clique_join";
        case CutFamily::clique_vertex_col: return "clique_vertex_col";
        case CutFamily::c5_pairsum_stab: return "c5_pairsum_stab";
        case CutFamily::oddcycle_vertex_stab: return "oddcycle_vertex_stab";
        case CutFamily::oddcycle_vertex_stab_complement:
            return "oddcycle_vertex_stab_complement";
        case CutFamily::c5_pairsum_col: return "c5_pairsum_col";
        case CutFamily::oddcycle_vertex_col: return "oddcycle_vertex_col";
    }
    return "?";
}

bool valid_for_coloring(CutFamily f) {
    switch (f) {
        case CutFamily::nonneg: // X >= 0 holds for both problems
        case CutFamily::tri_col:
        case CutFamily::clique_vertex_col:
        case CutFamily::c5_pairsum_col:
        case CutFamily::oddcycle_vertex_col:
            return true;
        default:
            return false;
    }
}

bool valid_for_stable(CutFamily f) {
    switch (f) {
        case CutFamily::nonneg:
        case CutFamily::tri_stab_a:
        case CutFamily::tri_stab_b:
        case CutFamily::clique_vertex:
        case CutFamily::clique_join:
        case CutFamily::c5_pairsum_stab:
        case CutFamily::oddcycle_vertex_stab:
        case CutFamily::oddcycle_vertex_stab_complement:
            return true;
        default:
            return false;
    }
}

std::string Cut::describe() const {
    std::ostringstream s;
    s << family_name(family) << " [";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) s << (witness[i] == -1 || witness[i - 1] == -1 ? "|" : ",");
        if (witness[i] != -1) s << witness[i] + 1;
    }
    s << "]";
    return s.str();
}

bool witness_less(const Cut& a, const Cut& b) {
    return std::tie(a.family, a.witness) < std::tie(b.family, b.witness);
}

bool witness_equal(const Cut& a, const Cut& b) {
    return a.family == b.family && a.witness == b.witness;
}

} // namespace thetacut
