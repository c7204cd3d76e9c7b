/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_EXACT_HPP
#define THETACUT_EXACT_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "thetacut/cut.hpp"
#include "thetacut/graph.hpp"

namespace thetacut {

/// Thrown when an exact computation is requested beyond its size guard.
/// Ground truth is never silently truncated or approximated.
class GuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact stability number by branch and bound (include/exclude the highest
// degree vertex, greedy clique-cover bound, closed form once max degree
// drops to 2). Guard is a hard error, raise it consciously.
int exact_alpha(const Graph& g, int guard = 60);

// Exact chromatic number: iterative deepening on k with a DSATUR-style
// color assignment search, classes symmetry-broken by first use.
int exact_chi(const Graph& g, int guard = 40);

/// Bordered rank-1 matrix (1,s)(1,s)^T of a stable set incidence vector s.
/// entry(r, c) addresses the (1+n) x (1+n) matrix, border at index 0.
struct StableSetMatrix {
    int n = 0;
    std::uint32_t set = 0; // bit v set iff vertex v in the stable set

    double entry(int r, int c) const {
        const double a = r == 0 ? 1.0 : ((set >> (r - 1)) & 1u);
        const double b = c == 0 ? 1.0 : ((set >> (c - 1)) & 1u);
        return a * b;
    }
    bool contains(int v) const { return (set >> v) & 1u; }
};

/// Coloring matrix X = sum_p s_p s_p^T of a partition into k nonempty stable
/// sets, bordered with t = k and e: entry(0,0) = k, entry(0,i) = 1,
/// entry(i,j) = 1 iff i and j share a class.
struct ColoringMatrix {
    int n = 0;
    int k = 0;
    std::vector<int> color; // class index per vertex, 0..k-1

    double entry(int r, int c) const {
        if (r == 0 && c == 0) return k;
        if (r == 0 || c == 0) return 1.0;
        return color[r - 1] == color[c - 1] ? 1.0 : 0.0;
    }
};

// One callback per stable set of g, empty set included. Guard n <= 20.
void for_each_stable_set_matrix(const Graph& g,
                                const std::function<void(const StableSetMatrix&)>& fn,
                                int guard = 20);

// One callback per partition of V(g) into nonempty stable sets, enumerated
// as restricted-growth strings (unordered classes, no color permutations).
// Guard n <= 10: the space grows as Bell numbers.
void for_each_coloring_matrix(const Graph& g,
                              const std::function<void(const ColoringMatrix&)>& fn,
                              int guard = 10);

std::size_t count_stable_sets(const Graph& g, int guard = 20);
std::size_t count_coloring_matrices(const Graph& g, int guard = 10);

enum class Problem { stable, coloring };

// true iff the cut holds on every StableSetMatrix (stable) resp. every
// ColoringMatrix (coloring) of g
bool check_cut_validity(const Cut& cut, const Graph& g, Problem problem);

Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

} // namespace thetacut

#endif
