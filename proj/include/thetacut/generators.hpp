/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_GENERATORS_HPP
#define THETACUT_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "thetacut/graph.hpp"

namespace thetacut {

enum class Family { near_regular, erdos_renyi, torus, queen, mycielski, cycle };

/// Parsed generator request: one family plus its parameters. Random families
/// draw from xoshiro256** seeded with `seed`, so a GenSpec pins the instance.
struct GenSpec {
    Family family = Family::cycle;
    int n = 0;          // near_regular, erdos_renyi
    int r = 0;          // near_regular
    double p = 0.0;     // erdos_renyi
    int d = 0;          // torus, queen
    int levels = 0;     // mycielski
    int length = 0;     // cycle
    std::uint64_t seed = 0;

    std::string name() const;
};

Graph generate(const GenSpec& spec);

// G(n, p): each of the n(n-1)/2 pairs independently with probability p.
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// Random perfect matching on n*r vertices, consecutive groups of r collapsed
// into one vertex, loops and multiple edges removed. Needs n*r even.
Graph gen_near_regular(int n, int r, std::uint64_t seed);

// d x d toroidal grid: n = d^2 vertices, m = 2n edges, 4-regular.
Graph gen_torus(int d);

// d x d queen graph: squares adjacent iff they share a row, column or diagonal.
Graph gen_queen(int d);

// Mycielskian tower over K2: levels=0 gives C5 (n=5), each further level
// applies the construction once more (n -> 2n+1). Matches the DIMACS
// myciel(levels+2) size sequence 5, 11, 23, 47, 95, ...
Graph gen_mycielski(int levels);

// plain cycle 1-2-...-length-1
Graph gen_cycle(int length);

// one Mycielskian step: shadow vertex per vertex plus an apex
Graph mycielskian(const Graph& g);

} // namespace thetacut

#endif
