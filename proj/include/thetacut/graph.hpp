/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_GRAPH_HPP
#define THETACUT_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetacut {

/// Error raised for malformed DIMACS input; carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + std::move(msg)),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Sorted set of distinct vertices, 0-based internally.
using VertexSet = std::vector<int>;

/// A cycle v0-v1-...-v(L-1)-v0. Consecutive vertices are adjacent; if
/// chordless, no other pair is.
struct Cycle {
    std::vector<int> vertices;
    bool chordless = false;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Simple undirected graph, immutable after construction. Vertices are
// 0-based internally; DIMACS I/O and all user-facing reports are 1-based.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Duplicate edges (either orientation) are
    // collapsed; self-loops or out-of-range endpoints throw.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // edges as (u, v) with u < v, sorted lexicographically
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adjacency_[v].size());
    }

    bool is_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_bits_[static_cast<std::size_t>(u) * n_ + v];
    }

    Graph complement() const;

    // Internal consistency check (degree sum, adjacency symmetry). Cheap;
    // used by tests and after deserialization.
    void validate() const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v + 1) +
                                    " out of range 1.." + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<bool> adj_bits_; // n*n adjacency matrix
};

// DIMACS ASCII edge format: `c` comments, one `p edge <n> <m>` header,
// `e <i> <j>` lines with 1-based endpoints. A declared-vs-actual edge count
// mismatch is reported through `warning` (if non-null), not an error.
Graph parse_dimacs(std::istream& in, std::string* warning = nullptr);
Graph parse_dimacs_file(const std::string& path, std::string* warning = nullptr);
void write_dimacs(const Graph& g, std::ostream& out);

// All cliques of size 2..max_size (max_size <= 5), each as a sorted vertex
// set, output in lexicographic order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int max_size);

// Keeps only cliques not extendable by a common neighbor.
std::vector<VertexSet> filter_maximal_cliques(const Graph& g,
                                              const std::vector<VertexSet>& cliques);

// Chordless cycles of the given odd length >= 5 in canonical form (lowest
// vertex first, smaller neighbor second), lexicographic order, at most cap.
std::vector<Cycle> enumerate_chordless_cycles(const Graph& g, int length,
                                              std::size_t cap = 50000);

inline std::vector<Cycle> enumerate_chordless_5cycles(const Graph& g,
                                                      std::size_t cap = 50000) {
    return enumerate_chordless_cycles(g, 5, cap);
}

} // namespace thetacut

#endif
