/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace thetacut {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_bits_.assign(static_cast<std::size_t>(n) * n, false);
    adjacency_.assign(n, {});
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: [" +
                                        std::to_string(u + 1) + "," +
                                        std::to_string(v + 1) + "]");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
        if (u > v) std::swap(u, v);
        const std::size_t pos = static_cast<std::size_t>(u) * n + v;
        if (adj_bits_[pos]) continue; // duplicate
        adj_bits_[pos] = true;
        adj_bits_[static_cast<std::size_t>(v) * n + u] = true;
        edges_.emplace_back(u, v);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp;
    comp.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 - edges_.size());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_bits_[static_cast<std::size_t>(u) * n_ + v]) comp.emplace_back(u, v);
    return Graph(n_, comp);
}

void Graph::validate() const {
    std::size_t degree_sum = 0;
    for (int v = 0; v < n_; ++v) {
        degree_sum += adjacency_[v].size();
        for (int u : adjacency_[v]) {
            if (u == v) throw std::logic_error("self-loop in adjacency");
            if (!is_edge(u, v)) throw std::logic_error("adjacency/matrix mismatch");
        }
        if (std::adjacent_find(adjacency_[v].begin(), adjacency_[v].end()) !=
            adjacency_[v].end())
            throw std::logic_error("duplicate neighbor entry");
    }
    if (degree_sum != 2 * edges_.size())
        throw std::logic_error("degree sum != 2m");
    for (auto [u, v] : edges_)
        if (!(u < v) || !is_edge(u, v)) throw std::logic_error("bad edge list entry");
}

Graph parse_dimacs(std::istream& in, std::string* warning) {
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag.empty() || tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            long pn = 0, pm = 0;
            if (!(ss >> fmt >> pn >> pm) || (fmt != "edge" && fmt != "col"))
                throw ParseError("malformed problem line '" + line + "'", lineno);
            if (pn <= 0) throw ParseError("vertex count must be positive", lineno);
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            n = static_cast<int>(pn);
            declared_m = pm;
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", lineno);
            long u = 0, v = 0;
            if (!(ss >> u >> v)) throw ParseError("malformed edge line '" + line + "'", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of 1.." + std::to_string(n), lineno);
            if (u == v) throw ParseError("self-loop", lineno);
            edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else if (tag == "n" || tag == "d" || tag == "v" || tag == "x") {
            continue; // weight/extension lines used by some benchmark files
        } else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
    Graph g(n, edges);
    if (warning) {
        warning->clear();
        if (declared_m != g.num_edges())
            *warning = "declared m=" + std::to_string(declared_m) + " but file has " +
                       std::to_string(g.num_edges()) + " distinct edges";
    }
    return g;
}

Graph parse_dimacs_file(const std::string& path, std::string* warning) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in, warning);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

namespace {

// extend the current clique with vertices greater than its last element;
// emits in lexicographic order by construction
void extend_clique(const Graph& g, VertexSet& current, int max_size,
                   std::vector<VertexSet>& out) {
    const int last = current.back();
    for (int w = last + 1; w < g.num_vertices(); ++w) {
        bool joined = true;
        for (int u : current)
            if (!g.is_edge(u, w)) {
                joined = false;
                break;
            }
        if (!joined) continue;
        current.push_back(w);
        out.push_back(current);
        if (static_cast<int>(current.size()) < max_size)
            extend_clique(g, current, max_size, out);
        current.pop_back();
    }
}

} // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int max_size) {
    if (max_size < 2 || max_size > 5)
        throw std::invalid_argument("clique enumeration supports sizes 2..5");
    std::vector<VertexSet> out;
    VertexSet current;
    for (int v = 0; v < g.num_vertices(); ++v) {
        current = {v};
        extend_clique(g, current, max_size, out);
    }
    return out;
}

std::vector<VertexSet> filter_maximal_cliques(const Graph& g,
                                              const std::vector<VertexSet>& cliques) {
    std::vector<VertexSet> out;
    for (const auto& q : cliques) {
        bool maximal = true;
        for (int w = 0; w < g.num_vertices() && maximal; ++w) {
            if (std::binary_search(q.begin(), q.end(), w)) continue;
            bool extends = true;
            for (int u : q)
                if (!g.is_edge(u, w)) {
                    extends = false;
                    break;
                }
            if (extends) maximal = false;
        }
        if (maximal) out.push_back(q);
    }
    return out;
}

namespace {

// DFS over paths a-...-last of fixed target length. Kept canonical by
// requiring a to be the cycle minimum and path[1] < closing vertex; chords
// are pruned as soon as both endpoints are on the path.
void chordless_dfs(const Graph& g, std::vector<int>& path, int length,
                   std::size_t cap, std::vector<Cycle>& out) {
    if (out.size() >= cap) return;
    const int a = path.front();
    const int last = path.back();
    const int depth = static_cast<int>(path.size());
    if (depth == length) {
        // close the cycle: last must be adjacent to a (chords already pruned)
        if (g.is_edge(last, a) && last > path[1]) {
            out.push_back(Cycle{path, true});
        }
        return;
    }
    for (int w : g.neighbors(last)) {
        if (w <= a) continue;
        if (out.size() >= cap) return;
        // w must avoid chords to every earlier path vertex except `last`;
        // adjacency to a is only allowed when w closes the cycle
        bool ok = true;
        for (int idx = 0; idx + 1 < depth; ++idx) {
            const int u = path[idx];
            if (w == u || (g.is_edge(w, u) && !(idx == 0 && depth == length - 1))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (depth == length - 1 && !g.is_edge(w, a)) continue;
        path.push_back(w);
        chordless_dfs(g, path, length, cap, out);
        path.pop_back();
    }
}

} // namespace

std::vector<Cycle> enumerate_chordless_cycles(const Graph& g, int length,
                                              std::size_t cap) {
    if (length < 5) throw std::invalid_argument("cycle length must be >= 5");
    std::vector<Cycle> out;
    std::vector<int> path;
    for (int a = 0; a < g.num_vertices() && out.size() < cap; ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            path = {a, b};
            chordless_dfs(g, path, length, cap, out);
            if (out.size() >= cap) break;
        }
    }
    return out;
}

} // namespace thetacut
