#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfchrom/permgroup.hpp"

namespace hopfchrom {

// A finite simple undirected graph on vertices 0..n-1. Edge list is kept
// normalized (i < j, sorted, unique); the type is immutable after build.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph empty_graph(int n) { return Graph(n, {}); }
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    // The five-vertex butterfly: two triangles sharing vertex 0.
    static Graph butterfly() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }
    // The second graph from the chromatic-polynomial pair: a kite (K4 minus an
    // edge) with a pendant vertex. Same chromatic polynomial as the butterfly.
    static Graph kite_with_pendant() {
        return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    }

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return (int)edges_.size(); }
    bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1ull; }
    std::uint64_t adjacency_mask(int v) const { return adj_[v]; }
    int degree_of(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.edges_ < b.edges_;
    }

    std::string str() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

struct CanonicalWitness {
    Graph canonical;
    Perm relabel;  // input vertex -> canonical vertex
};

Graph parse_graph6(const std::string& text, int vertex_cap = 0);
std::string write_graph6(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph relabel_graph(const Graph& g, const Perm& relabel);

// Blocks of connected vertices, each sorted, ordered by minimal element.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Canonical representative of the isomorphism class: the relabelling whose
// row-major upper-triangle adjacency bitstring is lexicographically smallest.
// Refinement + individualization, pruned by automorphisms discovered when two
// branches reach equal leaves.
CanonicalWitness canonical_form(const Graph& g, int vertex_cap = 0);

// Full automorphism group via refinement-pruned backtracking.
PermGroup automorphism_group(const Graph& g, int vertex_cap = 0, long long order_cap = 0);

// Plain n!-scan reference used to cross-check the search (n <= 7 in tests).
PermGroup automorphism_group_bruteforce(const Graph& g);

}  // namespace hopfchrom
