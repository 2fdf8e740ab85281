#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace onext {

using Vertex = int;

// Sorted, strictly ascending list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v; // u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Throws InputError on self-loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return n_ == 0; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    VertexSet vertices() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build(std::vector<Edge> edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Throws InputError unless s is strictly ascending within [0, n).
void validate_vertex_set(const VertexSet& s, int n);

struct InducedSubgraph {
    Graph graph;
    VertexSet original; // new index -> original vertex
    std::vector<Vertex> relabel; // original vertex -> new index, or -1
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& r);

// g1's vertices keep their labels; g2's are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complete_sum(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

struct Substitution {
    Graph graph;
    std::vector<VertexSet> modules; // modules[i] holds the vertices of parts[i]
};

// Replaces vertex i of h by parts[i]; parts are laid out consecutively in list order.
Substitution substitute(const Graph& h, std::span<const Graph> parts);

struct Multipartite {
    Graph graph;
    std::vector<VertexSet> parts;
};

Multipartite complete_multipartite(std::span<const int> sizes);

Graph edgeless_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Complete multipartite graph with parts of sizes 1, 2, 4, ..., 2^k.
Graph gen_multipartite_extremal(int k);

// G_1 = K1, G_{k+1} = K1 + (G_k u G_k); the apex is always vertex 0.
Graph gen_interval_extremal(int k);

// g + I_{k*n+1}: complete sum with an independent set of k*n(g)+1 new vertices.
Graph gen_hardness_gadget(const Graph& g, int k);

} // namespace onext
