#include "onext/graph.hpp"

#include <algorithm>
#include <string>

#include "onext/errors.hpp"

namespace onext {

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) {
        throw InputError("negative vertex count");
    }
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} out of range for " + std::to_string(n) + " vertices");
        }
        if (u == v) {
            throw InputError("self-loop on vertex " + std::to_string(u));
        }
        normalized.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(normalized.begin(), normalized.end());
    auto dup = std::adjacent_find(normalized.begin(), normalized.end());
    if (dup != normalized.end()) {
        throw InputError("duplicate edge {" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + "}");
    }
    build(std::move(normalized));
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void Graph::build(std::vector<Edge> edges) {
    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end());
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

VertexSet Graph::vertices() const {
    VertexSet all(n_);
    for (int v = 0; v < n_; ++v) {
        all[v] = v;
    }
    return all;
}

void validate_vertex_set(const VertexSet& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) {
            throw InputError("vertex " + std::to_string(s[i]) + " out of range for " +
                             std::to_string(n) + " vertices");
        }
        if (i > 0 && s[i - 1] >= s[i]) {
            throw InputError("vertex set is not strictly ascending");
        }
    }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& r) {
    validate_vertex_set(r, g.order());
    InducedSubgraph out;
    out.original = r;
    out.relabel.assign(g.order(), -1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        out.relabel[r[i]] = static_cast<Vertex>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (Vertex w : g.neighbors(r[i])) {
            Vertex j = out.relabel[w];
            if (j > static_cast<Vertex>(i)) {
                edges.emplace_back(static_cast<Vertex>(i), j);
            }
        }
    }
    out.graph = Graph(static_cast<int>(r.size()), edges);
    return out;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> shifted_edges(const Graph& g, int offset) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.size());
    for (const Edge& e : g.edges()) {
        out.emplace_back(e.u + offset, e.v + offset);
    }
    return out;
}

} // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    auto edges = shifted_edges(g1, 0);
    auto second = shifted_edges(g2, g1.order());
    edges.insert(edges.end(), second.begin(), second.end());
    return Graph(g1.order() + g2.order(), edges);
}

Graph complete_sum(const Graph& g1, const Graph& g2) {
    auto edges = shifted_edges(g1, 0);
    auto second = shifted_edges(g2, g1.order());
    edges.insert(edges.end(), second.begin(), second.end());
    for (Vertex u = 0; u < g1.order(); ++u) {
        for (Vertex v = 0; v < g2.order(); ++v) {
            edges.emplace_back(u, g1.order() + v);
        }
    }
    return Graph(g1.order() + g2.order(), edges);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), edges);
}

Substitution substitute(const Graph& h, std::span<const Graph> parts) {
    if (static_cast<int>(parts.size()) != h.order()) {
        throw InputError("substitution needs " + std::to_string(h.order()) + " parts, got " +
                         std::to_string(parts.size()));
    }
    Substitution out;
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        offset[i + 1] = offset[i] + parts[i].order();
        VertexSet module(parts[i].order());
        for (int v = 0; v < parts[i].order(); ++v) {
            module[v] = offset[i] + v;
        }
        out.modules.push_back(std::move(module));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto inner = shifted_edges(parts[i], offset[i]);
        edges.insert(edges.end(), inner.begin(), inner.end());
    }
    for (const Edge& e : h.edges()) {
        for (Vertex a : out.modules[e.u]) {
            for (Vertex b : out.modules[e.v]) {
                edges.emplace_back(a, b);
            }
        }
    }
    out.graph = Graph(offset.back(), edges);
    return out;
}

Multipartite complete_multipartite(std::span<const int> sizes) {
    std::vector<Graph> parts;
    parts.reserve(sizes.size());
    for (int s : sizes) {
        if (s < 1) {
            throw InputError("multipartite part sizes must be positive, got " + std::to_string(s));
        }
        parts.push_back(edgeless_graph(s));
    }
    auto sub = substitute(complete_graph(static_cast<int>(sizes.size())), parts);
    return {std::move(sub.graph), std::move(sub.modules)};
}

Graph edgeless_graph(int n) {
    return Graph(n, std::span<const std::pair<Vertex, Vertex>>{});
}

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw InputError("a cycle needs at least 3 vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph(n, edges);
}

Graph gen_multipartite_extremal(int k) {
    if (k < 0) {
        throw InputError("multipartite-extremal needs k >= 0");
    }
    if (k > 20) {
        throw InputError("multipartite-extremal k is limited to 20");
    }
    std::vector<int> sizes;
    for (int i = 0; i <= k; ++i) {
        sizes.push_back(1 << i);
    }
    return complete_multipartite(sizes).graph;
}

Graph gen_interval_extremal(int k) {
    if (k < 1) {
        throw InputError("interval-extremal needs k >= 1");
    }
    if (k > 20) {
        throw InputError("interval-extremal k is limited to 20");
    }
    Graph g = edgeless_graph(1);
    for (int i = 1; i < k; ++i) {
        g = complete_sum(edgeless_graph(1), disjoint_union(g, g));
    }
    return g;
}

Graph gen_hardness_gadget(const Graph& g, int k) {
    if (k < 2) {
        throw InputError("hardness gadget needs k >= 2");
    }
    return complete_sum(g, edgeless_graph(k * g.order() + 1));
}

} // namespace onext
