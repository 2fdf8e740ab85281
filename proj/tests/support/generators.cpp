#include "generators.hpp"

namespace onext::testing {

Graph p4() {
    return path_graph(4);
}

Graph triangle_with_tail() {
    return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
}

int pair_count(int n) {
    return n * (n - 1) / 2;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int i = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++i) {
            if (mask >> i & 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph random_cograph(int leaves, std::mt19937_64& rng) {
    if (leaves <= 1) {
        return edgeless_graph(1);
    }
    std::uniform_int_distribution<int> split(1, leaves - 1);
    int left = split(rng);
    Graph a = random_cograph(left, rng);
    Graph b = random_cograph(leaves - left, rng);
    return std::bernoulli_distribution(0.5)(rng) ? disjoint_union(a, b) : complete_sum(a, b);
}

} // namespace onext::testing
