#pragma once

#include <string>
#include <vector>

#include "onext/graph.hpp"
#include "onext/isets.hpp"

namespace onext {

enum class NodeKind { Leaf, Union, Join, Prime };

struct MDNode {
    NodeKind kind = NodeKind::Leaf;
    Vertex vertex = -1;        // Leaf only
    std::vector<int> children; // ordered by minimum vertex of each child module
    Graph representative;      // Prime only; vertex i stands for children[i]
    VertexSet module;          // vertices below this node
};

// Modular decomposition tree. Node ids index nodes(); children precede parents.
class MDTree {
public:
    MDTree() = default;
    MDTree(std::vector<MDNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {}

    int root() const noexcept { return root_; }
    const MDNode& node(int id) const { return nodes_.at(id); }
    const std::vector<MDNode>& nodes() const noexcept { return nodes_; }
    int vertex_count() const { return static_cast<int>(nodes_.at(root_).module.size()); }

private:
    std::vector<MDNode> nodes_;
    int root_ = -1;
};

// Throws InputError on the empty graph.
MDTree decompose(const Graph& g);

// Largest prime representative; 2 for a cograph with an edge or non-edge, 1 for K1.
int modular_width(const MDTree& t);

bool is_cograph(const MDTree& t);

// Quotient at an internal node: K_m for Join, I_m for Union, H for Prime.
Graph representative_graph(const MDTree& t, int node);

// Representative graph weighted by alpha(G[M_child]).
WeightedGraph weighted_representative(const Graph& g, const MDTree& t, int node);

bool verify_module(const Graph& g, const VertexSet& m);

// Rebuilds the graph by substituting every node's children into its representative.
Graph reconstruct(const MDTree& t);

// Nested text form, e.g. join(union(leaf 0,leaf 1),leaf 2). Prime nodes list
// their representative's edges over child positions: prime{0-1,1-2,2-3}(...).
std::string to_text(const MDTree& t);

} // namespace onext
