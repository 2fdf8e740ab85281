#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "onext/errors.hpp"
#include "onext/isets.hpp"
#include "onext/moddecomp.hpp"
#include "oracles.hpp"

using namespace onext;
using namespace onext::testing;

namespace {

std::vector<Mask> tree_modules(const MDTree& t) {
    std::vector<Mask> out;
    for (const auto& node : t.nodes()) {
        Mask m = 0;
        for (Vertex v : node.module) {
            m |= Mask{1} << v;
        }
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Decompose, P4IsPrime) {
    MDTree t = decompose(p4());
    EXPECT_EQ(t.node(t.root()).kind, NodeKind::Prime);
    EXPECT_EQ(t.node(t.root()).children.size(), 4u);
    EXPECT_EQ(modular_width(t), 4);
    EXPECT_FALSE(is_cograph(t));
    EXPECT_EQ(representative_graph(t, t.root()), p4());
}

TEST(Decompose, C5) {
    MDTree t = decompose(cycle_graph(5));
    EXPECT_EQ(modular_width(t), 5);
}

TEST(Decompose, SingleVertexAndEmpty) {
    MDTree t = decompose(edgeless_graph(1));
    EXPECT_EQ(t.node(t.root()).kind, NodeKind::Leaf);
    EXPECT_EQ(modular_width(t), 1);
    EXPECT_TRUE(is_cograph(t));
    EXPECT_THROW(decompose(Graph(0, {})), InputError);
}

TEST(Decompose, CompleteBipartiteText) {
    std::vector<int> sizes = {2, 3};
    MDTree t = decompose(complete_multipartite(sizes).graph);
    EXPECT_EQ(to_text(t), "join(union(leaf 0,leaf 1),union(leaf 2,leaf 3,leaf 4))");
    EXPECT_EQ(modular_width(t), 2);
    EXPECT_TRUE(is_cograph(t));
}

TEST(Decompose, PrimeText) {
    EXPECT_EQ(to_text(decompose(path_graph(4))),
              "prime{0-1,1-2,2-3}(leaf 0,leaf 1,leaf 2,leaf 3)");
}

TEST(Decompose, ReconstructsRandomGraphs) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 16), (rng() % 9 + 1) / 10.0, rng);
        MDTree t = decompose(g);
        EXPECT_EQ(reconstruct(t), g);
        for (const auto& node : t.nodes()) {
            EXPECT_TRUE(verify_module(g, node.module));
        }
    }
}

TEST(Decompose, NodesAreTheStrongModules) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.45, rng);
        auto strong = strong_modules(g);
        std::sort(strong.begin(), strong.end());
        EXPECT_EQ(tree_modules(decompose(g)), strong);
    }
}

TEST(Decompose, CographsHaveNoPrimeNodes) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_cograph(1 + static_cast<int>(rng() % 30), rng);
        MDTree t = decompose(g);
        EXPECT_TRUE(is_cograph(t));
        EXPECT_LE(modular_width(t), 2);
        EXPECT_EQ(reconstruct(t), g);
    }
}

TEST(Decompose, SubstitutionBoundsWidth) {
    std::vector<Graph> parts = {complete_graph(3), edgeless_graph(2), path_graph(4), edgeless_graph(1),
                                cycle_graph(5)};
    Graph g = substitute(cycle_graph(5), parts).graph;
    EXPECT_EQ(modular_width(decompose(g)), 5);
}

TEST(WeightedRepresentative, WeightsAreChildAlphas) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 12), 0.4, rng);
        MDTree t = decompose(g);
        for (int id = 0; id < static_cast<int>(t.nodes().size()); ++id) {
            const MDNode& node = t.node(id);
            if (node.kind == NodeKind::Leaf) {
                continue;
            }
            WeightedGraph h = weighted_representative(g, t, id);
            ASSERT_EQ(h.weights.size(), node.children.size());
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                EXPECT_EQ(h.weights[i], alpha(g, t.node(node.children[i]).module));
            }
            EXPECT_EQ(weighted_alpha(h), alpha(g, node.module));
        }
    }
}

TEST(VerifyModule, Examples) {
    EXPECT_TRUE(verify_module(p4(), {0}));
    EXPECT_FALSE(verify_module(p4(), {0, 1}));
    EXPECT_TRUE(verify_module(p4(), {0, 1, 2, 3}));
    EXPECT_TRUE(verify_module(cycle_graph(4), {0, 2}));
}
