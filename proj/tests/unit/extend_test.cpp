#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "onext/errors.hpp"
#include "onext/extend.hpp"
#include "oracles.hpp"

using namespace onext;
using namespace onext::testing;

TEST(Extend, Examples) {
    ExtReport r = is_1ext_mw(p4(), decompose(p4()));
    EXPECT_TRUE(r.is_1ext);
    EXPECT_EQ(r.alpha, 2);

    ExtReport bad = is_1ext_by_oracle(triangle_with_tail());
    EXPECT_FALSE(bad.is_1ext);
    EXPECT_EQ(bad.witness_failure, 2);
    EXPECT_FALSE(is_1ext_mw(triangle_with_tail(), decompose(triangle_with_tail())).is_1ext);

    // K1 + (K1 u K1) has alpha 2 and the apex is in no maximum set.
    Graph g2 = gen_interval_extremal(2);
    ExtReport c = is_1ext_cograph(decompose(g2));
    EXPECT_FALSE(c.is_1ext);
    EXPECT_EQ(c.alpha, 2);
}

TEST(Extend, CompleteMultipartiteNeedsBalancedParts) {
    std::vector<int> balanced = {3, 3, 3};
    std::vector<int> skewed = {3, 2, 3};
    EXPECT_TRUE(is_1ext_cograph(decompose(complete_multipartite(balanced).graph)).is_1ext);
    EXPECT_FALSE(is_1ext_cograph(decompose(complete_multipartite(skewed).graph)).is_1ext);
}

TEST(Extend, ExhaustiveSmallGraphs) {
    for (int n = 1; n <= 6; ++n) {
        int pairs = pair_count(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            MDTree t = decompose(g);
            bool expect = brute_is_1ext(g);
            ExtReport r = is_1ext_mw(g, t);
            ASSERT_EQ(r.is_1ext, expect) << "n=" << n << " mask=" << mask;
            ASSERT_EQ(r.alpha, brute_alpha(g));
            if (is_cograph(t)) {
                ASSERT_EQ(is_1ext_cograph(t).is_1ext, expect);
            }
        }
    }
}

TEST(Extend, RandomGraphs) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 16), (rng() % 9 + 1) / 10.0, rng);
        EXPECT_EQ(is_1ext_mw(g, decompose(g)).is_1ext, brute_is_1ext(g));
        EXPECT_EQ(is_1ext_by_oracle(g).is_1ext, brute_is_1ext(g));
    }
}

TEST(Extend, RandomCographs) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_cograph(1 + static_cast<int>(rng() % 16), rng);
        ExtReport r = is_1ext_cograph(decompose(g));
        EXPECT_EQ(r.is_1ext, brute_is_1ext(g));
        EXPECT_EQ(r.alpha, brute_alpha(g));
    }
}

TEST(Extend, LargeCograph) {
    std::mt19937_64 rng(61);
    Graph g = random_cograph(400, rng);
    MDTree t = decompose(g);
    EXPECT_EQ(is_1ext_cograph(t).is_1ext, is_1ext_mw(g, t).is_1ext);
}

TEST(Extend, CographPathRejectsPrimeNodes) {
    EXPECT_THROW(is_1ext_cograph(decompose(p4())), InputError);
}
