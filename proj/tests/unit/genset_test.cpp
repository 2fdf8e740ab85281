#include <gtest/gtest.h>

#include <random>

#include "onext/errors.hpp"
#include "onext/genset.hpp"
#include "onext/partition.hpp"

using namespace onext;
using namespace onext::genset;

TEST(Solve, SingleTarget) {
    auto sol = solve({{5}, 1});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->generators, (std::vector<int>{5}));
    EXPECT_EQ(sol->subsets, (std::vector<std::vector<int>>{{0}}));
}

TEST(Solve, FivePartInstance) {
    Instance inst{{2, 3, 4, 7, 9}, 3};
    auto sol = solve(inst);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->generators, (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(sol->subsets[3], (std::vector<int>{1, 2}));
    EXPECT_EQ(sol->subsets[4], (std::vector<int>{0, 1, 2}));
    EXPECT_TRUE(is_valid(inst, *sol));
    EXPECT_FALSE(solve({{2, 3, 4, 7, 9}, 2}).has_value());
}

TEST(Solve, Validation) {
    EXPECT_THROW(solve({{}, 1}), InputError);
    EXPECT_THROW(solve({{3, 0}, 1}), InputError);
    EXPECT_THROW(solve({{3}, 0}), InputError);
}

TEST(Solve, Budget) {
    Limits limits;
    limits.genset_tuple_budget = 100;
    EXPECT_THROW(solve({{1000, 999, 3}, 3}, limits), ResourceError);
}

TEST(Solve, AlwaysFeasibleWithBinaryManyGenerators) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst;
        int m = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < m; ++i) {
            inst.targets.push_back(1 + static_cast<int>(rng() % 20));
        }
        inst.k = binary_generator_count(inst.alpha_max());
        auto sol = solve(inst);
        ASSERT_TRUE(sol.has_value());
        EXPECT_TRUE(is_valid(inst, *sol));
    }
}

TEST(SubsetSum, SmallestIndexSet) {
    std::vector<int> gens = {1, 2, 3};
    EXPECT_EQ(subset_sum(gens, 3), (std::vector<int>{0, 1}));
    EXPECT_EQ(subset_sum(gens, 6), (std::vector<int>{0, 1, 2}));
    EXPECT_FALSE(subset_sum(gens, 7).has_value());
}

TEST(Binary, Generators) {
    EXPECT_EQ(binary_generators(1), (std::vector<int>{1}));
    EXPECT_EQ(binary_generators(9), (std::vector<int>{1, 2, 4, 8, 16}));
    EXPECT_EQ(binary_generator_count(9), 5);
    std::vector<int> targets = {9, 5, 1};
    Solution sol = binary_solution(targets);
    EXPECT_EQ(sol.subsets[0], (std::vector<int>{0, 3}));
    EXPECT_TRUE(is_valid({targets, 5}, sol));
}

TEST(Reconstruct, BalancedPair) {
    std::vector<int> sizes = {4, 4};
    Solution sol{{4}, {{0}, {0}}};
    Partition p = from_solution(sizes, sol);
    EXPECT_EQ(used_colors(p), 1);
    EXPECT_TRUE(verify_partition(complete_multipartite(sizes).graph, p));
}

TEST(Reconstruct, FiveParts) {
    std::vector<int> sizes = {2, 3, 4, 7, 9};
    auto sol = solve(to_instance(sizes, 3));
    ASSERT_TRUE(sol.has_value());
    Partition p = from_solution(sizes, *sol);
    EXPECT_EQ(used_colors(p), 3);
    EXPECT_TRUE(verify_partition(complete_multipartite(sizes).graph, p));
}

TEST(Reconstruct, RejectsInvalidSolution) {
    std::vector<int> sizes = {2, 3};
    EXPECT_THROW(from_solution(sizes, Solution{{2}, {{0}, {0}}}), InputError);
}

TEST(Reconstruct, RandomRoundTrip) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> sizes;
        int m = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i) {
            sizes.push_back(1 + static_cast<int>(rng() % 8));
        }
        int k = 1 + static_cast<int>(rng() % 3);
        auto sol = solve(to_instance(sizes, k));
        if (!sol) {
            continue;
        }
        EXPECT_TRUE(verify_partition(complete_multipartite(sizes).graph, from_solution(sizes, *sol)));
    }
}

TEST(Equivalence, MatchesChiOnMultipartiteGraphs) {
    for (int m = 1; m <= 3; ++m) {
        std::vector<int> sizes(m, 1);
        while (true) {
            int chi = chi_1ext(complete_multipartite(sizes).graph).chi;
            for (int k = 1; k <= 3; ++k) {
                EXPECT_EQ(solve(to_instance(sizes, k)).has_value(), chi <= k);
            }
            int i = 0;
            while (i < m && sizes[i] == 5) {
                sizes[i++] = 1;
            }
            if (i == m) {
                break;
            }
            ++sizes[i];
        }
    }
}

TEST(TextFormat, RoundTrip) {
    Instance inst = parse_instance("targets: 2 3 4 7 9\nk: 3\n");
    EXPECT_EQ(inst.targets, (std::vector<int>{2, 3, 4, 7, 9}));
    EXPECT_EQ(inst.k, 3);
    Instance back = parse_instance(format_instance(inst));
    EXPECT_EQ(back.targets, inst.targets);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_THROW(parse_instance("k: 3\n"), InputError);
}
