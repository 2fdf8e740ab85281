#pragma once

#include <cstdint>

namespace onext {

// Brute-force caps. These are configuration, not constants: every exhaustive
// routine takes a Limits and reports a ResourceError instead of truncating.
struct Limits {
    int mis_enumeration_vertices = 40;      // mis_stats / enumerate_max_independent_sets
    int weighted_vertices = 25;             // 2^m scan over a weighted graph
    int independent_set_family_vertices = 25; // access_proportion sums over all independent sets
    std::uint64_t tuple_product_budget = 1u << 20;   // prime-node cartesian product size
    std::uint64_t tuple_set_budget = 5'000'000;      // tuples kept per DP node
    std::uint64_t genset_tuple_budget = 50'000'000;  // generator multisets scanned by genset::solve
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

} // namespace onext
