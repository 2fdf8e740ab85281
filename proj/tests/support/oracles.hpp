#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's search code; graphs are read through Graph::adjacent / edges only.

#include <cstdint>
#include <set>
#include <vector>

#include "onext/graph.hpp"
#include "onext/metrics.hpp"

namespace onext::testing {

using Mask = std::uint32_t;

// alpha and 1-extendability of every induced subgraph G[mask], n <= 20.
// alpha by the include/exclude recurrence on the lowest vertex; 1-extendability
// straight from the definition alpha(G[m] - N[v]) = alpha(G[m]) - 1.
class SubsetTable {
public:
    explicit SubsetTable(const Graph& g);

    int alpha(Mask m) const { return alpha_[m]; }
    bool is_1ext(Mask m) const { return ext_[m] != 0; }
    Mask full() const { return full_; }
    Mask neighbors(int v) const { return nbr_[v]; }

private:
    Mask full_;
    std::vector<Mask> nbr_;
    std::vector<int> alpha_;
    std::vector<char> ext_;
};

// Every independent set of maximum size, by scanning all 2^n subsets.
std::vector<std::vector<int>> brute_max_independent_sets(const Graph& g);

int brute_alpha(const Graph& g);
bool brute_is_1ext(const Graph& g);

// Feasible k-tuples from all k^n colorings.
std::set<std::vector<int>> brute_feasible_tuples(const Graph& g, int k);

// Smallest k admitting a 1-extendable k-partition (k^n colorings per k).
int brute_chi_1ext(const Graph& g);

// Proper chromatic number by brute force.
int brute_chromatic_number(const Graph& g);

// All modules (including trivial ones) of a graph with n <= 16.
std::vector<Mask> all_modules(const Graph& g);

// Modules that overlap no other module.
std::vector<Mask> strong_modules(const Graph& g);

// p_v from the displayed sum over all independent sets (empty set included).
std::vector<Rational> brute_access_proportion(const Graph& g, const Rational& theta);

std::vector<int> mask_to_vertices(Mask m);

// Plain include/exclude recursion with no pruning, for graphs up to 64 vertices.
// Meant for sparse or small inputs where 2^n tables are out of reach.
int reference_alpha(const Graph& g, const VertexSet& subset);
bool reference_is_1ext(const Graph& g, const VertexSet& subset);

} // namespace onext::testing
