#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "onext/graph.hpp"
#include "onext/limits.hpp"

namespace onext {

using BigInt = boost::multiprecision::cpp_int;

struct MisStats {
    int alpha = 0;
    BigInt total_mis_count;                  // #alpha(G)
    std::vector<BigInt> per_vertex_mis_count; // #_v alpha(G)
};

// Independence number by branch and bound (no vertex cap).
int alpha(const Graph& g);

// Independence number of G[subset].
int alpha(const Graph& g, const VertexSet& subset);

// One maximum independent set, deterministic for a given graph.
VertexSet maximum_independent_set(const Graph& g);

// Exact MIS counts. Throws ResourceError above limits.mis_enumeration_vertices.
MisStats mis_stats(const Graph& g, const Limits& limits = default_limits());

// Visits every maximum independent set once, in lexicographic order of the
// sorted vertex lists. Stops early when the visitor returns false.
void for_each_max_independent_set(const Graph& g,
                                  const std::function<bool(const VertexSet&)>& visit,
                                  const Limits& limits = default_limits());

std::vector<VertexSet> enumerate_max_independent_sets(const Graph& g,
                                                      const Limits& limits = default_limits());

// Vertices that lie in at least one maximum independent set.
VertexSet mis_covered_vertices(const Graph& g);

// Every vertex lies in some maximum independent set (alpha(G - N[v]) = alpha(G) - 1).
bool is_1ext_oracle(const Graph& g);

// First vertex in no maximum independent set, if any.
std::optional<Vertex> first_uncovered_vertex(const Graph& g);

struct WeightedGraph {
    Graph base;
    std::vector<int> weights; // one positive weight per vertex of base
};

struct WeightedSummary {
    int alpha = 0;        // maximum weight of an independent set
    bool is_1ext = false; // every vertex in some maximum-weight independent set
};

// Exhaustive scan of the independent sets of h.base. Throws ResourceError above
// limits.weighted_vertices and InputError on non-positive or misaligned weights.
WeightedSummary weighted_summary(const WeightedGraph& h, const Limits& limits = default_limits());
int weighted_alpha(const WeightedGraph& h, const Limits& limits = default_limits());
bool weighted_is_1ext(const WeightedGraph& h, const Limits& limits = default_limits());

} // namespace onext
