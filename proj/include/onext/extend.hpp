#pragma once

#include <optional>

#include "onext/graph.hpp"
#include "onext/limits.hpp"
#include "onext/moddecomp.hpp"

namespace onext {

struct ExtReport {
    bool is_1ext = false;
    int alpha = 0;
    // A vertex in no maximum independent set. Only the oracle path fills it.
    std::optional<Vertex> witness_failure;
};

// Linear pass over a cotree. Throws InputError if the tree has a prime node.
ExtReport is_1ext_cograph(const MDTree& t);

// Recursion over the modular decomposition; prime nodes are decided by an
// exhaustive scan of their weighted representative graph.
ExtReport is_1ext_mw(const Graph& g, const MDTree& t, const Limits& limits = default_limits());

// Brute-force reference with a failure witness.
ExtReport is_1ext_by_oracle(const Graph& g);

} // namespace onext
