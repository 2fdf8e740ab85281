#pragma once

// Word-sized vertex sets for the exhaustive routines (n <= 64).

#include <bit>
#include <cstdint>
#include <vector>

#include "onext/graph.hpp"

namespace onext::detail {

using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask full_mask(int n) { return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int lowest(Mask m) { return std::countr_zero(m); }

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(g.order(), 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= bit(e.v);
        nbr[e.v] |= bit(e.u);
    }
    return nbr;
}

inline VertexSet to_vertex_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

} // namespace onext::detail
