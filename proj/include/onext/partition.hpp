#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "onext/graph.hpp"
#include "onext/limits.hpp"
#include "onext/moddecomp.hpp"

namespace onext {

// Deduplicated set of k-tuples of per-class independence numbers, sorted
// lexicographically. Each tuple keeps one witness: a fixed-width row of
// indices that says how it was produced (a leaf's color, the pair of operand
// tuples of a sum/join, or one tuple per child at a prime node).
class FeasibleTupleSet {
public:
    FeasibleTupleSet() = default;
    FeasibleTupleSet(int k, int witness_width) : k_(k), witness_width_(witness_width) {}

    // e_1, ..., e_k: a single vertex takes any one color.
    static FeasibleTupleSet single_vertex(int k);

    // Builds a set from explicit tuples (duplicates dropped, witness rows empty).
    static FeasibleTupleSet from_tuples(int k, const std::vector<std::vector<int>>& tuples);

    int k() const noexcept { return k_; }
    int witness_width() const noexcept { return witness_width_; }
    std::size_t size() const noexcept { return k_ == 0 ? 0 : values_.size() / k_; }
    bool empty() const noexcept { return values_.empty(); }

    std::span<const int> tuple(std::size_t i) const {
        return {values_.data() + i * k_, static_cast<std::size_t>(k_)};
    }
    std::span<const std::uint32_t> witness(std::size_t i) const {
        return {witness_.data() + i * witness_width_, static_cast<std::size_t>(witness_width_)};
    }
    std::vector<std::vector<int>> tuples() const;
    bool contains(std::span<const int> t) const;

private:
    friend class TupleSetBuilder;

    int k_ = 0;
    int witness_width_ = 0;
    std::vector<int> values_;
    std::vector<std::uint32_t> witness_;
};

// Componentwise sums of all pairs (disjoint union of the underlying graphs).
FeasibleTupleSet tuple_sum(const FeasibleTupleSet& s1, const FeasibleTupleSet& s2,
                           const Limits& limits = default_limits());

// Pairs agreeing on every coordinate where both are non-zero (complete sum).
FeasibleTupleSet tuple_join(const FeasibleTupleSet& s1, const FeasibleTupleSet& s2,
                            const Limits& limits = default_limits());

// Root tuple set of a cotree. Throws InputError on a prime node.
FeasibleTupleSet feasible_tuples_cograph(const MDTree& t, int k,
                                         const Limits& limits = default_limits());

// Root tuple set over an arbitrary modular decomposition.
FeasibleTupleSet feasible_tuples_mw(const Graph& g, const MDTree& t, int k,
                                    const Limits& limits = default_limits());

// color[v] in 1..k; classes may be empty.
struct Partition {
    int k = 0;
    std::vector<int> color;

    friend bool operator==(const Partition&, const Partition&) = default;
};

std::vector<VertexSet> color_classes(const Partition& p);
int used_colors(const Partition& p);

// Relabels the non-empty classes 1..c in order of first appearance.
Partition compact(const Partition& p);

// Throws InputError if a vertex is uncolored or a color is outside 1..k.
bool verify_partition(const Graph& g, const Partition& p);

// A 1-extendable k-partition reconstructed from the tuple DP, if one exists.
std::optional<Partition> find_1ext_partition(const Graph& g, int k,
                                             const Limits& limits = default_limits());

struct ChiResult {
    int chi = 0;
    Partition certificate;
};

ChiResult chi_1ext(const Graph& g, const Limits& limits = default_limits());

// Strips the MIS-covered vertices layer by layer; at most alpha(g) classes.
Partition peel_partition(const Graph& g);

// Greedy maximum-independent-set stripping plus peeling of the small remainder;
// at most 2*sqrt(n) classes.
Partition greedy_sqrt_partition(const Graph& g);

// k1 + k2 = k, k1 <= alpha1, k2 <= alpha2, and
// max(k1-1, alpha1-k1) + max(k2-1, alpha2-k2) <= max(k-1, alpha1+alpha2-k).
std::pair<int, int> split_integers(int alpha1, int alpha2, int k);

// At most floor(log2(alpha))+1 classes on a cograph. Throws InputError otherwise.
Partition log_partition_cograph(const MDTree& t);

// Independence number of every node of a cotree (sum at unions, max at joins).
std::vector<int> cotree_alphas(const MDTree& t);

} // namespace onext
