#include "onext/isets.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "masks.hpp"
#include "onext/errors.hpp"

namespace onext {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Branch and bound on a maximum-degree vertex. Vertices of degree <= 1 in the
// candidate set are taken greedily (some maximum independent set contains them);
// a greedy clique cover of the candidates bounds what the subtree can still add.
class MaxIndependentSetSearch {
public:
    explicit MaxIndependentSetSearch(const Graph& g) : n_(g.order()), adj_(g.order(), Bits(g.order())) {
        for (const Edge& e : g.edges()) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
        }
    }

    VertexSet solve(Bits candidates) {
        current_.clear();
        best_ = greedy(candidates);
        expand(std::move(candidates));
        VertexSet out = best_;
        std::sort(out.begin(), out.end());
        return out;
    }

    Bits all() const {
        Bits b(n_);
        b.set();
        return b;
    }

    Bits closed_neighborhood_removed(Vertex v) const {
        Bits b = all() - adj_[v];
        b.reset(v);
        return b;
    }

private:
    VertexSet greedy(Bits cand) const {
        VertexSet chosen;
        while (cand.any()) {
            Vertex pick = -1;
            std::size_t best_degree = SIZE_MAX;
            for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
                std::size_t d = (adj_[v] & cand).count();
                if (d < best_degree) {
                    best_degree = d;
                    pick = static_cast<Vertex>(v);
                }
            }
            chosen.push_back(pick);
            cand -= adj_[pick];
            cand.reset(pick);
        }
        return chosen;
    }

    std::size_t clique_cover_bound(Bits rest) const {
        std::size_t cliques = 0;
        while (rest.any()) {
            auto v = rest.find_first();
            rest.reset(v);
            Bits pool = rest & adj_[v];
            while (pool.any()) {
                auto w = pool.find_first();
                rest.reset(w);
                pool.reset(w);
                pool &= adj_[w];
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(Bits cand) {
        std::size_t pushed = 0;
        while (cand.any()) {
            Vertex min_v = -1, max_v = -1;
            std::size_t min_d = SIZE_MAX, max_d = 0;
            for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
                std::size_t d = (adj_[v] & cand).count();
                if (d < min_d) {
                    min_d = d;
                    min_v = static_cast<Vertex>(v);
                }
                if (max_v < 0 || d > max_d) {
                    max_d = d;
                    max_v = static_cast<Vertex>(v);
                }
            }
            if (min_d <= 1) {
                current_.push_back(min_v);
                ++pushed;
                cand -= adj_[min_v];
                cand.reset(min_v);
                continue;
            }
            if (current_.size() + clique_cover_bound(cand) <= best_.size()) {
                current_.resize(current_.size() - pushed);
                return;
            }
            Bits with = cand - adj_[max_v];
            with.reset(max_v);
            current_.push_back(max_v);
            expand(std::move(with));
            current_.pop_back();
            cand.reset(max_v);
        }
        if (current_.size() > best_.size()) {
            best_ = current_;
        }
        current_.resize(current_.size() - pushed);
    }

    int n_;
    std::vector<Bits> adj_;
    VertexSet current_;
    VertexSet best_;
};

struct CountEntry {
    int alpha = 0;
    BigInt count;
};

// Memoized (alpha, #MIS) over vertex masks, n <= 64.
class MisCounter {
public:
    explicit MisCounter(const Graph& g) : nbr_(detail::neighbor_masks(g)) {}

    CountEntry count(detail::Mask m) {
        if (m == 0) {
            return {0, 1};
        }
        if (auto it = memo_.find(m); it != memo_.end()) {
            return it->second;
        }
        CountEntry result;
        detail::Mask comp = component_of_lowest(m);
        if (comp != m) {
            CountEntry a = count(comp);
            CountEntry b = count(m & ~comp);
            result = {a.alpha + b.alpha, a.count * b.count};
        } else {
            Vertex pivot = -1;
            int pivot_degree = -1;
            for (detail::Mask rest = m; rest; rest &= rest - 1) {
                Vertex v = detail::lowest(rest);
                int d = detail::popcount(nbr_[v] & m);
                if (d > pivot_degree) {
                    pivot_degree = d;
                    pivot = v;
                }
            }
            if (pivot_degree == 0) {
                result = {detail::popcount(m), 1};
            } else {
                detail::Mask without = m & ~detail::bit(pivot);
                CountEntry out = count(without);
                CountEntry in = count(without & ~nbr_[pivot]);
                in.alpha += 1;
                result.alpha = std::max(out.alpha, in.alpha);
                if (out.alpha == result.alpha) {
                    result.count += out.count;
                }
                if (in.alpha == result.alpha) {
                    result.count += in.count;
                }
            }
        }
        memo_.emplace(m, result);
        return result;
    }

    int alpha(detail::Mask m) { return count(m).alpha; }

    detail::Mask neighbors(Vertex v) const { return nbr_[v]; }

private:
    detail::Mask component_of_lowest(detail::Mask m) const {
        detail::Mask seen = detail::bit(detail::lowest(m));
        detail::Mask frontier = seen;
        while (frontier) {
            detail::Mask next = 0;
            for (detail::Mask f = frontier; f; f &= f - 1) {
                next |= nbr_[detail::lowest(f)];
            }
            next &= m & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    std::vector<detail::Mask> nbr_;
    std::unordered_map<detail::Mask, CountEntry> memo_;
};

void check_mis_cap(const Graph& g, const Limits& limits) {
    int cap = std::min(limits.mis_enumeration_vertices, detail::kMaskBits);
    if (g.order() > cap) {
        throw ResourceError("mis_enumeration_vertices", static_cast<std::uint64_t>(cap),
                            static_cast<std::uint64_t>(g.order()));
    }
}

} // namespace

int alpha(const Graph& g) {
    if (g.empty()) {
        return 0;
    }
    MaxIndependentSetSearch search(g);
    return static_cast<int>(search.solve(search.all()).size());
}

int alpha(const Graph& g, const VertexSet& subset) {
    validate_vertex_set(subset, g.order());
    if (subset.empty()) {
        return 0;
    }
    MaxIndependentSetSearch search(g);
    Bits cand(g.order());
    for (Vertex v : subset) {
        cand.set(v);
    }
    return static_cast<int>(search.solve(std::move(cand)).size());
}

VertexSet maximum_independent_set(const Graph& g) {
    if (g.empty()) {
        return {};
    }
    MaxIndependentSetSearch search(g);
    return search.solve(search.all());
}

MisStats mis_stats(const Graph& g, const Limits& limits) {
    check_mis_cap(g, limits);
    MisCounter counter(g);
    const detail::Mask all = detail::full_mask(g.order());
    CountEntry root = counter.count(all);
    MisStats stats;
    stats.alpha = root.alpha;
    stats.total_mis_count = root.count;
    stats.per_vertex_mis_count.assign(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        CountEntry rest = counter.count(all & ~counter.neighbors(v) & ~detail::bit(v));
        if (rest.alpha + 1 == root.alpha) {
            stats.per_vertex_mis_count[v] = rest.count;
        }
    }
    return stats;
}

void for_each_max_independent_set(const Graph& g,
                                  const std::function<bool(const VertexSet&)>& visit,
                                  const Limits& limits) {
    check_mis_cap(g, limits);
    MisCounter counter(g);
    const detail::Mask all = detail::full_mask(g.order());
    const int target = counter.alpha(all);
    VertexSet current;
    bool stopped = false;

    // Extends `current` with vertices of `cand` in ascending order; every branch
    // that survives the alpha check completes to a maximum independent set.
    std::function<void(detail::Mask)> extend = [&](detail::Mask cand) {
        int need = target - static_cast<int>(current.size());
        if (need == 0) {
            stopped = !visit(current);
            return;
        }
        for (detail::Mask rest = cand; rest && !stopped; rest &= rest - 1) {
            if (counter.alpha(rest) < need) {
                return;
            }
            Vertex v = detail::lowest(rest);
            detail::Mask after = rest & ~detail::bit(v) & ~counter.neighbors(v);
            if (counter.alpha(after) >= need - 1) {
                current.push_back(v);
                extend(after);
                current.pop_back();
            }
        }
    };
    extend(all);
}

std::vector<VertexSet> enumerate_max_independent_sets(const Graph& g, const Limits& limits) {
    std::vector<VertexSet> out;
    for_each_max_independent_set(
        g,
        [&](const VertexSet& s) {
            out.push_back(s);
            return true;
        },
        limits);
    return out;
}

VertexSet mis_covered_vertices(const Graph& g) {
    VertexSet covered;
    if (g.empty()) {
        return covered;
    }
    MaxIndependentSetSearch search(g);
    const auto a = search.solve(search.all()).size();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (search.solve(search.closed_neighborhood_removed(v)).size() + 1 == a) {
            covered.push_back(v);
        }
    }
    return covered;
}

std::optional<Vertex> first_uncovered_vertex(const Graph& g) {
    if (g.empty()) {
        return std::nullopt;
    }
    MaxIndependentSetSearch search(g);
    const auto a = search.solve(search.all()).size();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (search.solve(search.closed_neighborhood_removed(v)).size() + 1 != a) {
            return v;
        }
    }
    return std::nullopt;
}

bool is_1ext_oracle(const Graph& g) {
    return !first_uncovered_vertex(g).has_value();
}

WeightedSummary weighted_summary(const WeightedGraph& h, const Limits& limits) {
    const int m = h.base.order();
    if (static_cast<int>(h.weights.size()) != m) {
        throw InputError("weighted graph has " + std::to_string(h.weights.size()) +
                         " weights for " + std::to_string(m) + " vertices");
    }
    for (int w : h.weights) {
        if (w < 1) {
            throw InputError("weights must be positive, got " + std::to_string(w));
        }
    }
    int cap = std::min(limits.weighted_vertices, detail::kMaskBits - 1);
    if (m > cap) {
        throw ResourceError("weighted_vertices", static_cast<std::uint64_t>(cap),
                            static_cast<std::uint64_t>(m));
    }
    if (m == 0) {
        return {0, true};
    }
    const auto nbr = detail::neighbor_masks(h.base);
    long long best = -1;
    detail::Mask covered = 0;

    // Every independent set is visited once: vertex i is either skipped or, if
    // not blocked by an earlier choice, taken.
    std::function<void(int, detail::Mask, detail::Mask, long long)> scan =
        [&](int i, detail::Mask chosen, detail::Mask blocked, long long weight) {
            if (i == m) {
                if (weight > best) {
                    best = weight;
                    covered = chosen;
                } else if (weight == best) {
                    covered |= chosen;
                }
                return;
            }
            scan(i + 1, chosen, blocked, weight);
            if (!(blocked & detail::bit(i))) {
                scan(i + 1, chosen | detail::bit(i), blocked | nbr[i], weight + h.weights[i]);
            }
        };
    scan(0, 0, 0, 0);
    return {static_cast<int>(best), covered == detail::full_mask(m)};
}

int weighted_alpha(const WeightedGraph& h, const Limits& limits) {
    return weighted_summary(h, limits).alpha;
}

bool weighted_is_1ext(const WeightedGraph& h, const Limits& limits) {
    return weighted_summary(h, limits).is_1ext;
}

} // namespace onext
