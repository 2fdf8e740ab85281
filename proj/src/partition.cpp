#include "onext/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "onext/errors.hpp"
#include "onext/extend.hpp"
#include "onext/isets.hpp"

namespace onext {

// Accumulates rows into a FeasibleTupleSet, dropping repeated tuples on
// insertion (the first witness wins) and sorting rows on finish().
class TupleSetBuilder {
public:
    TupleSetBuilder(int k, int witness_width, const Limits& limits)
        : out_(k, witness_width), budget_(limits.tuple_set_budget),
          seen_(64, RowHash{&out_}, RowEq{&out_}) {}

    void add(std::span<const int> t, std::span<const std::uint32_t> w) {
        const auto row = static_cast<std::uint32_t>(out_.size());
        out_.values_.insert(out_.values_.end(), t.begin(), t.end());
        if (!seen_.insert(row).second) {
            out_.values_.resize(out_.values_.size() - t.size());
            return;
        }
        out_.witness_.insert(out_.witness_.end(), w.begin(), w.end());
        if (out_.size() > budget_) {
            throw ResourceError("tuple_set_budget", budget_, out_.size());
        }
    }

    FeasibleTupleSet finish() {
        seen_.clear();
        const std::size_t rows = out_.size();
        const int k = out_.k_;
        const int ww = out_.witness_width_;
        std::vector<std::size_t> order(rows);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            auto ta = out_.tuple(a);
            auto tb = out_.tuple(b);
            return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
        });
        FeasibleTupleSet sorted(k, ww);
        sorted.values_.reserve(out_.values_.size());
        sorted.witness_.reserve(out_.witness_.size());
        for (std::size_t r : order) {
            auto t = out_.tuple(r);
            auto w = out_.witness(r);
            sorted.values_.insert(sorted.values_.end(), t.begin(), t.end());
            sorted.witness_.insert(sorted.witness_.end(), w.begin(), w.end());
        }
        return sorted;
    }

private:
    struct RowHash {
        const FeasibleTupleSet* set;
        std::size_t operator()(std::uint32_t row) const {
            auto t = set->tuple(row);
            return boost::hash_range(t.begin(), t.end());
        }
    };
    struct RowEq {
        const FeasibleTupleSet* set;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            auto ta = set->tuple(a);
            auto tb = set->tuple(b);
            return std::equal(ta.begin(), ta.end(), tb.begin());
        }
    };

    FeasibleTupleSet out_;
    std::uint64_t budget_;
    std::unordered_set<std::uint32_t, RowHash, RowEq> seen_;
};

FeasibleTupleSet FeasibleTupleSet::single_vertex(int k) {
    TupleSetBuilder b(k, 1, default_limits());
    std::vector<int> t(k, 0);
    for (int c = 0; c < k; ++c) {
        t[c] = 1;
        const std::uint32_t w = static_cast<std::uint32_t>(c);
        b.add(t, {&w, 1});
        t[c] = 0;
    }
    return b.finish();
}

FeasibleTupleSet FeasibleTupleSet::from_tuples(int k, const std::vector<std::vector<int>>& tuples) {
    TupleSetBuilder b(k, 0, default_limits());
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != k) {
            throw InputError("tuple of length " + std::to_string(t.size()) + " in a set with k = " +
                             std::to_string(k));
        }
        b.add(t, {});
    }
    return b.finish();
}

std::vector<std::vector<int>> FeasibleTupleSet::tuples() const {
    std::vector<std::vector<int>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto t = tuple(i);
        out.emplace_back(t.begin(), t.end());
    }
    return out;
}

bool FeasibleTupleSet::contains(std::span<const int> t) const {
    if (static_cast<int>(t.size()) != k_) {
        return false;
    }
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto m = tuple(mid);
        if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo < size() && std::equal(t.begin(), t.end(), tuple(lo).begin());
}

namespace {

void check_same_k(const FeasibleTupleSet& s1, const FeasibleTupleSet& s2) {
    if (s1.k() != s2.k()) {
        throw InputError("tuple sets have different k (" + std::to_string(s1.k()) + " vs " +
                         std::to_string(s2.k()) + ")");
    }
}

} // namespace

FeasibleTupleSet tuple_sum(const FeasibleTupleSet& s1, const FeasibleTupleSet& s2,
                           const Limits& limits) {
    check_same_k(s1, s2);
    const int k = s1.k();
    TupleSetBuilder b(k, 2, limits);
    std::vector<int> t(k);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        auto a = s1.tuple(i);
        for (std::size_t j = 0; j < s2.size(); ++j) {
            auto c = s2.tuple(j);
            for (int x = 0; x < k; ++x) {
                t[x] = a[x] + c[x];
            }
            const std::uint32_t w[2] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
            b.add(t, w);
        }
    }
    return b.finish();
}

FeasibleTupleSet tuple_join(const FeasibleTupleSet& s1, const FeasibleTupleSet& s2,
                            const Limits& limits) {
    check_same_k(s1, s2);
    const int k = s1.k();
    TupleSetBuilder b(k, 2, limits);
    std::vector<int> t(k);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        auto a = s1.tuple(i);
        for (std::size_t j = 0; j < s2.size(); ++j) {
            auto c = s2.tuple(j);
            bool compatible = true;
            for (int x = 0; x < k && compatible; ++x) {
                if (a[x] == c[x] || c[x] == 0) {
                    t[x] = a[x];
                } else if (a[x] == 0) {
                    t[x] = c[x];
                } else {
                    compatible = false;
                }
            }
            if (compatible) {
                const std::uint32_t w[2] = {static_cast<std::uint32_t>(i),
                                            static_cast<std::uint32_t>(j)};
                b.add(t, w);
            }
        }
    }
    return b.finish();
}

namespace {

// Bottom-up feasible-tuple tables over a modular decomposition, kept whole so
// a partition can be read back from any root tuple.
class TupleDP {
public:
    TupleDP(const MDTree& t, int k, bool allow_prime, const Limits& limits)
        : tree_(t), k_(k), limits_(limits), tables_(t.nodes().size()) {
        if (k < 1) {
            throw InputError("k must be at least 1, got " + std::to_string(k));
        }
        for (std::size_t id = 0; id < t.nodes().size(); ++id) {
            const MDNode& node = t.node(static_cast<int>(id));
            switch (node.kind) {
            case NodeKind::Leaf:
                tables_[id].chain.push_back(FeasibleTupleSet::single_vertex(k));
                break;
            case NodeKind::Union:
            case NodeKind::Join:
                fold(node, tables_[id]);
                break;
            case NodeKind::Prime:
                if (!allow_prime) {
                    throw InputError("graph is not a cograph (prime node of order " +
                                     std::to_string(node.representative.order()) + ")");
                }
                tables_[id].chain.push_back(combine_prime(node));
                break;
            }
        }
    }

    const FeasibleTupleSet& root() const { return result(tree_.root()); }

    Partition reconstruct(std::size_t root_row) const {
        Partition p{k_, std::vector<int>(tree_.vertex_count(), 0)};
        std::vector<std::pair<int, std::size_t>> stack{{tree_.root(), root_row}};
        while (!stack.empty()) {
            auto [id, row] = stack.back();
            stack.pop_back();
            const MDNode& node = tree_.node(id);
            const auto& chain = tables_[id].chain;
            switch (node.kind) {
            case NodeKind::Leaf:
                p.color[node.vertex] = static_cast<int>(chain[0].witness(row)[0]) + 1;
                break;
            case NodeKind::Union:
            case NodeKind::Join: {
                // chain[j] combines chain[j-1] (or child 0) with child j+1.
                for (std::size_t j = chain.size(); j-- > 0;) {
                    auto w = chain[j].witness(row);
                    stack.emplace_back(node.children[j + 1], w[1]);
                    row = w[0];
                }
                stack.emplace_back(node.children[0], row);
                break;
            }
            case NodeKind::Prime: {
                auto w = chain[0].witness(row);
                for (std::size_t j = 0; j < node.children.size(); ++j) {
                    stack.emplace_back(node.children[j], w[j]);
                }
                break;
            }
            }
        }
        return p;
    }

private:
    struct NodeTable {
        std::vector<FeasibleTupleSet> chain;
    };

    const FeasibleTupleSet& result(int id) const { return tables_[id].chain.back(); }

    void fold(const MDNode& node, NodeTable& table) {
        const bool is_union = node.kind == NodeKind::Union;
        const FeasibleTupleSet* acc = &result(node.children[0]);
        for (std::size_t j = 1; j < node.children.size(); ++j) {
            const FeasibleTupleSet& next = result(node.children[j]);
            table.chain.push_back(is_union ? tuple_sum(*acc, next, limits_)
                                           : tuple_join(*acc, next, limits_));
            acc = &table.chain.back();
        }
    }

    struct ColorCheck {
        bool is_1ext;
        int alpha;
    };

    // Scans every independent set of H[active]; tracks the best weight and the
    // union of the sets reaching it.
    void scan(std::uint32_t rest, std::uint32_t chosen, long long weight, long long& best,
              std::uint32_t& covered) const {
        if (rest == 0) {
            if (weight > best) {
                best = weight;
                covered = chosen;
            } else if (weight == best) {
                covered |= chosen;
            }
            return;
        }
        const int v = std::countr_zero(rest);
        const std::uint32_t without = rest & (rest - 1);
        scan(without & ~prime_nbr_[v], chosen | (std::uint32_t{1} << v), weight + prime_weights_[v], best,
             covered);
        if ((prime_nbr_[v] & without) != 0) {
            scan(without, chosen, weight, best, covered);
        }
    }

    // Color class restricted to the children it meets (non-zero weight).
    ColorCheck check_color(const std::vector<int>& weights) {
        auto it = color_memo_.find(weights);
        if (it != color_memo_.end()) {
            return it->second;
        }
        std::uint32_t active = 0;
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (weights[j] > 0) {
                active |= std::uint32_t{1} << j;
            }
        }
        ColorCheck result{true, 0};
        if (active != 0) {
            prime_weights_ = weights;
            long long best = -1;
            std::uint32_t covered = 0;
            scan(active, 0, 0, best, covered);
            result = {covered == active, static_cast<int>(best)};
        }
        color_memo_.emplace(weights, result);
        return result;
    }

    FeasibleTupleSet combine_prime(const MDNode& node) {
        const std::size_t m = node.children.size();
        std::vector<const FeasibleTupleSet*> sets;
        std::uint64_t product = 1;
        for (int c : node.children) {
            sets.push_back(&result(c));
            const std::uint64_t sz = sets.back()->size();
            if (sz == 0) {
                return FeasibleTupleSet(k_, static_cast<int>(m));
            }
            if (product > limits_.tuple_product_budget / sz) {
                throw ResourceError("tuple_product_budget", limits_.tuple_product_budget,
                                    product > UINT64_MAX / sz ? UINT64_MAX : product * sz);
            }
            product *= sz;
        }
        const int cap = std::min(limits_.weighted_vertices, 31);
        if (static_cast<int>(m) > cap) {
            throw ResourceError("weighted_vertices", static_cast<std::uint64_t>(cap), m);
        }
        prime_nbr_.assign(m, 0);
        for (const Edge& e : node.representative.edges()) {
            prime_nbr_[e.u] |= std::uint32_t{1} << e.v;
            prime_nbr_[e.v] |= std::uint32_t{1} << e.u;
        }
        color_memo_.clear();
        TupleSetBuilder b(k_, static_cast<int>(m), limits_);
        std::vector<std::uint32_t> idx(m, 0);
        std::vector<int> weights(m);
        std::vector<int> t(k_);
        for (;;) {
            bool ok = true;
            for (int c = 0; c < k_ && ok; ++c) {
                for (std::size_t j = 0; j < m; ++j) {
                    weights[j] = sets[j]->tuple(idx[j])[c];
                }
                ColorCheck check = check_color(weights);
                ok = check.is_1ext;
                t[c] = check.alpha;
            }
            if (ok) {
                b.add(t, idx);
            }
            std::size_t j = 0;
            while (j < m && ++idx[j] == sets[j]->size()) {
                idx[j] = 0;
                ++j;
            }
            if (j == m) {
                break;
            }
        }
        return b.finish();
    }

    const MDTree& tree_;
    int k_;
    const Limits& limits_;
    std::vector<NodeTable> tables_;
    std::unordered_map<std::vector<int>, ColorCheck, boost::hash<std::vector<int>>> color_memo_;
    std::vector<std::uint32_t> prime_nbr_;
    std::vector<int> prime_weights_;
};

} // namespace

FeasibleTupleSet feasible_tuples_cograph(const MDTree& t, int k, const Limits& limits) {
    return TupleDP(t, k, false, limits).root();
}

FeasibleTupleSet feasible_tuples_mw(const Graph& g, const MDTree& t, int k, const Limits& limits) {
    if (t.vertex_count() != g.order()) {
        throw InputError("decomposition does not match the graph");
    }
    return TupleDP(t, k, true, limits).root();
}

std::vector<VertexSet> color_classes(const Partition& p) {
    std::vector<VertexSet> classes(std::max(p.k, 0));
    for (std::size_t v = 0; v < p.color.size(); ++v) {
        int c = p.color[v];
        if (c >= 1 && c <= p.k) {
            classes[c - 1].push_back(static_cast<Vertex>(v));
        }
    }
    return classes;
}

int used_colors(const Partition& p) {
    auto classes = color_classes(p);
    return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                          [](const VertexSet& c) { return !c.empty(); }));
}

Partition compact(const Partition& p) {
    std::map<int, int> relabel;
    Partition out{0, std::vector<int>(p.color.size(), 0)};
    for (std::size_t v = 0; v < p.color.size(); ++v) {
        auto [it, fresh] = relabel.emplace(p.color[v], static_cast<int>(relabel.size()) + 1);
        out.color[v] = it->second;
    }
    out.k = static_cast<int>(relabel.size());
    return out;
}

bool verify_partition(const Graph& g, const Partition& p) {
    if (static_cast<int>(p.color.size()) != g.order()) {
        throw InputError("partition colors " + std::to_string(p.color.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    }
    for (std::size_t v = 0; v < p.color.size(); ++v) {
        if (p.color[v] < 1 || p.color[v] > p.k) {
            throw InputError("vertex " + std::to_string(v) + " has color " +
                             std::to_string(p.color[v]) + " outside 1.." + std::to_string(p.k));
        }
    }
    for (const VertexSet& cls : color_classes(p)) {
        if (!cls.empty() && !is_1ext_oracle(induced_subgraph(g, cls).graph)) {
            return false;
        }
    }
    return true;
}

std::optional<Partition> find_1ext_partition(const Graph& g, int k, const Limits& limits) {
    if (k < 1) {
        throw InputError("k must be at least 1, got " + std::to_string(k));
    }
    if (g.empty()) {
        return Partition{k, {}};
    }
    MDTree t = decompose(g);
    TupleDP dp(t, k, true, limits);
    if (dp.root().empty()) {
        return std::nullopt;
    }
    return dp.reconstruct(0);
}

ChiResult chi_1ext(const Graph& g, const Limits& limits) {
    if (g.empty()) {
        return {0, Partition{0, {}}};
    }
    MDTree t = decompose(g);

    // The constructive partitions give an upper bound and its certificate; the
    // tuple DP only has to rule out the smaller k.
    Partition best = compact(peel_partition(g));
    Partition greedy = compact(greedy_sqrt_partition(g));
    if (greedy.k < best.k) {
        best = std::move(greedy);
    }
    if (is_cograph(t)) {
        Partition logp = compact(log_partition_cograph(t));
        if (logp.k < best.k) {
            best = std::move(logp);
        }
    }
    for (int k = 1; k < best.k; ++k) {
        TupleDP dp(t, k, true, limits);
        if (!dp.root().empty()) {
            return {k, dp.reconstruct(0)};
        }
    }
    return {best.k, std::move(best)};
}

Partition peel_partition(const Graph& g) {
    Partition p{0, std::vector<int>(g.order(), 0)};
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        InducedSubgraph sub = induced_subgraph(g, remaining);
        ++p.k;
        for (Vertex v : mis_covered_vertices(sub.graph)) {
            p.color[sub.original[v]] = p.k;
        }
        std::erase_if(remaining, [&](Vertex v) { return p.color[v] != 0; });
    }
    return p;
}

Partition greedy_sqrt_partition(const Graph& g) {
    const int n = g.order();
    Partition p{0, std::vector<int>(n, 0)};
    if (n == 0) {
        return p;
    }
    if (is_1ext_oracle(g)) {
        p.k = 1;
        std::fill(p.color.begin(), p.color.end(), 1);
        return p;
    }
    // Independent classes of size >= sqrt(n), largest first.
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        InducedSubgraph sub = induced_subgraph(g, remaining);
        VertexSet s = maximum_independent_set(sub.graph);
        const auto size = static_cast<long long>(s.size());
        if (size * size < n) {
            break;
        }
        ++p.k;
        for (Vertex v : s) {
            p.color[sub.original[v]] = p.k;
        }
        std::erase_if(remaining, [&](Vertex v) { return p.color[v] != 0; });
    }
    if (!remaining.empty()) {
        InducedSubgraph sub = induced_subgraph(g, remaining);
        Partition rest = peel_partition(sub.graph);
        for (std::size_t i = 0; i < sub.original.size(); ++i) {
            p.color[sub.original[i]] = p.k + rest.color[i];
        }
        p.k += rest.k;
    }
    return p;
}

std::pair<int, int> split_integers(int alpha1, int alpha2, int k) {
    if (alpha1 < 0 || alpha2 < 0) {
        throw InputError("independence numbers must be non-negative");
    }
    if (k < 0 || k > alpha1 + alpha2) {
        throw InputError("k = " + std::to_string(k) + " outside 0.." +
                         std::to_string(alpha1 + alpha2));
    }
    if (alpha1 == 0) {
        return {0, k};
    }
    if (alpha2 == 0) {
        return {k, 0};
    }
    const auto ceil_half = [](int a) { return (a + 2) / 2; }; // ceil((a+1)/2)
    const auto floor_half = [](int a) { return (a + 1) / 2; }; // floor((a+1)/2)
    const auto pick = [&](int lo1, int hi1, int lo2, int hi2) -> std::pair<int, int> {
        for (int k1 = lo1; k1 <= hi1; ++k1) {
            int k2 = k - k1;
            if (k2 >= lo2 && k2 <= hi2) {
                return {k1, k2};
            }
        }
        throw std::logic_error("split_integers: empty interval");
    };
    if (k >= ceil_half(alpha1) + ceil_half(alpha2)) {
        return pick(ceil_half(alpha1), alpha1, ceil_half(alpha2), alpha2);
    }
    if (k <= floor_half(alpha1) + floor_half(alpha2)) {
        return pick(0, floor_half(alpha1), 0, floor_half(alpha2));
    }
    // Both even and k = (alpha1 + alpha2)/2 + 1.
    return {alpha1 / 2 + 1, alpha2 / 2};
}

std::vector<int> cotree_alphas(const MDTree& t) {
    std::vector<int> a(t.nodes().size(), 0);
    for (std::size_t id = 0; id < t.nodes().size(); ++id) {
        const MDNode& node = t.node(static_cast<int>(id));
        switch (node.kind) {
        case NodeKind::Leaf:
            a[id] = 1;
            break;
        case NodeKind::Union:
            for (int c : node.children) {
                a[id] += a[c];
            }
            break;
        case NodeKind::Join:
            for (int c : node.children) {
                a[id] = std::max(a[id], a[c]);
            }
            break;
        case NodeKind::Prime:
            throw InputError("cotree expected, found a prime node");
        }
    }
    return a;
}

namespace {

// Picks V1 inside a cograph with G[V1] 1-extendable, alpha(G[V1]) = k and
// alpha(G - V1) <= max(k-1, alpha - k). A Union/Join node with children
// c_0..c_m is handled as c_0 combined with the node formed by the rest.
class OneExtExtractor {
public:
    OneExtExtractor(const MDTree& t, std::vector<int> alphas) : t_(t), alpha_(std::move(alphas)) {}

    VertexSet extract(int k) {
        picked_.clear();
        node(t_.root(), k);
        std::sort(picked_.begin(), picked_.end());
        return picked_;
    }

private:
    void node(int id, int k) {
        const MDNode& n = t_.node(id);
        switch (n.kind) {
        case NodeKind::Leaf:
            if (k == 1) {
                picked_.push_back(n.vertex);
            }
            break;
        case NodeKind::Union:
            disjoint(n.children, k);
            break;
        case NodeKind::Join:
            joined(n.children, k);
            break;
        case NodeKind::Prime:
            throw InputError("cotree expected, found a prime node");
        }
    }

    void disjoint(std::span<const int> kids, int k) {
        if (kids.size() == 1) {
            node(kids[0], k);
            return;
        }
        int rest = 0;
        for (int c : kids.subspan(1)) {
            rest += alpha_[c];
        }
        auto [k1, k2] = split_integers(alpha_[kids[0]], rest, k);
        node(kids[0], k1);
        disjoint(kids.subspan(1), k2);
    }

    void joined(std::vector<int> kids, int k) {
        if (kids.size() == 1) {
            node(kids[0], k);
            return;
        }
        // G1 is the child of largest alpha, first in canonical order on ties.
        auto top = std::max_element(kids.begin(), kids.end(),
                                    [&](int a, int b) { return alpha_[a] < alpha_[b]; });
        int first = *top;
        kids.erase(top);
        int alpha2 = 0;
        for (int c : kids) {
            alpha2 = std::max(alpha2, alpha_[c]);
        }
        node(first, k);
        if (k <= alpha2) {
            joined(std::move(kids), k);
        }
    }

    const MDTree& t_;
    std::vector<int> alpha_;
    VertexSet picked_;
};

} // namespace

Partition log_partition_cograph(const MDTree& t) {
    if (!is_cograph(t)) {
        throw InputError("log_partition_cograph needs a cograph");
    }
    const Graph g = reconstruct(t);
    Partition p{0, std::vector<int>(g.order(), 0)};
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        InducedSubgraph sub = induced_subgraph(g, remaining);
        MDTree sub_tree = decompose(sub.graph);
        std::vector<int> alphas = cotree_alphas(sub_tree);
        const int a = alphas[sub_tree.root()];
        ++p.k;
        if (a <= 1) {
            for (Vertex v : remaining) {
                p.color[v] = p.k;
            }
            break;
        }
        OneExtExtractor extractor(sub_tree, std::move(alphas));
        for (Vertex v : extractor.extract((a + 1) / 2)) {
            p.color[sub.original[v]] = p.k;
        }
        std::erase_if(remaining, [&](Vertex v) { return p.color[v] != 0; });
    }
    return p;
}

} // namespace onext
