#include "onext/extend.hpp"

#include <algorithm>

#include "onext/errors.hpp"
#include "onext/isets.hpp"

namespace onext {

namespace {

ExtReport run(const MDTree& t, bool allow_prime, const Limits& limits) {
    // Children precede parents in node order, so one forward sweep suffices.
    std::vector<ExtReport> at(t.nodes().size());
    for (std::size_t id = 0; id < t.nodes().size(); ++id) {
        const MDNode& node = t.node(static_cast<int>(id));
        ExtReport& r = at[id];
        switch (node.kind) {
        case NodeKind::Leaf:
            r = {true, 1, std::nullopt};
            break;
        case NodeKind::Union:
            r.is_1ext = true;
            for (int c : node.children) {
                r.is_1ext = r.is_1ext && at[c].is_1ext;
                r.alpha += at[c].alpha;
            }
            break;
        case NodeKind::Join: {
            r.is_1ext = true;
            const int first = at[node.children.front()].alpha;
            for (int c : node.children) {
                r.is_1ext = r.is_1ext && at[c].is_1ext && at[c].alpha == first;
                r.alpha = std::max(r.alpha, at[c].alpha);
            }
            break;
        }
        case NodeKind::Prime: {
            if (!allow_prime) {
                throw InputError("graph is not a cograph (prime node of order " +
                                 std::to_string(node.representative.order()) +
                                 "); use the modular-width test");
            }
            WeightedGraph h{node.representative, {}};
            bool children_ok = true;
            for (int c : node.children) {
                h.weights.push_back(at[c].alpha);
                children_ok = children_ok && at[c].is_1ext;
            }
            WeightedSummary summary = weighted_summary(h, limits);
            r.alpha = summary.alpha;
            r.is_1ext = children_ok && summary.is_1ext;
            break;
        }
        }
    }
    return at[t.root()];
}

} // namespace

ExtReport is_1ext_cograph(const MDTree& t) {
    return run(t, false, default_limits());
}

ExtReport is_1ext_mw(const Graph& g, const MDTree& t, const Limits& limits) {
    if (t.vertex_count() != g.order()) {
        throw InputError("decomposition does not match the graph");
    }
    return run(t, true, limits);
}

ExtReport is_1ext_by_oracle(const Graph& g) {
    ExtReport r;
    r.alpha = alpha(g);
    r.witness_failure = first_uncovered_vertex(g);
    r.is_1ext = !r.witness_failure.has_value();
    return r;
}

} // namespace onext
