#include "onext/moddecomp.hpp"

#include <algorithm>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "onext/errors.hpp"

namespace onext {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class Decomposer {
public:
    explicit Decomposer(const Graph& g) : n_(g.order()), adj_(g.order(), Bits(g.order())) {
        for (const Edge& e : g.edges()) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
        }
    }

    MDTree run() {
        Bits all(n_);
        all.set();
        int root = build(all);
        return MDTree(std::move(nodes_), root);
    }

private:
    static VertexSet members(const Bits& s) {
        VertexSet out;
        for (auto v = s.find_first(); v != Bits::npos; v = s.find_next(v)) {
            out.push_back(static_cast<Vertex>(v));
        }
        return out;
    }

    // Connected components of G[s] (or of its complement), ordered by minimum vertex.
    std::vector<Bits> components(const Bits& s, bool in_complement) const {
        std::vector<Bits> out;
        Bits left = s;
        while (left.any()) {
            Bits comp(n_);
            auto start = left.find_first();
            comp.set(start);
            Bits frontier = comp;
            left.reset(start);
            while (frontier.any()) {
                Bits next(n_);
                for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
                    next |= in_complement ? (left - adj_[v]) : (left & adj_[v]);
                }
                next &= left;
                left -= next;
                comp |= next;
                frontier = std::move(next);
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Smallest module of G[s] containing `seed`.
    Bits module_closure(const Bits& s, Bits seed) const {
        bool grew = true;
        while (grew) {
            grew = false;
            Bits outside = s - seed;
            for (auto w = outside.find_first(); w != Bits::npos; w = outside.find_next(w)) {
                auto seen = (adj_[w] & seed).count();
                if (seen != 0 && seen != seed.count()) {
                    seed.set(w);
                    grew = true;
                }
            }
        }
        return seed;
    }

    // Maximal proper modules of G[s] when both G[s] and its complement are connected.
    std::vector<Bits> maximal_modules(const Bits& s) const {
        std::vector<Bits> out;
        Bits unassigned = s;
        while (unassigned.any()) {
            auto v = unassigned.find_first();
            Bits cls(n_);
            cls.set(v);
            Bits probe = unassigned;
            probe.reset(v);
            for (auto u = probe.find_first(); u != Bits::npos; u = probe.find_next(u)) {
                if (cls.test(u)) {
                    continue;
                }
                Bits seed(n_);
                seed.set(v);
                seed.set(u);
                Bits closure = module_closure(s, seed);
                if (closure != s) {
                    cls |= closure;
                }
            }
            unassigned -= cls;
            out.push_back(std::move(cls));
        }
        std::sort(out.begin(), out.end(),
                  [](const Bits& a, const Bits& b) { return a.find_first() < b.find_first(); });
        return out;
    }

    int add(MDNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int build(const Bits& s) {
        MDNode node;
        node.module = members(s);
        if (node.module.size() == 1) {
            node.kind = NodeKind::Leaf;
            node.vertex = node.module.front();
            return add(std::move(node));
        }
        std::vector<Bits> parts = components(s, false);
        if (parts.size() > 1) {
            node.kind = NodeKind::Union;
        } else {
            parts = components(s, true);
            if (parts.size() > 1) {
                node.kind = NodeKind::Join;
            } else {
                node.kind = NodeKind::Prime;
                parts = maximal_modules(s);
            }
        }
        VertexSet reps;
        for (const Bits& part : parts) {
            node.children.push_back(build(part));
            reps.push_back(static_cast<Vertex>(part.find_first()));
        }
        if (node.kind == NodeKind::Prime) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                for (std::size_t j = i + 1; j < reps.size(); ++j) {
                    if (adj_[reps[i]].test(reps[j])) {
                        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
                    }
                }
            }
            node.representative = Graph(static_cast<int>(reps.size()), edges);
        }
        return add(std::move(node));
    }

    int n_;
    std::vector<Bits> adj_;
    std::vector<MDNode> nodes_;
};

void write_node(const MDTree& t, int id, std::ostringstream& out) {
    const MDNode& node = t.node(id);
    switch (node.kind) {
    case NodeKind::Leaf:
        out << "leaf " << node.vertex;
        return;
    case NodeKind::Union:
        out << "union(";
        break;
    case NodeKind::Join:
        out << "join(";
        break;
    case NodeKind::Prime: {
        out << "prime{";
        bool first = true;
        for (const Edge& e : node.representative.edges()) {
            out << (first ? "" : ",") << e.u << '-' << e.v;
            first = false;
        }
        out << "}(";
        break;
    }
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        write_node(t, node.children[i], out);
    }
    out << ')';
}

} // namespace

MDTree decompose(const Graph& g) {
    if (g.empty()) {
        throw InputError("cannot decompose the empty graph");
    }
    return Decomposer(g).run();
}

int modular_width(const MDTree& t) {
    if (t.node(t.root()).kind == NodeKind::Leaf) {
        return 1;
    }
    int width = 2;
    for (const MDNode& node : t.nodes()) {
        if (node.kind == NodeKind::Prime) {
            width = std::max(width, node.representative.order());
        }
    }
    return width;
}

bool is_cograph(const MDTree& t) {
    return std::none_of(t.nodes().begin(), t.nodes().end(),
                        [](const MDNode& n) { return n.kind == NodeKind::Prime; });
}

Graph representative_graph(const MDTree& t, int id) {
    const MDNode& node = t.node(id);
    const int m = static_cast<int>(node.children.size());
    switch (node.kind) {
    case NodeKind::Leaf:
        throw InputError("a leaf has no representative graph");
    case NodeKind::Union:
        return edgeless_graph(m);
    case NodeKind::Join:
        return complete_graph(m);
    case NodeKind::Prime:
        break;
    }
    return node.representative;
}

WeightedGraph weighted_representative(const Graph& g, const MDTree& t, int id) {
    WeightedGraph h{representative_graph(t, id), {}};
    for (int child : t.node(id).children) {
        h.weights.push_back(alpha(g, t.node(child).module));
    }
    return h;
}

bool verify_module(const Graph& g, const VertexSet& m) {
    validate_vertex_set(m, g.order());
    std::vector<char> inside(g.order(), 0);
    for (Vertex v : m) {
        inside[v] = 1;
    }
    for (Vertex w = 0; w < g.order(); ++w) {
        if (inside[w]) {
            continue;
        }
        std::size_t seen = 0;
        for (Vertex u : g.neighbors(w)) {
            seen += inside[u];
        }
        if (seen != 0 && seen != m.size()) {
            return false;
        }
    }
    return true;
}

Graph reconstruct(const MDTree& t) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t id = 0; id < t.nodes().size(); ++id) {
        const MDNode& node = t.node(static_cast<int>(id));
        if (node.kind == NodeKind::Leaf) {
            continue;
        }
        Graph h = representative_graph(t, static_cast<int>(id));
        for (const Edge& e : h.edges()) {
            for (Vertex a : t.node(node.children[e.u]).module) {
                for (Vertex b : t.node(node.children[e.v]).module) {
                    edges.emplace_back(a, b);
                }
            }
        }
    }
    return Graph(t.vertex_count(), edges);
}

std::string to_text(const MDTree& t) {
    std::ostringstream out;
    write_node(t, t.root(), out);
    return out.str();
}

} // namespace onext
