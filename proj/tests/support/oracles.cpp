#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace onext::testing {

namespace {

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(g.order(), 0);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < g.order(); ++v) {
            if (u != v && g.adjacent(u, v)) {
                nbr[u] |= Mask{1} << v;
            }
        }
    }
    return nbr;
}

bool independent(const std::vector<Mask>& nbr, Mask s) {
    for (Mask r = s; r; r &= r - 1) {
        if (nbr[std::countr_zero(r)] & s) {
            return false;
        }
    }
    return true;
}

void require_small(const Graph& g, int cap) {
    if (g.order() > cap) {
        throw std::logic_error("brute-force oracle called on a graph that is too large");
    }
}

} // namespace

std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) {
        out.push_back(std::countr_zero(m));
    }
    return out;
}

SubsetTable::SubsetTable(const Graph& g) : nbr_(neighbor_masks(g)) {
    require_small(g, 20);
    const int n = g.order();
    full_ = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    const std::size_t count = std::size_t{1} << n;
    alpha_.assign(count, 0);
    ext_.assign(count, 0);
    for (Mask m = 1; m < count; ++m) {
        int v = std::countr_zero(m);
        Mask without = m & ~(Mask{1} << v);
        alpha_[m] = std::max(alpha_[without], 1 + alpha_[without & ~nbr_[v]]);
    }
    for (Mask m = 0; m < count; ++m) {
        bool ok = true;
        for (Mask r = m; r && ok; r &= r - 1) {
            int v = std::countr_zero(r);
            ok = alpha_[m & ~nbr_[v] & ~(Mask{1} << v)] == alpha_[m] - 1;
        }
        ext_[m] = ok;
    }
}

std::vector<std::vector<int>> brute_max_independent_sets(const Graph& g) {
    require_small(g, 22);
    auto nbr = neighbor_masks(g);
    std::vector<Mask> best;
    int best_size = -1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        Mask m = static_cast<Mask>(s);
        if (!independent(nbr, m)) {
            continue;
        }
        int size = std::popcount(m);
        if (size > best_size) {
            best_size = size;
            best.clear();
        }
        if (size == best_size) {
            best.push_back(m);
        }
    }
    std::vector<std::vector<int>> out;
    for (Mask m : best) {
        out.push_back(mask_to_vertices(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int brute_alpha(const Graph& g) {
    auto sets = brute_max_independent_sets(g);
    return sets.empty() ? 0 : static_cast<int>(sets.front().size());
}

bool brute_is_1ext(const Graph& g) {
    std::vector<char> covered(g.order(), 0);
    for (const auto& s : brute_max_independent_sets(g)) {
        for (int v : s) {
            covered[v] = 1;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::set<std::vector<int>> brute_feasible_tuples(const Graph& g, int k) {
    require_small(g, 12);
    SubsetTable table(g);
    const int n = g.order();
    std::set<std::vector<int>> out;
    std::vector<int> color(n, 0);
    std::vector<Mask> cls(k, 0);
    for (;;) {
        std::fill(cls.begin(), cls.end(), 0);
        for (int v = 0; v < n; ++v) {
            cls[color[v]] |= Mask{1} << v;
        }
        bool ok = true;
        std::vector<int> t(k);
        for (int c = 0; c < k && ok; ++c) {
            ok = table.is_1ext(cls[c]);
            t[c] = table.alpha(cls[c]);
        }
        if (ok) {
            out.insert(t);
        }
        int v = 0;
        while (v < n && ++color[v] == k) {
            color[v] = 0;
            ++v;
        }
        if (v == n) {
            break;
        }
    }
    return out;
}

int brute_chi_1ext(const Graph& g) {
    if (g.order() == 0) {
        return 0;
    }
    for (int k = 1;; ++k) {
        if (!brute_feasible_tuples(g, k).empty()) {
            return k;
        }
    }
}

int brute_chromatic_number(const Graph& g) {
    require_small(g, 12);
    const int n = g.order();
    if (n == 0) {
        return 0;
    }
    for (int k = 1;; ++k) {
        std::vector<int> color(n, 0);
        for (;;) {
            bool proper = true;
            for (const Edge& e : g.edges()) {
                if (color[e.u] == color[e.v]) {
                    proper = false;
                    break;
                }
            }
            if (proper) {
                return k;
            }
            int v = 0;
            while (v < n && ++color[v] == k) {
                color[v] = 0;
                ++v;
            }
            if (v == n) {
                break;
            }
        }
    }
}

std::vector<Mask> all_modules(const Graph& g) {
    require_small(g, 16);
    auto nbr = neighbor_masks(g);
    const int n = g.order();
    std::vector<Mask> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        Mask m = static_cast<Mask>(s);
        bool ok = true;
        for (int w = 0; w < n && ok; ++w) {
            if (m & (Mask{1} << w)) {
                continue;
            }
            Mask seen = nbr[w] & m;
            ok = seen == 0 || seen == m;
        }
        if (ok) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<Mask> strong_modules(const Graph& g) {
    auto modules = all_modules(g);
    std::vector<Mask> out;
    for (Mask a : modules) {
        bool strong = true;
        for (Mask b : modules) {
            Mask both = a & b;
            if (both != 0 && both != a && both != b) {
                strong = false;
                break;
            }
        }
        if (strong) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<Rational> brute_access_proportion(const Graph& g, const Rational& theta) {
    require_small(g, 16);
    auto nbr = neighbor_masks(g);
    const int n = g.order();
    Rational total = 0;
    std::vector<Rational> with(n, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        Mask m = static_cast<Mask>(s);
        if (!independent(nbr, m)) {
            continue;
        }
        Rational weight = 1;
        for (int i = 0; i < std::popcount(m); ++i) {
            weight *= theta;
        }
        total += weight;
        for (int v : mask_to_vertices(m)) {
            with[v] += weight;
        }
    }
    for (auto& w : with) {
        w /= total;
    }
    return with;
}

namespace {

int reference_alpha_rec(const std::vector<std::uint64_t>& nbr, std::uint64_t s) {
    if (s == 0) {
        return 0;
    }
    int v = std::countr_zero(s);
    std::uint64_t rest = s & ~(std::uint64_t{1} << v);
    int with = 1 + reference_alpha_rec(nbr, rest & ~nbr[v]);
    if ((nbr[v] & rest) == 0) {
        return with;
    }
    return std::max(with, reference_alpha_rec(nbr, rest));
}

std::vector<std::uint64_t> wide_neighbors(const Graph& g) {
    if (g.order() > 64) {
        throw std::invalid_argument("reference oracle limited to 64 vertices");
    }
    std::vector<std::uint64_t> nbr(g.order(), 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= std::uint64_t{1} << e.v;
        nbr[e.v] |= std::uint64_t{1} << e.u;
    }
    return nbr;
}

std::uint64_t wide_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : s) {
        m |= std::uint64_t{1} << v;
    }
    return m;
}

} // namespace

int reference_alpha(const Graph& g, const VertexSet& subset) {
    return reference_alpha_rec(wide_neighbors(g), wide_mask(subset));
}

bool reference_is_1ext(const Graph& g, const VertexSet& subset) {
    auto nbr = wide_neighbors(g);
    std::uint64_t s = wide_mask(subset);
    int a = reference_alpha_rec(nbr, s);
    for (int v : subset) {
        std::uint64_t rest = s & ~nbr[v] & ~(std::uint64_t{1} << v);
        if (1 + reference_alpha_rec(nbr, rest) != a) {
            return false;
        }
    }
    return true;
}

} // namespace onext::testing
