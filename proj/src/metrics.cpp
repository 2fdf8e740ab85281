#include "onext/metrics.hpp"

#include <unordered_map>

#include "masks.hpp"
#include "onext/errors.hpp"
#include "onext/isets.hpp"

namespace onext {

namespace {

using Polynomial = std::vector<std::uint64_t>; // coefficient i = independent sets of size i

// Independence polynomial of G[mask]: I(G) = I(G - v) + x * I(G - N[v]).
class IndependencePolynomial {
public:
    explicit IndependencePolynomial(const Graph& g) : nbr_(detail::neighbor_masks(g)) {}

    const Polynomial& of(detail::Mask m) {
        if (auto it = memo_.find(m); it != memo_.end()) {
            return it->second;
        }
        Polynomial result;
        if (m == 0) {
            result = {1};
        } else {
            Vertex v = detail::lowest(m);
            detail::Mask without = m & ~detail::bit(v);
            Polynomial out = of(without);
            const Polynomial& in = of(without & ~nbr_[v]);
            result = std::move(out);
            if (result.size() < in.size() + 1) {
                result.resize(in.size() + 1, 0);
            }
            for (std::size_t i = 0; i < in.size(); ++i) {
                result[i + 1] += in[i];
            }
        }
        return memo_.emplace(m, std::move(result)).first->second;
    }

    detail::Mask neighbors(Vertex v) const { return nbr_[v]; }

private:
    std::vector<detail::Mask> nbr_;
    std::unordered_map<detail::Mask, Polynomial> memo_;
};

Rational evaluate(const Polynomial& poly, const Rational& theta, int shift) {
    Rational sum = 0;
    Rational power = 1;
    for (int i = 0; i < shift; ++i) {
        power *= theta;
    }
    for (std::uint64_t c : poly) {
        sum += Rational(c) * power;
        power *= theta;
    }
    return sum;
}

} // namespace

AccessProfile access_proportion(const Graph& g, const Rational& theta, const Limits& limits) {
    if (theta <= 0) {
        throw InputError("theta must be positive, got " + to_string(theta));
    }
    int cap = std::min(limits.independent_set_family_vertices, detail::kMaskBits - 1);
    if (g.order() > cap) {
        throw ResourceError("independent_set_family_vertices", static_cast<std::uint64_t>(cap),
                            static_cast<std::uint64_t>(g.order()));
    }
    AccessProfile profile;
    profile.theta = theta;
    IndependencePolynomial poly(g);
    const detail::Mask all = detail::full_mask(g.order());
    const Rational total = evaluate(poly.of(all), theta, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        // Sets containing v are {v} plus an independent set of G - N[v].
        const Polynomial& rest = poly.of(all & ~poly.neighbors(v) & ~detail::bit(v));
        profile.p.push_back(evaluate(rest, theta, 1) / total);
    }

    MisStats stats = mis_stats(g, limits);
    for (Vertex v = 0; v < g.order(); ++v) {
        profile.limit_p.emplace_back(stats.per_vertex_mis_count[v], stats.total_mis_count);
        if (stats.per_vertex_mis_count[v] == 0) {
            profile.starved.push_back(v);
        }
    }
    return profile;
}

VertexSet starvation_set(const Graph& g) {
    VertexSet covered = mis_covered_vertices(g);
    VertexSet starved;
    std::size_t i = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (i < covered.size() && covered[i] == v) {
            ++i;
        } else {
            starved.push_back(v);
        }
    }
    return starved;
}

Rational parse_rational(const std::string& text) {
    auto bad = [&]() { return InputError("not a rational number: '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) {
            throw bad();
        }
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw bad();
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw bad();
            }
        }
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw bad();
        }
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac[0] == '-' || frac[0] == '+') {
            throw bad();
        }
        bool negative = !whole.empty() && whole[0] == '-';
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
        BigInt f = parse_int(frac);
        Rational r = Rational(w) + Rational(f, scale) * (negative ? -1 : 1);
        return r;
    }
    return Rational(parse_int(text));
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace onext
