#include "onext/genset.hpp"

#include <algorithm>
#include <sstream>

#include "onext/errors.hpp"

namespace onext::genset {

int Instance::alpha_max() const {
    return targets.empty() ? 0 : *std::max_element(targets.begin(), targets.end());
}

void validate(const Instance& inst) {
    if (inst.k < 1) {
        throw InputError("k must be at least 1, got " + std::to_string(inst.k));
    }
    if (inst.targets.empty()) {
        throw InputError("at least one target is required");
    }
    for (int t : inst.targets) {
        if (t < 1) {
            throw InputError("targets must be positive, got " + std::to_string(t));
        }
    }
}

std::optional<std::vector<int>> subset_sum(std::span<const int> generators, int target) {
    if (target < 0) {
        return std::nullopt;
    }
    // reach[i][s]: some subset of generators[i..] sums to s. Walking forward and
    // taking generator i whenever the remainder stays reachable yields the
    // lexicographically smallest index set.
    const std::size_t k = generators.size();
    std::vector<std::vector<char>> reach(k + 1, std::vector<char>(target + 1, 0));
    reach[k][0] = 1;
    for (std::size_t i = k; i-- > 0;) {
        const int g = generators[i];
        for (int s = 0; s <= target; ++s) {
            reach[i][s] = reach[i + 1][s] || (g <= s && reach[i + 1][s - g]);
        }
    }
    if (!reach[0][target]) {
        return std::nullopt;
    }
    std::vector<int> picked;
    int remaining = target;
    for (std::size_t i = 0; i < k && remaining > 0; ++i) {
        const int g = generators[i];
        if (g > 0 && g <= remaining && reach[i + 1][remaining - g]) {
            picked.push_back(static_cast<int>(i));
            remaining -= g;
        }
    }
    return picked;
}

std::optional<Solution> solve(const Instance& inst, const Limits& limits) {
    validate(inst);
    const int alpha = inst.alpha_max();
    const int k = inst.k;

    // Multisets of size k over {0..alpha}: C(alpha + k, k).
    long double count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * (alpha + i) / i;
    }
    if (count > static_cast<long double>(limits.genset_tuple_budget)) {
        throw ResourceError("genset_tuple_budget", limits.genset_tuple_budget,
                            count > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(count));
    }

    std::vector<int> gens(k, 0);
    for (;;) {
        Solution sol{gens, {}};
        bool ok = true;
        for (int t : inst.targets) {
            auto subset = subset_sum(gens, t);
            if (!subset) {
                ok = false;
                break;
            }
            sol.subsets.push_back(std::move(*subset));
        }
        if (ok) {
            return sol;
        }
        // Next nondecreasing tuple in lexicographic order.
        int i = k - 1;
        while (i >= 0 && gens[i] == alpha) {
            --i;
        }
        if (i < 0) {
            return std::nullopt;
        }
        ++gens[i];
        std::fill(gens.begin() + i + 1, gens.end(), gens[i]);
    }
}

int binary_generator_count(int alpha) {
    int bits = 0;
    while ((1LL << bits) < alpha) {
        ++bits;
    }
    return bits + 1;
}

std::vector<int> binary_generators(int alpha) {
    if (alpha < 1) {
        throw InputError("alpha must be positive");
    }
    std::vector<int> gens;
    for (int i = 0; i < binary_generator_count(alpha); ++i) {
        gens.push_back(1 << i);
    }
    return gens;
}

Solution binary_solution(std::span<const int> targets) {
    int alpha = 1;
    for (int t : targets) {
        if (t < 1) {
            throw InputError("targets must be positive, got " + std::to_string(t));
        }
        alpha = std::max(alpha, t);
    }
    Solution sol{binary_generators(alpha), {}};
    for (int t : targets) {
        std::vector<int> subset;
        for (int bit = 0; (t >> bit) != 0; ++bit) {
            if ((t >> bit) & 1) {
                subset.push_back(bit);
            }
        }
        sol.subsets.push_back(std::move(subset));
    }
    return sol;
}

bool is_valid(const Instance& inst, const Solution& sol) {
    if (static_cast<int>(sol.generators.size()) > inst.k ||
        sol.subsets.size() != inst.targets.size()) {
        return false;
    }
    for (std::size_t i = 0; i < inst.targets.size(); ++i) {
        std::vector<int> idx = sol.subsets[i];
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
            return false;
        }
        long long sum = 0;
        for (int j : idx) {
            if (j < 0 || j >= static_cast<int>(sol.generators.size())) {
                return false;
            }
            sum += sol.generators[j];
        }
        if (sum != inst.targets[i]) {
            return false;
        }
    }
    return true;
}

Instance to_instance(std::span<const int> sizes, int k) {
    Instance inst{{sizes.begin(), sizes.end()}, k};
    validate(inst);
    return inst;
}

Partition from_solution(std::span<const int> sizes, const Solution& sol) {
    Instance inst{{sizes.begin(), sizes.end()}, static_cast<int>(sol.generators.size())};
    validate(inst);
    if (!is_valid(inst, sol)) {
        throw InputError("solution does not generate every part size");
    }
    // Zero generators are empty colors; the rest are numbered in order.
    std::vector<int> color_of(sol.generators.size(), 0);
    int colors = 0;
    for (std::size_t j = 0; j < sol.generators.size(); ++j) {
        if (sol.generators[j] > 0) {
            color_of[j] = ++colors;
        }
    }
    Partition p{colors, {}};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<int> idx = sol.subsets[i];
        std::sort(idx.begin(), idx.end());
        for (int j : idx) {
            for (int c = 0; c < sol.generators[j]; ++c) {
                p.color.push_back(color_of[j]);
            }
        }
    }
    return p;
}

Instance parse_instance(const std::string& text) {
    Instance inst{{}, 0};
    bool have_targets = false, have_k = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto colon = line.find(':');
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        if (colon == std::string::npos) {
            throw InputError("line " + std::to_string(line_no) + ": expected 'key: values'");
        }
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::istringstream values(line.substr(colon + 1));
        if (key == "targets") {
            int v;
            while (values >> v) {
                inst.targets.push_back(v);
            }
            have_targets = true;
        } else if (key == "k") {
            if (!(values >> inst.k)) {
                throw InputError("line " + std::to_string(line_no) + ": k needs an integer");
            }
            have_k = true;
        } else {
            throw InputError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        std::string trailing;
        if (!values.eof() && (values.clear(), values >> trailing)) {
            throw InputError("line " + std::to_string(line_no) + ": unexpected '" + trailing + "'");
        }
    }
    if (!have_targets || !have_k) {
        throw InputError("instance needs both 'targets:' and 'k:' lines");
    }
    validate(inst);
    return inst;
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << "targets:";
    for (int t : inst.targets) {
        out << ' ' << t;
    }
    out << "\nk: " << inst.k << '\n';
    return out.str();
}

} // namespace onext::genset
