#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onext/limits.hpp"
#include "onext/partition.hpp"

namespace onext::genset {

// Targets n_1..n_m (unary scale) and the number k of generators.
struct Instance {
    std::vector<int> targets;
    int k = 1;

    int alpha_max() const;
};

// Generators in nondecreasing order (zeros mean an unused generator) and, per
// target, the indices of the generators summing to it.
struct Solution {
    std::vector<int> generators;
    std::vector<std::vector<int>> subsets;
};

// Throws InputError unless all targets and k are positive.
void validate(const Instance& inst);

// First feasible nondecreasing generator tuple in lexicographic order, or
// nullopt. Throws ResourceError when the scan would exceed
// limits.genset_tuple_budget.
std::optional<Solution> solve(const Instance& inst, const Limits& limits = default_limits());

// Powers of two 1, 2, ..., 2^ceil(log2 alpha).
std::vector<int> binary_generators(int alpha);

// Binary generators with every target written in base two.
Solution binary_solution(std::span<const int> targets);

// Smallest k for which binary_solution applies: ceil(log2 alpha) + 1.
int binary_generator_count(int alpha);

// Indices into `generators` summing to target, preferring the lexicographically
// smallest index set; nullopt if none.
std::optional<std::vector<int>> subset_sum(std::span<const int> generators, int target);

bool is_valid(const Instance& inst, const Solution& sol);

Instance to_instance(std::span<const int> sizes, int k);

// Partition of complete_multipartite(sizes): generator j (zeros dropped) becomes
// one color taking generators[j] vertices from every part whose subset uses j.
Partition from_solution(std::span<const int> sizes, const Solution& sol);

// Text form: a line "targets: 2 3 4 7 9" and a line "k: 3".
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);

} // namespace onext::genset
