#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bicover/covering.hpp"

namespace bicover {

struct SearchBudget {
    int max_capacity = 64;
    int max_blocks = 64;
    std::uint64_t node_limit = 50'000'000;
};

enum class ExactStatus { optimal, bracket };

struct ExactCapResult {
    ExactStatus status = ExactStatus::bracket;
    // Every capacity below `lower` was refuted by a completed search.
    int lower = 0;
    // Capacity of `witness`; equals `lower` when optimal.
    std::optional<int> upper;
    std::optional<Covering> witness;
    std::uint64_t nodes = 0;

    bool optimal() const noexcept { return status == ExactStatus::optimal; }
};

// Exact minimum capacity of a covering of K_n^lambda by complete bipartite
// blocks, by iterative deepening on capacity from 0. Blocks are drawn in
// non-decreasing canonical order (size, left class, right class); partial
// block lists that are not lexicographically minimal under vertex
// permutations are cut, as are blocks separating no deficient pair and
// states failing the per-vertex or edge-count capacity bounds. The witness is
// the lexicographically smallest optimal block list. When the budget runs
// out the result is a bracket whose upper end comes from the code-based
// construction. Supports 2 <= n <= 7.
ExactCapResult exact_cap(int n, int lam, const SearchBudget& budget = {});

// Smallest k <= k_max such that some n binary words of length k have pairwise
// distance >= lam; nullopt when none exists up to k_max. Words are fixed up
// to translation and coordinate permutation (0 and 0..01..1 of the minimum
// weight), the rest are chosen in increasing order. Throws BudgetExhausted
// past node_limit.
std::optional<int> exact_k(int n, int lam, int k_max, std::uint64_t node_limit = 200'000'000);

nlohmann::json exact_result_to_json(const ExactCapResult& result);

} // namespace bicover
