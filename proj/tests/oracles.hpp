#pragma once

// Brute-force reference implementations. They share only the plain data types
// with the library and are meant for tiny instances.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicover/covering.hpp"
#include "bicover/graph.hpp"

namespace oracle {

using bicover::Covering;
using bicover::Graph;

// Largest independent set through each vertex, over all 2^n subsets.
inline std::vector<int> alpha(const Graph& g) {
    const int n = g.order();
    std::vector<int> best(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool independent = true;
        for (int u = 0; u < n && independent; ++u)
            for (int v = u + 1; v < n && independent; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u + 1, v + 1)) independent = false;
        if (!independent) continue;
        int size = std::popcount(mask);
        for (int u = 0; u < n; ++u)
            if (mask >> u & 1) best[static_cast<std::size_t>(u)] = std::max(best[static_cast<std::size_t>(u)], size);
    }
    return best;
}

inline bool contains(const std::vector<int>& side, int v) { return std::find(side.begin(), side.end(), v) != side.end(); }

inline int multiplicity(const Covering& cov, int u, int v) {
    int count = 0;
    for (const auto& b : cov.blocks())
        if ((contains(b.left(), u) && contains(b.right(), v)) || (contains(b.left(), v) && contains(b.right(), u)))
            ++count;
    return count;
}

inline int min_multiplicity(const Covering& cov) {
    int best = 1 << 30;
    for (int u = 1; u <= cov.order(); ++u)
        for (int v = u + 1; v <= cov.order(); ++v) best = std::min(best, multiplicity(cov, u, v));
    return best;
}

inline bool covers(const Covering& cov, int lam) { return cov.order() < 2 || min_multiplicity(cov) >= lam; }

inline int hamming(const std::string& a, const std::string& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline int min_distance(const std::vector<std::string>& words) {
    int best = 1 << 30;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, hamming(words[i], words[j]));
    return best;
}

// Lexicode by direct scan of 0..2^k-1; returns the kept words as integers.
inline std::vector<std::uint32_t> lexicode(int k, int d, std::size_t target) {
    std::vector<std::uint32_t> kept;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << k) && kept.size() < target; ++w) {
        bool ok = true;
        for (auto c : kept)
            if (std::popcount(w ^ c) < d) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(w);
    }
    return kept;
}

inline std::string word_text(std::uint32_t w, int k) {
    std::string s(static_cast<std::size_t>(k), '0');
    for (int i = 0; i < k; ++i)
        if (w >> (k - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

// Largest set of words of length k at pairwise distance >= d containing 0.
inline int max_code_size(int k, int d, int stop_at) {
    std::vector<std::uint32_t> chosen{0};
    int best = 1;
    auto dfs = [&](auto&& self, std::uint32_t from) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        if (best >= stop_at) return;
        for (std::uint32_t w = from; w < (std::uint32_t{1} << k); ++w) {
            bool ok = true;
            for (auto c : chosen)
                if (std::popcount(w ^ c) < d) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(w);
            self(self, w + 1);
            chosen.pop_back();
            if (best >= stop_at) return;
        }
    };
    dfs(dfs, 1);
    return best;
}

inline std::optional<int> exact_k(int n, int lam, int k_max) {
    for (int k = 1; k <= k_max; ++k)
        if (max_code_size(k, lam, n) >= n) return k;
    return std::nullopt;
}

// Minimum capacity of a covering of K_n^lam, by enumerating multisets of
// blocks (left side holding the smallest vertex of the block) with total size
// at most cap_max. nullopt when none fits.
inline std::optional<int> min_capacity(int n, int lam, int cap_max) {
    struct Block {
        std::uint32_t left, right;
        int size;
    };
    std::vector<Block> blocks;
    for (std::uint32_t l = 1; l < (1u << n); ++l)
        for (std::uint32_t r = 1; r < (1u << n); ++r)
            if (!(l & r) && std::countr_zero(l) < std::countr_zero(r))
                blocks.push_back({l, r, std::popcount(l) + std::popcount(r)});

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> count(pairs.size(), 0);

    auto apply = [&](const Block& b, int delta) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [u, v] = pairs[p];
            bool sep = ((b.left >> u & 1) && (b.right >> v & 1)) || ((b.left >> v & 1) && (b.right >> u & 1));
            if (sep) count[p] += delta;
        }
    };
    auto done = [&] { return std::all_of(count.begin(), count.end(), [&](int c) { return c >= lam; }); };

    std::optional<int> best;
    auto dfs = [&](auto&& self, std::size_t from, int used) -> void {
        if (done()) {
            if (!best || used < *best) best = used;
            return;
        }
        for (std::size_t i = from; i < blocks.size(); ++i) {
            int next = used + blocks[i].size;
            if (next > cap_max || (best && next >= *best)) continue;
            apply(blocks[i], 1);
            self(self, i, next);
            apply(blocks[i], -1);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

// Numerator of P[Bin(x, 1/2) <= r] over 2^x.
inline std::uint64_t tail_numerator(int x, int r) {
    std::uint64_t s = 0;
    for (int q = 0; q <= std::min(r, x); ++q) s += choose(x, q);
    return s;
}

} // namespace oracle
