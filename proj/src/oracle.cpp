#include "bicover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bicover/errors.hpp"

namespace bicover {

namespace {

struct CanonBlock {
    unsigned left = 0;   // vertex masks, 0-based
    unsigned right = 0;
    int size = 0;
    std::vector<int> pairs;  // indices of separated pairs
};

std::vector<int> members(unsigned mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

class CapacitySearch {
public:
    CapacitySearch(int n, int lam, const SearchBudget& budget) : n_(n), lam_(lam), budget_(budget) {
        build_pairs();
        build_blocks();
        build_permutations();
    }

    enum class Outcome { found, refuted, truncated };

    Outcome run(int capacity) {
        capacity_ = capacity;
        truncated_ = false;
        chosen_.clear();
        count_.assign(pair_count_, 0);
        deficit_total_ = pair_count_ * lam_;
        if (search(0, 0)) return Outcome::found;
        return truncated_ ? Outcome::truncated : Outcome::refuted;
    }

    Covering witness() const {
        Covering cov(n_);
        for (int id : chosen_) {
            std::vector<Vertex> left, right;
            for (int v : members(blocks_[static_cast<std::size_t>(id)].left)) left.push_back(v + 1);
            for (int v : members(blocks_[static_cast<std::size_t>(id)].right)) right.push_back(v + 1);
            cov.add(BipartiteBlock(std::move(left), std::move(right)));
        }
        return cov;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void build_pairs() {
        pair_index_.assign(static_cast<std::size_t>(n_ * n_), -1);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                pair_index_[static_cast<std::size_t>(a * n_ + b)] = pair_count_;
                pair_index_[static_cast<std::size_t>(b * n_ + a)] = pair_count_;
                pair_ends_.push_back({a, b});
                ++pair_count_;
            }
    }

    // Orientation: the smallest vertex of the block sits on the left.
    static std::pair<unsigned, unsigned> orient(unsigned left, unsigned right) {
        unsigned all = left | right;
        unsigned lowest = all & (~all + 1);
        return (left & lowest) ? std::pair{left, right} : std::pair{right, left};
    }

    unsigned encode(unsigned left, unsigned right) const {
        unsigned code = 0, power = 1;
        for (int v = 0; v < n_; ++v, power *= 3) code += power * (((left >> v) & 1u) ? 1u : ((right >> v) & 1u) ? 2u : 0u);
        return code;
    }

    void build_blocks() {
        const unsigned full = (1u << n_) - 1;
        for (unsigned left = 1; left <= full; ++left)
            for (unsigned right = 1; right <= full; ++right) {
                if (left & right) continue;
                if (orient(left, right).first != left) continue;
                CanonBlock b;
                b.left = left;
                b.right = right;
                b.size = std::popcount(left) + std::popcount(right);
                for (int a : members(left))
                    for (int c : members(right)) b.pairs.push_back(pair_index_[static_cast<std::size_t>(a * n_ + c)]);
                blocks_.push_back(std::move(b));
            }
        std::sort(blocks_.begin(), blocks_.end(), [](const CanonBlock& x, const CanonBlock& y) {
            if (x.size != y.size) return x.size < y.size;
            auto xl = members(x.left), yl = members(y.left);
            if (xl != yl) return xl < yl;
            return members(x.right) < members(y.right);
        });
        unsigned codes = 1;
        for (int v = 0; v < n_; ++v) codes *= 3;
        id_of_.assign(codes, -1);
        for (std::size_t id = 0; id < blocks_.size(); ++id)
            id_of_[encode(blocks_[id].left, blocks_[id].right)] = static_cast<int>(id);
    }

    void build_permutations() {
        std::vector<int> perm(static_cast<std::size_t>(n_));
        std::iota(perm.begin(), perm.end(), 0);
        auto apply = [&](unsigned mask) {
            unsigned out = 0;
            for (int v = 0; v < n_; ++v)
                if ((mask >> v) & 1u) out |= 1u << perm[static_cast<std::size_t>(v)];
            return out;
        };
        while (std::next_permutation(perm.begin(), perm.end())) {  // identity skipped
            std::vector<int> image(blocks_.size());
            for (std::size_t id = 0; id < blocks_.size(); ++id) {
                auto [l, r] = orient(apply(blocks_[id].left), apply(blocks_[id].right));
                image[id] = id_of_[encode(l, r)];
            }
            perm_images_.push_back(std::move(image));
        }
    }

    bool lex_leader() {
        scratch_.resize(chosen_.size());
        for (const auto& image : perm_images_) {
            for (std::size_t i = 0; i < chosen_.size(); ++i) scratch_[i] = image[static_cast<std::size_t>(chosen_[i])];
            std::sort(scratch_.begin(), scratch_.end());
            if (std::lexicographical_compare(scratch_.begin(), scratch_.end(), chosen_.begin(), chosen_.end()))
                return false;
        }
        return true;
    }

    bool bounds_allow(int remaining) const {
        // each vertex needs as many further blocks as its worst pair's deficit
        int per_vertex = 0;
        for (int v = 0; v < n_; ++v) {
            int need = 0;
            for (int u = 0; u < n_; ++u) {
                if (u == v) continue;
                need = std::max(need, lam_ - count_[static_cast<std::size_t>(pair_index_[static_cast<std::size_t>(v * n_ + u)])]);
            }
            per_vertex += std::max(0, need);
        }
        if (per_vertex > remaining) return false;
        // a block on s vertices separates at most floor(s^2 / 4) pairs
        const int full = remaining / n_, rest = remaining % n_;
        const long long coverable = 1LL * full * (n_ * n_ / 4) + rest * rest / 4;
        return deficit_total_ <= coverable;
    }

    bool useful(const CanonBlock& b) const {
        return std::any_of(b.pairs.begin(), b.pairs.end(),
                           [&](int p) { return count_[static_cast<std::size_t>(p)] < lam_; });
    }

    void apply(const CanonBlock& b, int delta) {
        for (int p : b.pairs) {
            auto& c = count_[static_cast<std::size_t>(p)];
            if (delta > 0) {
                if (c < lam_) --deficit_total_;
                ++c;
            } else {
                --c;
                if (c < lam_) ++deficit_total_;
            }
        }
    }

    bool search(std::size_t start, int used) {
        if (++nodes_ > budget_.node_limit) {
            truncated_ = true;
            return false;
        }
        if (deficit_total_ == 0) return true;
        if (!bounds_allow(capacity_ - used)) return false;
        if (static_cast<int>(chosen_.size()) >= budget_.max_blocks) {
            truncated_ = true;
            return false;
        }
        for (std::size_t id = start; id < blocks_.size(); ++id) {
            const auto& b = blocks_[id];
            if (used + b.size > capacity_) break;
            if (!useful(b)) continue;
            apply(b, +1);
            chosen_.push_back(static_cast<int>(id));
            if (lex_leader() && search(id, used + b.size)) return true;
            chosen_.pop_back();
            apply(b, -1);
            if (truncated_) return false;
        }
        return false;
    }

    int n_;
    int lam_;
    SearchBudget budget_;
    int pair_count_ = 0;
    std::vector<int> pair_index_;
    std::vector<std::pair<int, int>> pair_ends_;
    std::vector<CanonBlock> blocks_;
    std::vector<int> id_of_;
    std::vector<std::vector<int>> perm_images_;

    int capacity_ = 0;
    bool truncated_ = false;
    std::vector<int> chosen_;
    std::vector<int> scratch_;
    std::vector<int> count_;
    long long deficit_total_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExactCapResult exact_cap(int n, int lam, const SearchBudget& budget) {
    if (n < 2 || n > 7) throw SizeLimitExceeded("exact_cap supports 2 <= n <= 7");
    if (lam < 1) throw RangeError("exact_cap needs lambda >= 1");
    if (budget.max_capacity < 1 || budget.max_blocks < 1 || budget.node_limit < 1)
        throw RangeError("search budget entries must be positive");

    CapacitySearch search(n, lam, budget);
    ExactCapResult result;
    for (int capacity = 0; capacity <= budget.max_capacity; ++capacity) {
        auto outcome = search.run(capacity);
        result.nodes = search.nodes();
        if (outcome == CapacitySearch::Outcome::found) {
            result.status = ExactStatus::optimal;
            result.lower = capacity;
            result.upper = capacity;
            result.witness = search.witness();
            return result;
        }
        if (outcome == CapacitySearch::Outcome::truncated) {
            result.lower = capacity;
            break;
        }
        result.lower = capacity + 1;
    }

    auto choice = k_best(static_cast<std::size_t>(n), lam);
    auto cov = code_to_covering(build_code(choice, static_cast<std::size_t>(n), lam), static_cast<std::size_t>(n));
    result.status = ExactStatus::bracket;
    result.upper = static_cast<int>(capacity(cov));
    result.witness = std::move(cov);
    return result;
}

namespace {

class CodeSearch {
public:
    CodeSearch(int k, int lam, int n, std::uint64_t node_limit)
        : k_(k), lam_(lam), n_(n), node_limit_(node_limit) {}

    bool run() {
        const std::uint32_t total = 1u << k_;
        for (int w = lam_; w <= k_; ++w) {
            const std::uint32_t second = (1u << w) - 1;
            if (n_ == 2) return true;
            std::vector<std::uint32_t> candidates;
            for (std::uint32_t c = 1; c < total; ++c) {
                if (c == second || std::popcount(c) < w) continue;
                if (std::popcount(c ^ second) < lam_) continue;
                candidates.push_back(c);
            }
            if (extend(candidates, n_ - 2)) return true;
        }
        return false;
    }

private:
    bool extend(const std::vector<std::uint32_t>& candidates, int need) {
        if (++nodes_ > node_limit_) throw BudgetExhausted("exact_k node limit reached");
        if (need == 0) return true;
        if (static_cast<int>(candidates.size()) < need) return false;
        for (std::size_t i = 0; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
            std::vector<std::uint32_t> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (std::popcount(candidates[i] ^ candidates[j]) >= lam_) next.push_back(candidates[j]);
            if (extend(next, need - 1)) return true;
        }
        return false;
    }

    int k_, lam_, n_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<int> exact_k(int n, int lam, int k_max, std::uint64_t node_limit) {
    if (n < 2 || lam < 1) throw RangeError("exact_k needs n >= 2 and lambda >= 1");
    if (k_max > 20) throw SizeLimitExceeded("exact_k supports k_max <= 20");
    for (int k = 1; k <= k_max; ++k) {
        if (lam > k) continue;
        if (static_cast<std::uint64_t>(n) > (std::uint64_t{1} << k)) continue;
        if (CodeSearch(k, lam, n, node_limit).run()) return k;
    }
    return std::nullopt;
}

nlohmann::json exact_result_to_json(const ExactCapResult& result) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["status"] = result.optimal() ? "optimal" : "bracket";
    if (result.optimal())
        doc["value"] = result.lower;
    else
        doc["value"] = nullptr;
    doc["lower"] = result.lower;
    if (result.upper)
        doc["upper"] = *result.upper;
    else
        doc["upper"] = nullptr;
    doc["nodes"] = result.nodes;
    if (result.witness)
        doc["witness"] = covering_to_json(*result.witness);
    else
        doc["witness"] = nullptr;
    return doc;
}

} // namespace bicover
