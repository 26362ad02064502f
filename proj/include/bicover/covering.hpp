#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicover/code.hpp"
#include "bicover/graph.hpp"

namespace bicover {

// A complete bipartite graph between two disjoint, nonempty vertex classes.
// Both classes are kept sorted.
class BipartiteBlock {
public:
    // Throws OverlapError if the classes intersect, RangeError if a class is
    // empty or repeats a vertex.
    BipartiteBlock(std::vector<Vertex> left, std::vector<Vertex> right);

    const std::vector<Vertex>& left() const noexcept { return left_; }
    const std::vector<Vertex>& right() const noexcept { return right_; }
    std::size_t size() const noexcept { return left_.size() + right_.size(); }

    bool separates(Vertex a, Vertex b) const;

    friend bool operator==(const BipartiteBlock&, const BipartiteBlock&) = default;

private:
    std::vector<Vertex> left_;
    std::vector<Vertex> right_;
};

class Covering {
public:
    explicit Covering(int n, std::vector<BipartiteBlock> blocks = {});

    int order() const noexcept { return n_; }
    const std::vector<BipartiteBlock>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    void add(BipartiteBlock block);
    // Copy without block `index`.
    Covering without_block(std::size_t index) const;

    friend bool operator==(const Covering&, const Covering&) = default;

private:
    int n_;
    std::vector<BipartiteBlock> blocks_;
};

std::uint64_t capacity(const Covering& cov);

// x_j: number of blocks containing vertex j (index j-1).
std::vector<int> incidence_counts(const Covering& cov);

// Sum over blocks of |block|^2.
std::uint64_t sum_of_squared_block_sizes(const Covering& cov);

// Number of blocks with a and b on opposite sides.
int separation_count(const Covering& cov, Vertex a, Vertex b);

struct Violation {
    Vertex u;
    Vertex v;
    int multiplicity;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CoverageReport {
    int lambda = 0;
    std::size_t required_pairs = 0;
    // Unset when there are no required pairs.
    std::optional<int> min_multiplicity;
    // Lexicographic by (u, v).
    std::vector<Violation> violations;
    // multiplicity -> number of required pairs with it
    std::map<int, std::size_t> histogram;

    bool valid() const noexcept { return violations.empty(); }
};

// Against K_n^lambda: every pair must be separated at least lambda times.
// Throws GroundSetMismatch when cov.order() != n.
CoverageReport verify(const Covering& cov, int n, int lambda);

// Against a graph: every edge must be separated at least lambda times.
CoverageReport verify(const Covering& cov, const Graph& g, int lambda = 1);

// Rows of the k x n matrix whose columns are the first n codewords become
// blocks (0 -> left, 1 -> right). Rows with an empty side are skipped; their
// 0-based indices go to `dropped_rows` when given.
Covering code_to_covering(const BinaryCode& code, std::size_t n, std::vector<std::size_t>* dropped_rows = nullptr);

// Sylvester matrix rows 2..n split the columns by sign (+1 -> left).
Covering hadamard_covering(int m, const CodeLimits& limits = {});

// One block per unordered balanced bipartition of [n]; the left class is the
// half containing vertex 1, blocks in lexicographic order of that half.
Covering balanced_bipartitions_covering(int n, std::size_t max_blocks = std::size_t{1} << 20);

// Throws GroundSetMismatch.
Covering covering_sum(const Covering& a, const Covering& b);

// Block t splits the vertices by bit t of their colour (0 -> left).
// Throws ImproperColoring.
Covering coloring_to_covering(const Graph& g, std::span<const int> coloring,
                              std::vector<std::size_t>* dropped_bits = nullptr);

nlohmann::json covering_to_json(const Covering& cov);
Covering covering_from_json(const nlohmann::json& doc);

// {"schema_version":1,"n":..,"blocks":[{"left":[..],"right":[..]},..]}
std::string serialize_covering(const Covering& cov);
Covering parse_covering(std::string_view text);

nlohmann::json report_to_json(const CoverageReport& report);

} // namespace bicover
