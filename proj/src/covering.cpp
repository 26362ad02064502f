#include "bicover/covering.hpp"

#include <algorithm>
#include <bit>

#include "bicover/errors.hpp"
#include "bicover/numeric.hpp"
#include "json_util.hpp"

namespace bicover {

BipartiteBlock::BipartiteBlock(std::vector<Vertex> left, std::vector<Vertex> right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (left_.empty() || right_.empty()) throw RangeError("block classes must be nonempty");
    std::sort(left_.begin(), left_.end());
    std::sort(right_.begin(), right_.end());
    if (std::adjacent_find(left_.begin(), left_.end()) != left_.end() ||
        std::adjacent_find(right_.begin(), right_.end()) != right_.end())
        throw RangeError("block class repeats a vertex");
    std::vector<Vertex> common;
    std::set_intersection(left_.begin(), left_.end(), right_.begin(), right_.end(), std::back_inserter(common));
    if (!common.empty()) throw OverlapError("vertex " + std::to_string(common.front()) + " lies on both sides");
}

bool BipartiteBlock::separates(Vertex a, Vertex b) const {
    auto in = [](const std::vector<Vertex>& side, Vertex v) { return std::binary_search(side.begin(), side.end(), v); };
    return (in(left_, a) && in(right_, b)) || (in(right_, a) && in(left_, b));
}

Covering::Covering(int n, std::vector<BipartiteBlock> blocks) : n_(n) {
    if (n < 1) throw RangeError("covering needs n >= 1");
    blocks_.reserve(blocks.size());
    for (auto& b : blocks) add(std::move(b));
}

void Covering::add(BipartiteBlock block) {
    auto out_of_range = [this](Vertex v) { return v < 1 || v > n_; };
    if (std::any_of(block.left().begin(), block.left().end(), out_of_range) ||
        std::any_of(block.right().begin(), block.right().end(), out_of_range))
        throw RangeError("block vertex outside 1.." + std::to_string(n_));
    blocks_.push_back(std::move(block));
}

Covering Covering::without_block(std::size_t index) const {
    Covering out(n_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (i != index) out.blocks_.push_back(blocks_[i]);
    return out;
}

std::uint64_t capacity(const Covering& cov) {
    std::uint64_t total = 0;
    for (const auto& b : cov.blocks()) total += b.size();
    return total;
}

std::vector<int> incidence_counts(const Covering& cov) {
    std::vector<int> x(static_cast<std::size_t>(cov.order()), 0);
    for (const auto& b : cov.blocks()) {
        for (auto v : b.left()) ++x[static_cast<std::size_t>(v - 1)];
        for (auto v : b.right()) ++x[static_cast<std::size_t>(v - 1)];
    }
    return x;
}

std::uint64_t sum_of_squared_block_sizes(const Covering& cov) {
    std::uint64_t total = 0;
    for (const auto& b : cov.blocks()) total += static_cast<std::uint64_t>(b.size()) * b.size();
    return total;
}

int separation_count(const Covering& cov, Vertex a, Vertex b) {
    int count = 0;
    for (const auto& block : cov.blocks()) count += block.separates(a, b) ? 1 : 0;
    return count;
}

namespace {

// Per-vertex block-membership masks: left[j] has bit i set iff vertex j+1 is
// in the left class of block i.
struct SideMasks {
    std::vector<BitVector> left;
    std::vector<BitVector> right;

    explicit SideMasks(const Covering& cov) {
        const auto m = cov.block_count();
        left.assign(static_cast<std::size_t>(cov.order()), BitVector(m));
        right.assign(static_cast<std::size_t>(cov.order()), BitVector(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (auto v : cov.blocks()[i].left()) left[static_cast<std::size_t>(v - 1)].set(i);
            for (auto v : cov.blocks()[i].right()) right[static_cast<std::size_t>(v - 1)].set(i);
        }
    }

    int multiplicity(Vertex a, Vertex b) const {
        auto i = static_cast<std::size_t>(a - 1), j = static_cast<std::size_t>(b - 1);
        return static_cast<int>(left[i].and_count(right[j]) + right[i].and_count(left[j]));
    }
};

void tally(CoverageReport& report, Vertex u, Vertex v, int mult) {
    ++report.required_pairs;
    ++report.histogram[mult];
    if (!report.min_multiplicity || mult < *report.min_multiplicity) report.min_multiplicity = mult;
    if (mult < report.lambda) report.violations.push_back({u, v, mult});
}

} // namespace

CoverageReport verify(const Covering& cov, int n, int lambda) {
    if (cov.order() != n)
        throw GroundSetMismatch("covering is on " + std::to_string(cov.order()) + " vertices, target K_" +
                                std::to_string(n));
    SideMasks masks(cov);
    CoverageReport report;
    report.lambda = lambda;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) tally(report, u, v, masks.multiplicity(u, v));
    return report;
}

CoverageReport verify(const Covering& cov, const Graph& g, int lambda) {
    if (cov.order() != g.order())
        throw GroundSetMismatch("covering is on " + std::to_string(cov.order()) + " vertices, graph on " +
                                std::to_string(g.order()));
    SideMasks masks(cov);
    CoverageReport report;
    report.lambda = lambda;
    for (auto [u, v] : g.edges()) tally(report, u, v, masks.multiplicity(u, v));
    return report;
}

Covering code_to_covering(const BinaryCode& code, std::size_t n, std::vector<std::size_t>* dropped_rows) {
    if (n < 2) throw RangeError("code_to_covering needs n >= 2");
    if (code.size() < n)
        throw NotEnoughCodewords("code has " + std::to_string(code.size()) + " words, need " + std::to_string(n));
    Covering cov(static_cast<int>(n));
    for (std::size_t row = 0; row < code.length(); ++row) {
        std::vector<Vertex> left, right;
        for (std::size_t j = 0; j < n; ++j)
            (code.words()[j].test(row) ? right : left).push_back(static_cast<Vertex>(j + 1));
        if (left.empty() || right.empty()) {
            if (dropped_rows) dropped_rows->push_back(row);
            continue;
        }
        cov.add(BipartiteBlock(std::move(left), std::move(right)));
    }
    return cov;
}

Covering hadamard_covering(int m, const CodeLimits& limits) {
    auto h = sylvester_matrix(m, limits);
    const auto order = h.size();
    Covering cov(static_cast<int>(order));
    for (std::size_t i = 1; i < order; ++i) {
        std::vector<Vertex> plus, minus;
        for (std::size_t j = 0; j < order; ++j) (h[i][j] > 0 ? plus : minus).push_back(static_cast<Vertex>(j + 1));
        cov.add(BipartiteBlock(std::move(plus), std::move(minus)));
    }
    return cov;
}

Covering balanced_bipartitions_covering(int n, std::size_t max_blocks) {
    if (n < 2 || n % 2) throw RangeError("balanced bipartitions need an even n >= 2");
    const auto half = static_cast<std::size_t>(n / 2);
    if (binomial(static_cast<std::uint64_t>(n), half) / 2 > max_blocks)
        throw SizeLimitExceeded("C(" + std::to_string(n) + ", " + std::to_string(half) + ")/2 blocks exceed the cap");

    Covering cov(n);
    // choose half-1 companions of vertex 1 from 2..n, lexicographically
    std::vector<Vertex> pick(half - 1);
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = static_cast<Vertex>(i + 2);
    while (true) {
        std::vector<Vertex> left{1};
        left.insert(left.end(), pick.begin(), pick.end());
        std::vector<Vertex> right;
        for (Vertex v = 2; v <= n; ++v)
            if (!std::binary_search(pick.begin(), pick.end(), v)) right.push_back(v);
        cov.add(BipartiteBlock(std::move(left), std::move(right)));

        std::size_t i = pick.size();
        while (i > 0 && pick[i - 1] == n - static_cast<Vertex>(pick.size() - i)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
    return cov;
}

Covering covering_sum(const Covering& a, const Covering& b) {
    if (a.order() != b.order())
        throw GroundSetMismatch("cannot add coverings on " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()) + " vertices");
    Covering out = a;
    for (const auto& block : b.blocks()) out.add(block);
    return out;
}

Covering coloring_to_covering(const Graph& g, std::span<const int> coloring, std::vector<std::size_t>* dropped_bits) {
    const auto n = static_cast<std::size_t>(g.order());
    if (coloring.size() != n)
        throw ImproperColoring("colouring has " + std::to_string(coloring.size()) + " entries for " +
                               std::to_string(n) + " vertices");
    if (std::any_of(coloring.begin(), coloring.end(), [](int c) { return c < 0; }))
        throw ImproperColoring("colours must be nonnegative");
    for (auto [u, v] : g.edges())
        if (coloring[static_cast<std::size_t>(u - 1)] == coloring[static_cast<std::size_t>(v - 1)])
            throw ImproperColoring("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                   " are adjacent and share colour " +
                                   std::to_string(coloring[static_cast<std::size_t>(u - 1)]));

    const auto colours = static_cast<unsigned>(*std::max_element(coloring.begin(), coloring.end())) + 1;
    const int bits = colours <= 1 ? 0 : std::bit_width(colours - 1);
    Covering cov(g.order());
    for (int t = 0; t < bits; ++t) {
        std::vector<Vertex> left, right;
        for (std::size_t j = 0; j < n; ++j)
            ((coloring[j] >> t) & 1 ? right : left).push_back(static_cast<Vertex>(j + 1));
        if (left.empty() || right.empty()) {
            if (dropped_bits) dropped_bits->push_back(static_cast<std::size_t>(t));
            continue;
        }
        cov.add(BipartiteBlock(std::move(left), std::move(right)));
    }
    return cov;
}

nlohmann::json covering_to_json(const Covering& cov) {
    detail::json doc;
    doc["schema_version"] = detail::schema_version;
    doc["n"] = cov.order();
    auto blocks = detail::json::array();
    for (const auto& b : cov.blocks()) blocks.push_back({{"left", b.left()}, {"right", b.right()}});
    doc["blocks"] = std::move(blocks);
    return doc;
}

Covering covering_from_json(const nlohmann::json& doc) {
    using detail::require;
    detail::check_schema_version(doc);
    auto n = detail::require_integer(require(doc, "n"), "n");
    if (n < 1 || n > 1'000'000) throw RangeError("n must lie in 1..1000000");
    const auto& blocks = require(doc, "blocks");
    if (!blocks.is_array()) throw ParseError("'blocks' must be an array");
    Covering cov(static_cast<int>(n));
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        auto where = "block #" + std::to_string(k);
        auto side = [&](const char* key) {
            const auto& list = require(blocks[k], key);
            if (!list.is_array()) throw ParseError(where + " '" + key + "' must be an array");
            std::vector<Vertex> out;
            for (const auto& v : list) {
                auto label = detail::require_integer(v, where + " vertex");
                if (label < 1 || label > n)
                    throw RangeError(where + " has vertex " + std::to_string(label) + " outside 1.." +
                                     std::to_string(n));
                out.push_back(static_cast<Vertex>(label));
            }
            return out;
        };
        auto left = side("left");
        auto right = side("right");
        cov.add(BipartiteBlock(std::move(left), std::move(right)));
    }
    return cov;
}

std::string serialize_covering(const Covering& cov) { return covering_to_json(cov).dump(); }

Covering parse_covering(std::string_view text) { return covering_from_json(detail::parse_json_text(text)); }

nlohmann::json report_to_json(const CoverageReport& report) {
    detail::json doc;
    doc["schema_version"] = detail::schema_version;
    doc["lambda"] = report.lambda;
    doc["valid"] = report.valid();
    doc["required_pairs"] = report.required_pairs;
    if (report.min_multiplicity)
        doc["min_multiplicity"] = *report.min_multiplicity;
    else
        doc["min_multiplicity"] = nullptr;
    auto violations = detail::json::array();
    for (const auto& v : report.violations) violations.push_back({{"pair", {v.u, v.v}}, {"multiplicity", v.multiplicity}});
    doc["violating_pairs"] = std::move(violations);
    auto hist = detail::json::array();
    for (auto [mult, count] : report.histogram) hist.push_back({{"multiplicity", mult}, {"pairs", count}});
    doc["histogram"] = std::move(hist);
    return doc;
}

} // namespace bicover
