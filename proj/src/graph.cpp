#include "bicover/graph.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <unordered_map>

#include "bicover/errors.hpp"
#include "json_util.hpp"

namespace bicover {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw RangeError("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n), BitVector(static_cast<std::size_t>(n)));
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw RangeError("a cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(1, n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

void Graph::check_label(Vertex v) const {
    if (v < 1 || v > n_)
        throw RangeError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_label(u);
    check_label(v);
    if (u == v) throw RangeError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u - 1)].set(static_cast<std::size_t>(v - 1));
    adj_[static_cast<std::size_t>(v - 1)].set(static_cast<std::size_t>(u - 1));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_label(u);
    check_label(v);
    return adj_[static_cast<std::size_t>(u - 1)].test(static_cast<std::size_t>(v - 1));
}

int Graph::degree(Vertex v) const {
    check_label(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v - 1)].count());
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 1; u <= n_; ++u) {
        const auto& row = adj_[static_cast<std::size_t>(u - 1)];
        for (auto i = row.find_next(static_cast<std::size_t>(u - 1)); i != BitVector::npos; i = row.find_next(i))
            out.emplace_back(u, static_cast<Vertex>(i + 1));
    }
    return out;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) d[static_cast<std::size_t>(v - 1)] = g.degree(v);
    return d;
}

namespace {

// Branch and bound for a maximum clique in the complement of g, with the
// greedy colouring bound (colour classes are cliques of g).
class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g) {
        auto n = static_cast<std::size_t>(g.order());
        non_adj_.reserve(n);
        for (Vertex v = 1; v <= g.order(); ++v) {
            BitVector row(n);
            row.set_all();
            row.subtract(g.neighbors(v));
            row.reset(static_cast<std::size_t>(v - 1));
            non_adj_.push_back(std::move(row));
        }
    }

    int solve(const BitVector& candidates) {
        best_ = 0;
        expand(0, candidates);
        return best_;
    }

private:
    void expand(int size, BitVector p) {
        std::vector<std::size_t> order;
        std::vector<int> bound;
        colour_sort(p, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (size + bound[k] <= best_) return;
            auto v = order[k];
            BitVector next = p & non_adj_[v];
            if (next.none())
                best_ = std::max(best_, size + 1);
            else
                expand(size + 1, std::move(next));
            p.reset(v);
        }
    }

    void colour_sort(const BitVector& p, std::vector<std::size_t>& order, std::vector<int>& bound) const {
        BitVector uncoloured = p;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            BitVector q = uncoloured;
            for (auto v = q.find_first(); v != BitVector::npos; v = q.find_next(v)) {
                q.subtract(non_adj_[v]);
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    std::vector<BitVector> non_adj_;
    int best_ = 0;
};

} // namespace

int max_independent_set_size(const Graph& g, const BitVector& candidates) {
    return IndependentSetSearch(g).solve(candidates);
}

AlphaVector alpha_per_vertex(const Graph& g, const AlphaOptions& options) {
    if (g.order() > options.exact_limit)
        throw SizeLimitExceeded("exact independence search limited to n <= " +
                                std::to_string(options.exact_limit) + ", got n = " + std::to_string(g.order()));
    const auto n = static_cast<std::size_t>(g.order());

    // vertex -> index into the list of distinct candidate sets
    std::vector<BitVector> unique_sets;
    std::vector<std::size_t> slot(n);
    std::unordered_map<BitVector, std::size_t, BitVectorHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
        BitVector candidates(n);
        candidates.set_all();
        candidates.subtract(g.neighbors(static_cast<Vertex>(i + 1)));
        candidates.reset(i);
        auto [it, inserted] = seen.try_emplace(candidates, unique_sets.size());
        if (inserted) unique_sets.push_back(std::move(candidates));
        slot[i] = it->second;
    }

    std::vector<int> solved(unique_sets.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, unique_sets.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        IndependentSetSearch search(g);
        for (auto k = next.fetch_add(1); k < unique_sets.size(); k = next.fetch_add(1))
            solved[k] = search.solve(unique_sets[k]);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    AlphaVector alpha;
    alpha.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) alpha.values[i] = 1 + solved[slot[i]];
    return alpha;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw RangeError("edge probability must lie in [0, 1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (static_cast<double>(rng() >> 11) * scale < p) g.add_edge(u, v);
    return g;
}

std::vector<int> greedy_coloring(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> colour(n, -1);
    std::vector<char> used;
    for (std::size_t v = 0; v < n; ++v) {
        used.assign(n + 1, 0);
        g.neighbors(static_cast<Vertex>(v + 1)).for_each_set([&](std::size_t u) {
            if (colour[u] >= 0) used[static_cast<std::size_t>(colour[u])] = 1;
        });
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        colour[v] = c;
    }
    return colour;
}

Graph parse_graph(std::string_view text) {
    using detail::require;
    using detail::require_integer;
    auto doc = detail::parse_json_text(text);
    detail::check_schema_version(doc);
    auto n = require_integer(require(doc, "n"), "n");
    if (n < 1 || n > 1'000'000) throw RangeError("n must lie in 1..1000000");
    const auto& edges = require(doc, "edges");
    if (!edges.is_array()) throw ParseError("'edges' must be an array");

    Graph g(static_cast<int>(n));
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        auto where = "edge #" + std::to_string(k);
        if (!e.is_array() || e.size() != 2) throw ParseError(where + " must be a [u, v] pair");
        auto u = require_integer(e[0], where);
        auto v = require_integer(e[1], where);
        if (u < 1 || u > n || v < 1 || v > n)
            throw RangeError(where + " has a label outside 1.." + std::to_string(n));
        if (u >= v) throw ParseError(where + " must satisfy u < v");
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError(where + " duplicates an earlier edge");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    detail::json doc;
    doc["schema_version"] = detail::schema_version;
    doc["n"] = g.order();
    auto edges = detail::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

} // namespace bicover
