#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicover/bitvec.hpp"

namespace bicover {

// Vertices are labelled 1..n throughout the public API and in every file format.
using Vertex = int;

class Graph {
public:
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const noexcept { return n_; }

    // Throws RangeError on labels outside 1..n or u == v.
    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::size_t edge_count() const;

    // Bit i-1 is set iff vertex i is a neighbour.
    const BitVector& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v - 1)]; }

    // Sorted, u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_label(Vertex v) const;

    int n_;
    std::vector<BitVector> adj_;
};

std::vector<int> degrees(const Graph& g);

// values[i-1] is the largest independent set containing vertex i.
struct AlphaVector {
    std::vector<int> values;

    int operator[](Vertex v) const { return values[static_cast<std::size_t>(v - 1)]; }
    std::size_t size() const noexcept { return values.size(); }
    friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

struct AlphaOptions {
    int exact_limit = 40;  // largest n accepted by the exact search
    unsigned threads = 1;  // 0 means hardware concurrency
};

// Exact per-vertex independence numbers. Each value is 1 + the maximum
// independent set of the subgraph induced on the non-neighbours of the vertex;
// identical candidate sets share one solve. Throws SizeLimitExceeded when
// n > options.exact_limit.
AlphaVector alpha_per_vertex(const Graph& g, const AlphaOptions& options = {});

// Maximum independent set size of the subgraph induced on `candidates`.
int max_independent_set_size(const Graph& g, const BitVector& candidates);

// G(n, p) from a seeded std::mt19937_64 stream. Pairs (u, v), u < v, are
// visited in lexicographic order; each consumes one 64-bit draw x and becomes
// an edge iff (x >> 11) * 2^-53 < p. mt19937_64 is fully specified by the
// C++ standard, so a seed reproduces the same graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

// Label order, smallest feasible colour; colours are 0-based.
std::vector<int> greedy_coloring(const Graph& g);

// {"schema_version":1,"n":<int>,"edges":[[u,v],...]}; schema_version optional
// on input. Edges must satisfy 1 <= u < v <= n, no duplicates.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

} // namespace bicover
