#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicover/code.hpp"
#include "bicover/covering.hpp"
#include "bicover/graph.hpp"

namespace bicover {

enum class Method { even_weight, gv, bch, hadamard, balanced, coloring };

std::optional<Method> parse_method(std::string_view name);
std::string method_name(Method method);

struct Construction {
    Covering covering;
    std::string method;
    // Multiplicity the construction guarantees on every required pair (on
    // every edge of the graph for the colouring method).
    int guaranteed_lambda = 0;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::size_t> dropped_rows;
};

// Builds a covering of K_n^lambda (of `graph` for Method::coloring) with the
// named method. Throws DomainError when the method cannot guarantee lambda.
Construction construct(Method method, int n, int lam, const Graph* graph = nullptr, const CodeLimits& limits = {});

// Smallest-capacity covering of K_n^lambda among: the k_best code, repeated
// Sylvester-Hadamard coverings (n a power of 2) and repeated balanced
// bipartition coverings (even n <= 18). Ties keep that order.
Construction best_construction(int n, int lam, const CodeLimits& limits = {});

} // namespace bicover
