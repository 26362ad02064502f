#include "bicover/construct.hpp"

#include <algorithm>
#include <bit>

#include "bicover/errors.hpp"
#include "bicover/numeric.hpp"

namespace bicover {

namespace {

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

Construction from_code(const BinaryCode& code, int n, std::string method, int guaranteed, nlohmann::json parameters) {
    std::vector<std::size_t> dropped;
    auto cov = code_to_covering(code, static_cast<std::size_t>(n), &dropped);
    parameters["k"] = code.length();
    return {std::move(cov), std::move(method), guaranteed, std::move(parameters), std::move(dropped)};
}

Covering repeated(const Covering& base, int copies) {
    Covering out(base.order());
    for (int t = 0; t < copies; ++t)
        for (const auto& b : base.blocks()) out.add(b);
    return out;
}

} // namespace

std::optional<Method> parse_method(std::string_view name) {
    if (name == "even-weight") return Method::even_weight;
    if (name == "gv") return Method::gv;
    if (name == "bch") return Method::bch;
    if (name == "hadamard") return Method::hadamard;
    if (name == "balanced") return Method::balanced;
    if (name == "coloring") return Method::coloring;
    return std::nullopt;
}

std::string method_name(Method method) {
    switch (method) {
    case Method::even_weight: return "even-weight";
    case Method::gv: return "gv";
    case Method::bch: return "bch";
    case Method::hadamard: return "hadamard";
    case Method::balanced: return "balanced";
    case Method::coloring: return "coloring";
    }
    return "unknown";
}

Construction construct(Method method, int n, int lam, const Graph* graph, const CodeLimits& limits) {
    if (method == Method::coloring) {
        if (!graph) throw DomainError("the coloring method needs a graph");
        if (lam != 1) throw DomainError("method coloring guarantees lambda = 1 only");
        auto colours = greedy_coloring(*graph);
        int used = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
        std::vector<std::size_t> dropped;
        auto cov = coloring_to_covering(*graph, colours, &dropped);
        return {std::move(cov), "coloring", 1, {{"colors", used}}, std::move(dropped)};
    }
    if (n < 2) throw DomainError("n >= 2 required");
    if (lam < 1) throw DomainError("lambda >= 1 required");

    switch (method) {
    case Method::even_weight: {
        if (lam > 2) throw DomainError("method even-weight guarantees lambda = 2 only");
        int k = std::max(2, ceil_log2(n) + 1);
        return from_code(even_weight_code(k, limits), n, "even-weight", 2, nlohmann::json::object());
    }
    case Method::gv: {
        for (int k = std::max(ceil_log2(n), lam); k < 63 && (std::size_t{1} << k) <= limits.max_words; ++k) {
            try {
                auto code = greedy_gv_code(k, lam, static_cast<std::size_t>(n), limits);
                return from_code(code, n, "gv", lam, {{"d", lam}});
            } catch (const TargetUnreached&) {
            }
        }
        throw NoConstruction("greedy GV scan reaches no length within the enumeration cap");
    }
    case Method::bch: {
        const int d = std::max(2, (lam + 1) / 2);
        for (int m = 2; m <= 16; ++m) {
            if (2 * d - 1 > (1 << m) - 1) continue;
            int dim = bch_dimension(m, d);
            if (dim < 63 && (std::size_t{1} << dim) < static_cast<std::size_t>(n)) continue;
            auto code = bch_extended_code(m, d, static_cast<std::size_t>(n), limits);
            return from_code(code, n, "bch", 2 * d, {{"m", m}, {"d", d}, {"dimension", dim}});
        }
        throw NoConstruction("no extended BCH code with m <= 16 has enough codewords");
    }
    case Method::hadamard: {
        if (!std::has_single_bit(static_cast<unsigned>(n))) throw DomainError("method hadamard needs n a power of 2");
        if (lam > n / 2) throw DomainError("method hadamard guarantees lambda = n/2 = " + std::to_string(n / 2) + " only");
        int m = std::countr_zero(static_cast<unsigned>(n));
        return {hadamard_covering(m, limits), "hadamard", n / 2, {{"m", m}}, {}};
    }
    case Method::balanced: {
        if (n % 2) throw DomainError("method balanced needs an even n");
        auto mult = binomial(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(n / 2 - 1));
        if (mult < lam)
            throw DomainError("method balanced guarantees lambda = " + mult.str() + " only");
        return {balanced_bipartitions_covering(n), "balanced", static_cast<int>(mult), nlohmann::json::object(), {}};
    }
    case Method::coloring: break;
    }
    throw DomainError("unsupported method");
}

Construction best_construction(int n, int lam, const CodeLimits& limits) {
    if (n < 2 || lam < 1) throw DomainError("best_construction needs n >= 2 and lambda >= 1");
    auto choice = k_best(static_cast<std::size_t>(n), lam, limits);
    auto best = from_code(build_code(choice, static_cast<std::size_t>(n), lam, limits), n, choice.method, lam,
                          {{"code", choice.method}});
    best.method = "code:" + choice.method;

    auto offer = [&](Construction candidate) {
        if (capacity(candidate.covering) < capacity(best.covering)) best = std::move(candidate);
    };
    if (std::has_single_bit(static_cast<unsigned>(n))) {
        int m = std::countr_zero(static_cast<unsigned>(n));
        if (m <= limits.max_hadamard_log_order) {
            int copies = (lam + n / 2 - 1) / (n / 2);
            auto base = hadamard_covering(m, limits);
            if (capacity(base) * static_cast<std::uint64_t>(copies) < capacity(best.covering))
                offer({repeated(base, copies), "hadamard", copies * (n / 2), {{"m", m}, {"copies", copies}}, {}});
        }
    }
    if (n % 2 == 0 && n <= 18) {
        int mult = static_cast<int>(binomial(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(n / 2 - 1)));
        int copies = (lam + mult - 1) / mult;
        auto per_copy = static_cast<std::uint64_t>(n) *
                        static_cast<std::uint64_t>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n / 2)) / 2);
        if (per_copy * static_cast<std::uint64_t>(copies) < capacity(best.covering))
            offer({repeated(balanced_bipartitions_covering(n), copies), "balanced", copies * mult, {{"copies", copies}}, {}});
    }
    return best;
}

} // namespace bicover
