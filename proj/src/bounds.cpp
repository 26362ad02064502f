#include "bicover/bounds.hpp"

#include <bit>
#include <cmath>

#include "bicover/code.hpp"
#include "bicover/errors.hpp"

namespace bicover {

namespace {

void require_instance(int n, int lam) {
    if (n < 2) throw DomainError("n >= 2 required, got n = " + std::to_string(n));
    if (lam < 1) throw DomainError("lambda >= 1 required, got lambda = " + std::to_string(lam));
}

int half_floor(int lam) { return (lam - 1) / 2; }

} // namespace

double edge_count_lower(int n, int lam) {
    require_instance(n, lam);
    return 2.0 * lam * (n - 1);
}

double tail_lower(int n, int lam) {
    require_instance(n, lam);
    const double log_n = std::log2(static_cast<double>(n));
    const int r = half_floor(lam);
    if (r == 0) return n * log_n;
    return n * (log_n + r * std::log2(2.0 * log_n / (lam - 1)));
}

double thm11_lower(int n, int lam) { return std::max(edge_count_lower(n, lam), tail_lower(n, lam)); }

double hansel_lower(int n) {
    if (n < 1) throw DomainError("n >= 1 required");
    return n * std::log2(static_cast<double>(n));
}

double ks_lower(const Graph& g) {
    const double n = g.order();
    double sum = 0;
    for (int d : degrees(g)) sum += std::log2(n / (n - d));
    return sum;
}

double alpha_lower(int n, const AlphaVector& alpha) {
    if (alpha.size() != static_cast<std::size_t>(n)) throw DomainError("alpha vector needs one entry per vertex");
    double sum = 0;
    for (int a : alpha.values) {
        if (a < 1 || a > n) throw DomainError("alpha values must lie in 1..n");
        sum += std::log2(static_cast<double>(n) / a);
    }
    return sum;
}

double alpha_lower(const Graph& g, const AlphaOptions& options) {
    return alpha_lower(g.order(), alpha_per_vertex(g, options));
}

double upper_item1(int n) {
    if (n < 2) throw DomainError("item 1 needs n >= 2");
    int ceil_log = std::bit_width(static_cast<unsigned>(n - 1));
    return static_cast<double>(n) * (ceil_log + 1);
}

double upper_item2(int n, int lam) {
    require_instance(n, lam);
    const double log_n = std::log2(static_cast<double>(n));
    if (lam < 2) throw DomainError("item 2 needs lambda >= 2");
    if (lam > 0.5 * log_n)
        throw DomainError("item 2 needs lambda <= 0.5 log n = " + std::to_string(0.5 * log_n));
    return n * (log_n + (lam - 1) * (std::log2(log_n / (lam - 1)) + 4.0));
}

double upper_item3(int n, int lam, double c) {
    require_instance(n, lam);
    if (!(c > 0.0 && c < 0.5)) throw DomainError("item 3 needs 0 < c < 1/2");
    const double threshold = c * std::log2(static_cast<double>(n)) / (1.0 - entropy(c));
    if (lam < threshold)
        throw DomainError("item 3 needs lambda >= c log n / (1 - H(c)) = " + std::to_string(threshold));
    return lam * static_cast<double>(n) / c;
}

double item3_best_c(int n, int lam) {
    require_instance(n, lam);
    const double log_n = std::log2(static_cast<double>(n));
    auto feasible = [&](double c) { return lam >= c * log_n / (1.0 - entropy(c)); };
    double lo = 1e-12, hi = 0.5;
    if (!feasible(lo)) throw DomainError("item 3 admits no c for this instance");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

double upper_item4(int n, int lam) {
    require_instance(n, lam);
    const double log_n = std::log2(static_cast<double>(n));
    const int r = half_floor(lam);
    const double loglog = r == 0 ? 0.0 : std::log2(log_n);
    return n * (log_n + r * loglog + 2.0);
}

bool item4_construction_backed(int n, int lam) {
    require_instance(n, lam);
    if (!std::has_single_bit(static_cast<unsigned>(n))) return false;
    const int log_n = std::countr_zero(static_cast<unsigned>(n));
    const int d = half_floor(lam) + 1;
    const double bound = upper_item4(n, lam);
    for (int m = 2; m <= 16; ++m) {
        if (2 * d - 1 > (1 << m) - 1) continue;
        int dim = d == 1 ? (1 << m) - 1 : bch_dimension(m, d);
        if (dim == log_n) return static_cast<double>(n) * (1 << m) <= bound + 1e-9;
        if (dim > log_n) break;
    }
    return false;
}

BigInt gv_count(int k, int d) {
    if (k < 1 || d < 1 || d > k) throw DomainError("gv_count needs 1 <= d <= k");
    BigInt volume = 0;
    for (int i = 0; i < d; ++i) volume += binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(i));
    BigInt total = pow2(static_cast<unsigned>(k));
    return (total + volume - 1) / volume;
}

Rational binom_tail_p(int x, int r) {
    if (r < 0 || r > x) throw DomainError("binom_tail_p needs 0 <= r <= x");
    BigInt mass = 0;
    for (int q = 0; q <= r; ++q) mass += binomial(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(q));
    return Rational(mass, pow2(static_cast<unsigned>(x)));
}

double entropy(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("entropy is defined on the open interval (0, 1)");
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

template <typename F>
BoundEntry make_entry(std::string name, std::string side, nlohmann::json inputs, F&& compute) {
    BoundEntry e;
    e.name = std::move(name);
    e.side = std::move(side);
    e.inputs = std::move(inputs);
    try {
        e.value = compute(e);
    } catch (const Error& err) {
        e.error = err.what();
    }
    return e;
}

} // namespace

BoundReport bound_report(int n, int lam) {
    require_instance(n, lam);
    BoundReport report;
    report.instance = {{"n", n}, {"lambda", lam}};
    const nlohmann::json base = {{"n", n}, {"lambda", lam}};
    const int r = half_floor(lam);

    report.entries.push_back(make_entry("edge_count", "lower", base, [&](BoundEntry&) { return edge_count_lower(n, lam); }));
    report.entries.push_back(make_entry("thm11", "lower", {{"n", n}, {"lambda", lam}, {"r", r}}, [&](BoundEntry& e) {
        if (r == 0) e.flags.push_back("r0-convention");
        return thm11_lower(n, lam);
    }));
    report.entries.push_back(make_entry("item1", "upper", {{"n", n}}, [&](BoundEntry&) {
        if (lam > 2) throw DomainError("item 1 bounds cap(n, 2) and needs lambda <= 2");
        return upper_item1(n);
    }));
    report.entries.push_back(make_entry("item2", "upper", base, [&](BoundEntry&) { return upper_item2(n, lam); }));
    report.entries.push_back(make_entry("item3", "upper", base, [&](BoundEntry& e) {
        double c = item3_best_c(n, lam);
        e.inputs["c"] = c;
        return upper_item3(n, lam, c);
    }));
    report.entries.push_back(make_entry("item4", "upper", {{"n", n}, {"lambda", lam}, {"r", r}}, [&](BoundEntry& e) {
        e.flags.push_back(item4_construction_backed(n, lam) ? "construction-backed" : "formula-only");
        return upper_item4(n, lam);
    }));
    return report;
}

BoundReport bound_report(const Graph& g, const AlphaOptions& options) {
    BoundReport report;
    report.instance = {{"n", g.order()}, {"edges", g.edge_count()}};
    const nlohmann::json base = report.instance;
    report.entries.push_back(make_entry("ks", "lower", base, [&](BoundEntry&) { return ks_lower(g); }));
    report.entries.push_back(make_entry("alpha", "lower", base, [&](BoundEntry& e) {
        auto alpha = alpha_per_vertex(g, options);
        e.inputs["alpha"] = alpha.values;
        return alpha_lower(g.order(), alpha);
    }));
    return report;
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["instance"] = report.instance;
    auto entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json row = {{"name", e.name}, {"side", e.side}, {"inputs", e.inputs}, {"flags", e.flags}};
        if (e.value)
            row["value"] = *e.value;
        else
            row["value"] = nullptr;
        if (!e.error.empty()) row["error"] = e.error;
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

} // namespace bicover
