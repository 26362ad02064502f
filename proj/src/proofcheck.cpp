#include "bicover/proofcheck.hpp"

#include <cmath>
#include <random>

#include "bicover/bounds.hpp"
#include "bicover/errors.hpp"

namespace bicover {

namespace {

constexpr std::size_t kept_violations = 16;

void record(CheckReport& report, nlohmann::json violation) {
    ++report.violation_count;
    if (report.violations.size() < kept_violations) report.violations.push_back(std::move(violation));
}

void require_valid(const Covering& cov, int lam) {
    auto report = verify(cov, cov.order(), lam);
    if (!report.valid())
        throw InvalidCovering("covering does not cover K_" + std::to_string(cov.order()) + "^" +
                              std::to_string(lam) + " (" + std::to_string(report.violations.size()) +
                              " pairs short)");
}

void require_valid(const Covering& cov, const Graph& g) {
    auto report = verify(cov, g, 1);
    if (!report.valid())
        throw InvalidCovering("covering misses " + std::to_string(report.violations.size()) + " edges of the graph");
}

// Vector sweep over {0,1}^m. Exhaustive order is lexicographic in
// (v_1, ..., v_m); `visit` receives the vector as a BitVector with bit i = v_{i+1}.
template <typename Visit>
std::uint64_t sweep(std::size_t m, const SweepMode& mode, Visit&& visit) {
    if (mode.kind == SweepMode::Kind::exhaustive) {
        if (m > static_cast<std::size_t>(exhaustive_block_limit))
            throw SizeLimitExceeded("exhaustive sweep needs m <= " + std::to_string(exhaustive_block_limit) +
                                    ", covering has " + std::to_string(m) + " blocks");
        const std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t t = 0; t < total; ++t) visit(BitVector::from_integer(t, m));
        return total;
    }
    std::mt19937_64 rng(mode.seed);
    BitVector v(m);
    for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i % 64 == 0) word = rng();
            v.assign(i, (word >> (i % 64)) & 1u);
        }
        visit(v);
    }
    return mode.trials;
}

const char* mode_name(const SweepMode& mode) {
    return mode.kind == SweepMode::Kind::exhaustive ? "exhaustive" : "sampled";
}

} // namespace

EventProfile event_profile(const Covering& cov, int lam) {
    EventProfile p;
    p.blocks = cov.block_count();
    p.r = (lam - 1) / 2;
    const auto n = static_cast<std::size_t>(cov.order());
    p.left_sets.assign(n, BitVector(p.blocks));
    p.right_sets.assign(n, BitVector(p.blocks));
    for (std::size_t i = 0; i < p.blocks; ++i) {
        for (auto v : cov.blocks()[i].left()) p.left_sets[static_cast<std::size_t>(v - 1)].set(i);
        for (auto v : cov.blocks()[i].right()) p.right_sets[static_cast<std::size_t>(v - 1)].set(i);
    }
    p.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) p.x[j] = static_cast<int>(p.left_sets[j].count() + p.right_sets[j].count());
    return p;
}

CheckReport check_tail_sum(const Covering& cov, int lam) {
    require_valid(cov, lam);
    auto profile = event_profile(cov, lam);
    CheckReport report;
    report.check = "tail_sum";
    report.mode = "exact";
    Rational sum = 0;
    for (int x : profile.x) sum += binom_tail_p(x, profile.r);
    report.ok = sum <= 1;
    report.sum = sum;
    report.details = {{"r", profile.r}, {"x", profile.x}};
    return report;
}

CheckReport check_event_disjointness(const Covering& cov, int lam, const SweepMode& mode) {
    require_valid(cov, lam);
    auto profile = event_profile(cov, lam);
    const auto n = profile.x.size();
    std::vector<std::size_t> right_size(n);
    for (std::size_t j = 0; j < n; ++j) right_size[j] = profile.right_sets[j].count();

    CheckReport report;
    report.check = "event_disjointness";
    report.mode = mode_name(mode);
    std::vector<std::uint64_t> occurrences(n, 0);
    std::vector<int> occurring;
    report.trials = sweep(profile.blocks, mode, [&](const BitVector& v) {
        occurring.clear();
        for (std::size_t j = 0; j < n; ++j) {
            auto mismatches = v.and_count(profile.left_sets[j]) + right_size[j] - v.and_count(profile.right_sets[j]);
            if (mismatches <= static_cast<std::size_t>(profile.r)) {
                occurring.push_back(static_cast<int>(j + 1));
                ++occurrences[j];
            }
        }
        if (occurring.size() > 1) record(report, {{"v", v.to_string()}, {"events", occurring}});
    });

    bool probabilities_match = true;
    if (mode.kind == SweepMode::Kind::exhaustive) {
        auto total = pow2(static_cast<unsigned>(profile.blocks));
        for (std::size_t j = 0; j < n; ++j) {
            Rational counted(BigInt(occurrences[j]), total);
            if (counted != binom_tail_p(profile.x[j], profile.r)) {
                probabilities_match = false;
                record(report, {{"vertex", j + 1}, {"counted_probability", to_fraction_string(counted)}});
            }
        }
    }
    report.ok = report.violation_count == 0 && probabilities_match;
    report.details = {{"r", profile.r}, {"blocks", profile.blocks}, {"occurrences", occurrences}};
    return report;
}

CheckReport check_eq1(const Covering& cov, int lam) {
    const int r = (lam - 1) / 2;
    if (r < 1) throw DomainError("the (x/r)^r 2^-x bound needs r >= 1, i.e. lambda >= 3");
    require_valid(cov, lam);
    auto profile = event_profile(cov, lam);

    CheckReport report;
    report.check = "eq1";
    report.mode = "exact";
    long double lhs = 0;
    Rational exact = 0;
    const BigInt r_pow = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(r));
    for (std::size_t j = 0; j < profile.x.size(); ++j) {
        const int x = profile.x[j];
        lhs += std::pow(static_cast<long double>(x) / r, r) * std::pow(2.0L, -x);
        Rational term(boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(r)),
                      r_pow * pow2(static_cast<unsigned>(x)));
        exact += term;
        auto tail = binom_tail_p(x, r);
        if (tail < term)
            record(report, {{"vertex", j + 1}, {"x", x}, {"tail", to_fraction_string(tail)},
                            {"bound", to_fraction_string(term)}});
    }
    report.value = static_cast<double>(lhs);
    report.sum = exact;
    report.ok = lhs <= 1.0L + 1e-9L && report.violation_count == 0;
    report.details = {{"r", r}, {"x", profile.x}};
    return report;
}

double tail_bound_second_derivative(int r, double x) {
    const double ln2 = std::log(2.0);
    if (r == 1) return ln2 * std::exp2(-x) * (x * ln2 - 2.0);
    const double t = x / r;
    return std::pow(t, r - 2) * std::exp2(-x) * ((t * ln2 - 1.0) * (t * ln2 - 1.0) - 1.0 / r);
}

CheckReport check_convexity(int r, double x_lo, double x_hi, int steps) {
    if (r < 1) throw DomainError("convexity check needs r >= 1");
    if (x_lo < 2 * r + 1) throw DomainError("convexity check needs x_lo >= 2r + 1");
    if (!(x_hi > x_lo) || steps < 2) throw DomainError("convexity check needs x_hi > x_lo and steps >= 2");

    auto f = [r](double x) { return std::exp(r * std::log(x / r) - x * std::log(2.0)); };
    const double h = (x_hi - x_lo) / steps;
    CheckReport report;
    report.check = "convexity";
    report.mode = "grid";
    double min_difference = INFINITY, min_derivative = INFINITY;
    for (int i = 0; i <= steps; ++i) {
        const double x = x_lo + i * h;
        const double second = tail_bound_second_derivative(r, x);
        min_derivative = std::min(min_derivative, second);
        if (!(second > 0)) record(report, {{"x", x}, {"second_derivative", second}});
        if (i == 0 || i == steps) continue;
        const double diff = f(x - h) - 2.0 * f(x) + f(x + h);
        min_difference = std::min(min_difference, diff);
        if (diff < -1e-12) record(report, {{"x", x}, {"second_difference", diff}});
    }
    report.trials = static_cast<std::uint64_t>(steps) + 1;
    report.value = min_difference;
    report.ok = report.violation_count == 0;
    report.details = {{"r", r},
                      {"x_lo", x_lo},
                      {"x_hi", x_hi},
                      {"steps", steps},
                      {"min_second_difference", min_difference},
                      {"min_second_derivative", min_derivative}};
    return report;
}

namespace {

// Exact-match events of the graph argument: the vertices whose block sides
// agree with v everywhere.
struct MatchEvents {
    const EventProfile& profile;

    BitVector occurring(const BitVector& v) const {
        const auto n = profile.x.size();
        BitVector out(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!v.intersects(profile.left_sets[j]) && v.and_count(profile.right_sets[j]) == profile.right_sets[j].count())
                out.set(j);
        return out;
    }
};

} // namespace

CheckReport check_overlap_lemma(const Covering& cov, const Graph& g, const AlphaVector& alpha,
                                const SweepMode& mode) {
    require_valid(cov, g);
    const auto n = static_cast<std::size_t>(g.order());
    if (alpha.size() != n) throw DomainError("alpha vector has the wrong length");
    for (int a : alpha.values)
        if (a < 1) throw DomainError("alpha values must be positive");
    auto profile = event_profile(cov, 1);

    CheckReport report;
    report.check = "overlap_lemma";
    report.mode = mode_name(mode);
    Rational sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += Rational(BigInt(1), pow2(static_cast<unsigned>(profile.x[j])) * alpha.values[j]);
    report.sum = sum;

    MatchEvents events{profile};
    std::vector<std::uint64_t> occurrences(n, 0);
    report.trials = sweep(profile.blocks, mode, [&](const BitVector& v) {
        auto hit = events.occurring(v);
        const auto size = hit.count();
        hit.for_each_set([&](std::size_t j) {
            ++occurrences[j];
            if (size > static_cast<std::size_t>(alpha.values[j]))
                record(report, {{"v", v.to_string()}, {"vertex", j + 1}, {"events", size}, {"alpha", alpha.values[j]}});
        });
    });

    bool probabilities_match = true;
    if (mode.kind == SweepMode::Kind::exhaustive) {
        for (std::size_t j = 0; j < n; ++j) {
            // P[E_j] = 2^-x_j, i.e. 2^(m - x_j) vectors
            if (occurrences[j] != (std::uint64_t{1} << (profile.blocks - static_cast<std::size_t>(profile.x[j])))) {
                probabilities_match = false;
                record(report, {{"vertex", j + 1}, {"occurrences", occurrences[j]}});
            }
        }
    }
    report.ok = sum <= 1 && report.violation_count == 0 && probabilities_match;
    report.details = {{"x", profile.x}, {"alpha", alpha.values}};
    return report;
}

CheckReport check_independent_event_sets(const Covering& cov, const Graph& g, const SweepMode& mode) {
    require_valid(cov, g);
    auto profile = event_profile(cov, 1);
    MatchEvents events{profile};

    CheckReport report;
    report.check = "independent_event_sets";
    report.mode = mode_name(mode);
    std::uint64_t largest = 0;
    report.trials = sweep(profile.blocks, mode, [&](const BitVector& v) {
        auto hit = events.occurring(v);
        largest = std::max<std::uint64_t>(largest, hit.count());
        bool independent = true;
        hit.for_each_set([&](std::size_t j) {
            if (independent && g.neighbors(static_cast<Vertex>(j + 1)).intersects(hit)) independent = false;
        });
        if (!independent) {
            std::vector<int> members;
            hit.for_each_set([&](std::size_t j) { members.push_back(static_cast<int>(j + 1)); });
            record(report, {{"v", v.to_string()}, {"events", members}});
        }
    });
    report.ok = report.violation_count == 0;
    report.details = {{"largest_event_set", largest}};
    return report;
}

nlohmann::json check_report_to_json(const CheckReport& report) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["check"] = report.check;
    doc["mode"] = report.mode;
    doc["ok"] = report.ok;
    if (report.sum)
        doc["sum"] = to_fraction_string(*report.sum);
    else
        doc["sum"] = nullptr;
    if (report.value) doc["value"] = *report.value;
    doc["violations"] = report.violations;
    doc["violation_count"] = report.violation_count;
    doc["trials"] = report.trials;
    doc["details"] = report.details;
    return doc;
}

} // namespace bicover
