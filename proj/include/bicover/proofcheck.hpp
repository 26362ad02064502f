#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicover/covering.hpp"
#include "bicover/graph.hpp"
#include "bicover/numeric.hpp"

namespace bicover {

// How the random vector v in {0,1}^m is explored: every vector (m <= 20), or
// `trials` draws from std::mt19937_64(seed).
struct SweepMode {
    enum class Kind { exhaustive, sampled };
    Kind kind = Kind::exhaustive;
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;

    static SweepMode exhaustive() { return {}; }
    static SweepMode sampled(std::uint64_t seed, std::uint64_t trials) { return {Kind::sampled, seed, trials}; }
};

inline constexpr int exhaustive_block_limit = 20;

// A_j / B_j: blocks holding vertex j on the left / right, as masks over the
// m blocks (bit i = block i). x_j = |A_j| + |B_j|, r = floor((lambda - 1) / 2).
struct EventProfile {
    std::size_t blocks = 0;
    std::vector<BitVector> left_sets;
    std::vector<BitVector> right_sets;
    std::vector<int> x;
    int r = 0;
};

EventProfile event_profile(const Covering& cov, int lam);

struct CheckReport {
    std::string check;
    std::string mode;
    bool ok = false;
    std::optional<Rational> sum;
    std::optional<double> value;
    std::uint64_t trials = 0;
    std::uint64_t violation_count = 0;
    std::vector<nlohmann::json> violations;  // first few, in sweep order
    nlohmann::json details = nlohmann::json::object();
};

// sum_j P[Bin(x_j, 1/2) <= r] as an exact rational; ok iff <= 1.
// Throws InvalidCovering unless cov covers K_n^lambda.
CheckReport check_tail_sum(const Covering& cov, int lam);

// E_j: #{i in A_j : v_i = 1} + #{i in B_j : v_i = 0} <= r. Reports vectors on
// which two or more E_j occur; the exhaustive sweep also recounts each
// P[E_j] and compares it with the tail probability exactly.
CheckReport check_event_disjointness(const Covering& cov, int lam, const SweepMode& mode);

// sum_j (x_j / r)^r 2^-x_j <= 1 + 1e-9, plus the exact pointwise bound
// P[Bin(x_j, 1/2) <= r] >= (x_j / r)^r 2^-x_j. DomainError when r = 0.
CheckReport check_eq1(const Covering& cov, int lam);

// f(x) = (x/r)^r 2^-x on a uniform grid over [x_lo, x_hi]: all second central
// differences >= -1e-12 and the closed-form second derivative > 0.
CheckReport check_convexity(int r, double x_lo, double x_hi, int steps);

// Closed form of f'' for f(x) = (x/r)^r 2^-x.
double tail_bound_second_derivative(int r, double x);

// E_j: v_i = 0 on A_j and v_i = 1 on B_j. Exact sum_j 2^-x_j / alpha_j <= 1;
// the sweep checks that a vector in E_j lies in at most alpha_j events.
// Throws InvalidCovering unless cov covers every edge of g.
CheckReport check_overlap_lemma(const Covering& cov, const Graph& g, const AlphaVector& alpha,
                                const SweepMode& mode);

// With E_j as above, the set of occurring events is independent in g.
CheckReport check_independent_event_sets(const Covering& cov, const Graph& g, const SweepMode& mode);

nlohmann::json check_report_to_json(const CheckReport& report);

} // namespace bicover
