#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicover/graph.hpp"
#include "bicover/numeric.hpp"

namespace bicover {

// All logarithms are base 2.

// 2 lambda (n - 1), from counting edges of the blocks.
double edge_count_lower(int n, int lam);

// n [log n + r log(2 log n / (lambda - 1))], r = floor((lambda - 1) / 2). The
// r-term is taken as 0 when r = 0 (lambda in {1, 2}).
double tail_lower(int n, int lam);

// max(edge_count_lower, tail_lower).
double thm11_lower(int n, int lam);

double hansel_lower(int n);

// sum_i log(n / (n - d_i))
double ks_lower(const Graph& g);

// sum_i log(n / alpha_i)
double alpha_lower(const Graph& g, const AlphaOptions& options = {});
double alpha_lower(int n, const AlphaVector& alpha);

// n (ceil(log n) + 1); bounds cap(n, 2).
double upper_item1(int n);
// n [log n + (lambda - 1)(log(log n / (lambda - 1)) + 4)] for 2 <= lambda <= 0.5 log n.
double upper_item2(int n, int lam);
// lambda n / c for 0 < c < 1/2 and lambda >= c log n / (1 - H(c)).
double upper_item3(int n, int lam, double c);
// n [log n + floor((lambda - 1) / 2) log log n + 2].
double upper_item4(int n, int lam);

// Largest c < 1/2 (to bisection precision) admitted by item 3.
double item3_best_c(int n, int lam);

// True when n is the exact codeword count of an extended BCH code of length
// 2^m with d - 1 = floor((lambda - 1) / 2) and n 2^m does not exceed the item 4
// value, i.e. a covering built here attains the bound.
bool item4_construction_backed(int n, int lam);

// ceil(2^k / sum_{i<d} C(k, i)), exact.
BigInt gv_count(int k, int d);

// P[Binomial(x, 1/2) <= r] = sum_{q<=r} C(x, q) / 2^x, exact.
Rational binom_tail_p(int x, int r);

double entropy(double x);

struct BoundEntry {
    std::string name;
    std::string side;  // "lower" | "upper"
    std::optional<double> value;
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<std::string> flags;
    std::string error;  // set when the bound's preconditions fail
};

struct BoundReport {
    nlohmann::json instance = nlohmann::json::object();
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& name) const;
};

BoundReport bound_report(int n, int lam);
BoundReport bound_report(const Graph& g, const AlphaOptions& options = {});

nlohmann::json bound_report_to_json(const BoundReport& report);

} // namespace bicover
