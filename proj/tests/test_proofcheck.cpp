#include <doctest.h>

#include <cmath>

#include "bicover/bounds.hpp"
#include "bicover/code.hpp"
#include "bicover/covering.hpp"
#include "bicover/errors.hpp"
#include "bicover/proofcheck.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

Covering k2_copies(int times) {
    Covering c(2);
    for (int i = 0; i < times; ++i) c.add(BipartiteBlock({1}, {2}));
    return c;
}

Covering k3_witness() { return Covering(3, {BipartiteBlock({1}, {2, 3}), BipartiteBlock({2}, {3})}); }

} // namespace

TEST_CASE("tail sums") {
    auto a = check_tail_sum(k2_copies(3), 3);
    CHECK(a.ok);
    CHECK(*a.sum == 1);

    auto b = check_tail_sum(hadamard_covering(2), 2);
    CHECK(b.ok);
    CHECK(*b.sum == Rational(1, 2));

    auto c = check_tail_sum(k2_copies(1), 1);
    CHECK(c.ok);
    CHECK(*c.sum == 1);

    CHECK_THROWS_AS(check_tail_sum(hadamard_covering(2), 3), InvalidCovering);
}

TEST_CASE("event disjointness") {
    auto r = check_event_disjointness(k2_copies(3), 3, SweepMode::exhaustive());
    CHECK(r.ok);
    CHECK(r.trials == 8);
    CHECK(r.violation_count == 0);

    auto sampled = check_event_disjointness(hadamard_covering(3), 4, SweepMode::sampled(1, 100'000));
    CHECK(sampled.ok);
    CHECK(sampled.trials == 100'000);
    CHECK(sampled.violation_count == 0);

    // lambda = 1: exact-match events, disjoint because columns are distinct
    auto lex = code_to_covering(greedy_gv_code(4, 1, 16), 16);
    CHECK(check_event_disjointness(lex, 1, SweepMode::exhaustive()).ok);

    CHECK_THROWS_AS(check_event_disjointness(hadamard_covering(5), 16, SweepMode::exhaustive()), SizeLimitExceeded);
}

TEST_CASE("sampled sweeps are deterministic in the seed") {
    auto cov = hadamard_covering(3);
    auto a = check_event_disjointness(cov, 4, SweepMode::sampled(9, 5000));
    auto b = check_event_disjointness(cov, 4, SweepMode::sampled(9, 5000));
    CHECK(a.details == b.details);
    auto c = check_event_disjointness(cov, 4, SweepMode::sampled(10, 5000));
    CHECK(a.details != c.details);
}

TEST_CASE("the (x/r)^r 2^-x bound") {
    auto r = check_eq1(k2_copies(3), 3);
    CHECK(r.ok);
    CHECK(*r.sum == Rational(3, 4));
    CHECK(*r.value == doctest::Approx(0.75));
    CHECK(binom_tail_p(3, 1) >= Rational(3, 8));
    CHECK(binom_tail_p(5, 2) >= Rational(25, 128));
    CHECK_THROWS_AS(check_eq1(hadamard_covering(2), 2), DomainError);

    // pointwise bound for every small x and r with x >= 2r + 1
    for (int rr = 1; rr <= 6; ++rr) {
        for (int x = 2 * rr + 1; x <= 40; ++x) {
            Rational bound(boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(rr)),
                           boost::multiprecision::pow(BigInt(rr), static_cast<unsigned>(rr)) * pow2(static_cast<unsigned>(x)));
            CHECK(binom_tail_p(x, rr) >= bound);
        }
    }
}

TEST_CASE("convexity") {
    CHECK(check_convexity(1, 3, 20, 1000).ok);
    CHECK(check_convexity(2, 5, 40, 1000).ok);
    for (int r = 1; r <= 3; ++r) CHECK(check_convexity(r, 2 * r + 1, 50, 1000).ok);
    const double ln2 = std::log(2.0);
    CHECK(tail_bound_second_derivative(1, 3) == doctest::Approx(ln2 * std::exp2(-3.0) * (3 * ln2 - 2)));
    CHECK(tail_bound_second_derivative(1, 3) > 0);

    // second derivative against a central difference of f
    for (int r = 1; r <= 4; ++r) {
        auto f = [r](double x) { return std::pow(x / r, r) * std::exp2(-x); };
        for (double x = 2 * r + 1; x < 30; x += 1.7) {
            const double h = 1e-3;
            double numeric = (f(x - h) - 2 * f(x) + f(x + h)) / (h * h);
            CHECK(tail_bound_second_derivative(r, x) == doctest::Approx(numeric).epsilon(1e-4));
        }
    }
    CHECK_THROWS_AS(check_convexity(2, 4, 20, 10), DomainError);
    CHECK_THROWS_AS(check_convexity(0, 4, 20, 10), DomainError);
}

TEST_CASE("overlap lemma") {
    auto k3 = Graph::complete(3);
    auto r = check_overlap_lemma(k3_witness(), k3, alpha_per_vertex(k3), SweepMode::exhaustive());
    CHECK(r.ok);
    CHECK(*r.sum == 1);

    auto empty = Graph(4);
    auto e = check_overlap_lemma(Covering(4), empty, alpha_per_vertex(empty), SweepMode::exhaustive());
    CHECK(e.ok);
    CHECK(*e.sum == 1);

    auto c5 = Graph::cycle(5);
    auto cov = coloring_to_covering(c5, greedy_coloring(c5));
    auto c = check_overlap_lemma(cov, c5, alpha_per_vertex(c5), SweepMode::exhaustive());
    CHECK(c.ok);
    CHECK(*c.sum <= 1);
    CHECK(check_independent_event_sets(cov, c5, SweepMode::exhaustive()).ok);

    CHECK_THROWS_AS(check_overlap_lemma(Covering(5), c5, alpha_per_vertex(c5), SweepMode::exhaustive()), InvalidCovering);
}

TEST_CASE("graph diagnostics on random graphs") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto g = random_graph(12, 0.3 + 0.03 * static_cast<double>(seed), seed);
        auto cov = coloring_to_covering(g, greedy_coloring(g));
        auto alpha = alpha_per_vertex(g);
        CHECK(check_overlap_lemma(cov, g, alpha, SweepMode::exhaustive()).ok);
        CHECK(check_independent_event_sets(cov, g, SweepMode::exhaustive()).ok);
        CHECK(check_overlap_lemma(cov, g, alpha, SweepMode::sampled(seed, 2000)).ok);
    }
}

TEST_CASE("negative controls") {
    // Dropping a block of the n = 4 Hadamard covering keeps x_j = 2 = lambda
    // and distinct columns, so only the verifier can notice.
    auto h = hadamard_covering(2);
    for (std::size_t i = 0; i < h.block_count(); ++i) {
        auto broken = h.without_block(i);
        auto report = verify(broken, 4, 2);
        CHECK_FALSE(report.valid());
        for (const auto& v : report.violations) CHECK(h.blocks()[i].separates(v.u, v.v));
        CHECK_THROWS_AS(check_tail_sum(broken, 2), InvalidCovering);
        CHECK_THROWS_AS(check_event_disjointness(broken, 2, SweepMode::exhaustive()), InvalidCovering);
        auto profile = event_profile(broken, 2);
        for (int x : profile.x) CHECK(x == 2);
    }

    // Two copies of an edge checked at lambda = 3: x_j < lambda.
    auto thin = k2_copies(3).without_block(0);
    CHECK_FALSE(verify(thin, 2, 3).valid());
    for (int x : event_profile(thin, 3).x) CHECK(x < 3);
}

TEST_CASE("report JSON") {
    auto doc = check_report_to_json(check_tail_sum(k2_copies(3), 3));
    CHECK(doc["sum"] == "1/1");
    CHECK(doc["ok"] == true);
    CHECK(doc["schema_version"] == 1);
}
