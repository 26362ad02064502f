#include <doctest.h>

#include <cmath>
#include <map>

#include "bicover/bounds.hpp"
#include "bicover/construct.hpp"
#include "bicover/errors.hpp"
#include "bicover/oracle.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

// Solved once and shared by the property checks below.
const ExactCapResult& solved(int n, int lam) {
    static std::map<std::pair<int, int>, ExactCapResult> cache;
    auto it = cache.find({n, lam});
    if (it == cache.end()) it = cache.emplace(std::pair{n, lam}, exact_cap(n, lam)).first;
    return it->second;
}

const std::vector<std::pair<int, int>> small_instances{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3},
                                                       {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}};

} // namespace

TEST_CASE("exact capacities of the smallest instances") {
    CHECK(*solved(2, 1).upper == 2);
    CHECK(*solved(2, 2).upper == 4);
    CHECK(*solved(3, 1).upper == 5);
    CHECK(*solved(4, 1).upper == 8);

    Covering two(2, {BipartiteBlock({1}, {2}), BipartiteBlock({1}, {2})});
    CHECK(*solved(2, 2).witness == two);
}

TEST_CASE("exact capacities agree with multiset enumeration") {
    for (auto [n, lam] : small_instances) {
        if (n * lam > 12) continue;
        const auto& r = solved(n, lam);
        REQUIRE(r.optimal());
        auto brute = oracle::min_capacity(n, lam, *r.upper);
        REQUIRE(brute);
        CHECK(*brute == *r.upper);
        CHECK(r.lower == *r.upper);
    }
}

TEST_CASE("exact witnesses verify and respect the bounds") {
    for (auto [n, lam] : small_instances) {
        const auto& r = solved(n, lam);
        REQUIRE(r.optimal());
        REQUIRE(r.witness);
        CHECK(verify(*r.witness, n, lam).valid());
        CHECK(oracle::covers(*r.witness, lam));
        CHECK(capacity(*r.witness) == static_cast<std::uint64_t>(*r.upper));
        CHECK(*r.upper >= static_cast<int>(std::ceil(thm11_lower(n, lam) - 1e-9)));
        CHECK(static_cast<std::uint64_t>(*r.upper) <= capacity(best_construction(n, lam).covering));
    }
}

TEST_CASE("exact capacity is subadditive in lambda") {
    for (int n : {2, 3, 4})
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; a + b <= 3; ++b)
                CHECK(*solved(n, a).upper + *solved(n, b).upper >= *solved(n, a + b).upper);
}

TEST_CASE("exact search is deterministic") {
    auto a = exact_cap(4, 2);
    auto b = exact_cap(4, 2);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("a tiny budget yields a bracket") {
    auto r = exact_cap(5, 3, {.max_capacity = 64, .max_blocks = 64, .node_limit = 10});
    CHECK_FALSE(r.optimal());
    REQUIRE(r.upper);
    CHECK(r.lower <= *r.upper);
    REQUIRE(r.witness);
    CHECK(verify(*r.witness, 5, 3).valid());

    auto capped = exact_cap(4, 1, {.max_capacity = 7, .max_blocks = 64, .node_limit = 50'000'000});
    CHECK_FALSE(capped.optimal());
    CHECK(capped.lower == 8);

    CHECK_THROWS_AS(exact_cap(8, 1), SizeLimitExceeded);
    auto doc = exact_result_to_json(solved(3, 1));
    CHECK(doc["status"] == "optimal");
    CHECK(doc["value"] == 5);
}

TEST_CASE("exact code length") {
    CHECK(exact_k(4, 2, 10) == 3);
    for (int k = 1; k <= 8; ++k) CHECK(exact_k(2, k, 10) == k);
    CHECK(exact_k(8, 2, 10) == 4);
    CHECK(exact_k(3, 5, 4) == std::nullopt);
    CHECK_THROWS_AS(exact_k(16, 5, 12, 100), BudgetExhausted);

    for (int n = 2; n <= 9; ++n)
        for (int lam = 1; lam <= 4; ++lam) CHECK(exact_k(n, lam, 10) == oracle::exact_k(n, lam, 10));
}
