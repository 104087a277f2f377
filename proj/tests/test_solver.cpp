#include "lambdacol/error.hpp"
#include "lambdacol/solver.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lambdacol;

TEST_CASE("colouring invariants")
{
    CHECK_THROWS_AS(Colouring({}), InvalidArgument);
    CHECK_THROWS_AS(Colouring({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Colouring({0, -1}), InvalidArgument);
    Colouring c({0, 4, 1});
    CHECK(c.span() == 4);
    CHECK(holes_of(c) == std::vector<int>{2, 3});
    CHECK(dual(c) == Colouring({4, 0, 3}));
}

TEST_CASE("validity")
{
    const auto p3 = path_graph(3);
    CHECK(is_lambda_colouring(p3, Colouring({0, 2, 4})));
    CHECK(is_lambda_colouring(p3, Colouring({1, 3, 0})));
    CHECK_FALSE(is_lambda_colouring(p3, Colouring({0, 1, 3})));
    CHECK_FALSE(is_lambda_colouring(p3, Colouring({0, 2, 0})));
    CHECK(first_violation(p3, Colouring({0, 2, 0})) == Edge{0, 2});
    CHECK_THROWS_AS(is_lambda_colouring(p3, Colouring({0, 2})), InvalidArgument);
}

TEST_CASE("known lambda values")
{
    CHECK(lambda_value(Graph(3)) == 0);
    CHECK(lambda_value(path_graph(2)) == 2);
    CHECK(lambda_value(path_graph(3)) == 3);
    CHECK(lambda_value(path_graph(4)) == 3);
    for (int n = 5; n <= 12; ++n)
        CHECK(lambda_value(path_graph(n)) == 4);
    for (int n = 3; n <= 12; ++n)
        CHECK(lambda_value(cycle_graph(n)) == 4);
    for (int n = 2; n <= 8; ++n)
        CHECK(lambda_value(complete_graph(n)) == 2 * n - 2);
    for (int k = 1; k <= 8; ++k)
        CHECK(lambda_value(star_graph(k)) == k + 1);
}

TEST_CASE("solver agrees with the brute-force oracle on every graph up to five vertices")
{
    for (int n = 1; n <= 5; ++n) {
        oracle::all_graphs(n, [](const Graph& g) {
            const auto r = lambda_number(g);
            const int want = oracle::lambda(g);
            REQUIRE(r.lambda == want);
            REQUIRE(is_lambda_colouring(g, r.witness));
            REQUIRE(r.witness.span() == want);
            REQUIRE(r.holes == holes_of(r.witness));
            if (g.size() > 0)
                REQUIRE(delta_lower_bound(g) <= r.lambda);
        });
    }
}

TEST_CASE("witness is the lexicographically first optimal colouring")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        const auto g = oracle::random_graph(2 + i % 5, 0.45, rng);
        const auto r = lambda_number(g);
        std::optional<std::vector<int>> first;
        oracle::all_labellings(g, r.lambda, [&](const std::vector<int>& lab) {
            if (!first && *std::min_element(lab.begin(), lab.end()) == 0)
                first = lab;
        });
        REQUIRE(first);
        const auto got = r.witness.labels();
        CHECK(std::vector<int>(got.begin(), got.end()) == *first);
    }
}

TEST_CASE("solver agrees with the oracle on random larger graphs")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 120; ++i) {
        const int n = 6 + i % 3;
        const auto g = oracle::random_graph(n, 0.2 + 0.1 * (i % 5), rng);
        REQUIRE(lambda_value(g) == oracle::lambda(g));
    }
}

TEST_CASE("colouring enumeration counts match the oracle")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        const auto g = oracle::random_graph(2 + i % 5, 0.5, rng);
        const int span = lambda_value(g) + i % 2;
        std::vector<Colouring> seen;
        const auto got = for_each_colouring_within(g, span, 1'000'000, [&](const Colouring& c) {
            seen.push_back(c);
            return true;
        });
        CHECK(got == seen.size());
        std::size_t normalised = 0;
        oracle::all_labellings(g, span, [&](const std::vector<int>& lab) {
            if (*std::min_element(lab.begin(), lab.end()) == 0)
                ++normalised;
        });
        CHECK(got == normalised);
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        for (const auto& c : seen)
            CHECK(is_lambda_colouring(g, c));
    }
}

TEST_CASE("dual of an optimal colouring is optimal")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 80; ++i) {
        const auto g = oracle::random_graph(3 + i % 6, 0.4, rng);
        const auto r = lambda_number(g);
        const auto d = dual(r.witness);
        CHECK(is_lambda_colouring(g, d));
        CHECK(d.span() == r.lambda);
    }
}

TEST_CASE("consecutive holes are squeezed out")
{
    const auto g = path_graph(3);
    const auto c = remove_consecutive_holes(g, Colouring({0, 5, 10}));
    CHECK(is_lambda_colouring(g, c));
    const auto holes = holes_of(c);
    for (std::size_t i = 0; i + 1 < holes.size(); ++i)
        CHECK(holes[i] + 1 != holes[i + 1]);
}

TEST_CASE("caps and preconditions")
{
    CHECK_THROWS_AS(lambda_number(path_graph(30)), CapExceeded);
    CHECK(lambda_number(path_graph(30), SolverOptions{30}).lambda == 4);
    CHECK_THROWS_AS(delta_lower_bound(Graph(4)), NotApplicable);
}

TEST_CASE("path cover formula on all graphs up to five vertices")
{
    for (int n = 1; n <= 5; ++n) {
        oracle::all_graphs(n, [&](const Graph& g) {
            const auto pc = lambda_via_path_cover(g);
            const int lambda = lambda_value(g);
            REQUIRE(pc.tau == oracle::path_cover(complement(g)));
            if (pc.exact)
                REQUIRE(pc.value == lambda);
            else
                REQUIRE(lambda <= n - 1);
        });
    }
}
