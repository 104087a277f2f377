#include "lambdacol/constructions.hpp"
#include "lambdacol/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lambdacol;

TEST_CASE("recursive graph counts and diameter")
{
    for (int n = 3; n <= 10; ++n) {
        const auto g = build_G_n(n);
        CHECK(g.order() == n + 1);
        CHECK(g.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        const auto d = oracle::floyd_warshall(g);
        int diameter = 0;
        for (const auto& row : d)
            for (int x : row)
                diameter = std::max(diameter, x);
        CHECK(diameter == (n == 3 ? 3 : 2));
    }
    CHECK(build_G_n(3).edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
    CHECK_THROWS_AS(build_G_n(2), InvalidArgument);
}

TEST_CASE("recursive graph has lambda n")
{
    for (int n = 3; n <= 7; ++n)
        CHECK(lambda_value(build_G_n(n)) == n);
    for (int n = 3; n <= 5; ++n)
        CHECK(oracle::lambda(build_G_n(n)) == n);
}

TEST_CASE("family members")
{
    std::mt19937_64 rng(29);
    for (int t = 3; t <= 6; ++t) {
        for (int l = 1; l <= 3; ++l) {
            const auto canon = build_family_member(t, l);
            CHECK(canon.graph.order() == (t + 1) * l);
            CHECK(canon.graph.size() == static_cast<std::size_t>(t * (t - 1) / 2 * l));
            CHECK(is_family_member(canon.graph, canon.assignment));
            CHECK(is_lambda_colouring(canon.graph, class_colouring(canon.assignment)));
            for (int k = 0; k < 3; ++k) {
                const auto m = build_family_member(t, l, FamilyMatchings::random(t, l, rng));
                CHECK(is_family_member(m.graph, m.assignment));
                CHECK(m.graph.size() == canon.graph.size());
                CHECK(is_lambda_colouring(m.graph, class_colouring(m.assignment)));
            }
        }
    }
}

TEST_CASE("family members have lambda t")
{
    std::mt19937_64 rng(31);
    for (int t = 3; t <= 5; ++t)
        for (int l = 1; l <= 2; ++l) {
            CHECK(lambda_value(build_family_member(t, l).graph) == t);
            CHECK(lambda_value(build_family_member(t, l, FamilyMatchings::random(t, l, rng)).graph) == t);
        }
}

TEST_CASE("membership rejects broken graphs")
{
    auto m = build_family_member(3, 2);
    auto g = m.graph;
    g.add_edge(0, 1);
    CHECK_FALSE(is_family_member(g, m.assignment));

    g = m.graph;
    g.add_edge(0, 2);
    CHECK_FALSE(is_family_member(g, m.assignment));

    g = m.graph;
    const auto e = g.edges().front();
    g.remove_edge(e.u, e.v);
    CHECK_FALSE(is_family_member(g, m.assignment));

    auto bad = m.assignment;
    bad.class_of[0] = 1;
    CHECK_FALSE(is_family_member(m.graph, bad));

    bad.class_of.pop_back();
    CHECK_THROWS_AS(is_family_member(m.graph, bad), InvalidArgument);
}

TEST_CASE("bad matchings are rejected")
{
    FamilyMatchings f;
    f.perms[{0, 1}] = {0, 1};
    CHECK_THROWS_AS(build_family_member(3, 2, f), InvalidArgument);
    f.perms.clear();
    f.perms[{0, 2}] = {0, 0};
    CHECK_THROWS_AS(build_family_member(3, 2, f), InvalidArgument);
    CHECK_THROWS_AS(build_family_member(2, 2), InvalidArgument);
    CHECK_THROWS_AS(build_family_member(3, 0), InvalidArgument);
}

TEST_CASE("no vertex sees one colour twice")
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_graph(3 + i % 6, 0.4, rng);
        CHECK_FALSE(forbidden_subgraph_witness(g, lambda_number(g).witness));
    }
    CHECK(forbidden_subgraph_witness(path_graph(3), Colouring({0, 2, 0})) == 1);
}

TEST_CASE("embedding into a family member")
{
    for (int n = 1; n <= 5; ++n) {
        oracle::all_graphs(n, [](const Graph& g) {
            const auto r = lambda_number(g);
            if (r.lambda < 3)
                return;
            const auto e = embed_universal(g, r.witness);
            REQUIRE(is_family_member(e.host, e.assignment));
            REQUIRE(e.assignment.t == r.lambda);
            for (const auto& edge : g.edges())
                REQUIRE(e.host.adjacent(e.injection[edge.u], e.injection[edge.v]));
            for (Vertex v = 0; v < g.order(); ++v)
                REQUIRE(e.assignment.class_of[e.injection[v]] == r.witness.label(v));
        });
    }
}

TEST_CASE("embedding preconditions")
{
    CHECK_THROWS_AS(embed_universal(path_graph(3), Colouring({0, 2, 0})), InvalidArgument);
    CHECK_THROWS_AS(embed_universal(path_graph(2), Colouring({0, 2})), InvalidArgument);
    const auto g = path_graph(4);
    const auto e = embed_universal(g, Colouring({0, 5, 2, 4}));
    CHECK(e.assignment.t == 5);
    CHECK(is_family_member(e.host, e.assignment));
}
