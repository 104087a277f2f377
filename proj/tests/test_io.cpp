#include "lambdacol/error.hpp"
#include "lambdacol/io.hpp"
#include "lambdacol/solver.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lambdacol;

namespace {

ParseErrorKind kind_of(std::string_view text)
{
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error for: " << text);
    return ParseErrorKind::Malformed;
}

} // namespace

TEST_CASE("parse graph")
{
    const auto g = parse_graph("# a path\np 3 2\ne 0 1\n\ne 1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(parse_graph("p 4\ne 0 2\n").size() == 1);
    CHECK(parse_graph("p 1 0").order() == 1);
}

TEST_CASE("each parse failure has its own kind")
{
    CHECK(kind_of("e 0 1\n") == ParseErrorKind::MissingHeader);
    CHECK(kind_of("") == ParseErrorKind::MissingHeader);
    CHECK(kind_of("p 3 1\ne 1 1\n") == ParseErrorKind::SelfLoop);
    CHECK(kind_of("p 3 1\ne 0 3\n") == ParseErrorKind::EndpointOutOfRange);
    CHECK(kind_of("p 3 2\ne 0 1\ne 0 1\n") == ParseErrorKind::DuplicateEdge);
    CHECK(kind_of("p 3 2\ne 0 1\n") == ParseErrorKind::EdgeCountMismatch);
    CHECK(kind_of("p 3 1\ne 0 x\n") == ParseErrorKind::Malformed);
    CHECK(kind_of("p 3 1\ne 2 1\n") == ParseErrorKind::Malformed);
    CHECK(kind_of("p 3 1\nq 0 1\n") == ParseErrorKind::Malformed);
}

TEST_CASE("parse error carries the line")
{
    try {
        parse_graph("p 3 2\n# note\ne 0 1\ne 0 1\n");
        FAIL("expected failure");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("graph round trip")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_graph(1 + i % 12, 0.3, rng);
        CHECK(parse_graph(format_graph(g)) == g);
    }
}

TEST_CASE("colouring files")
{
    const auto c = parse_colouring("c 1 3\nc 0 0\nc 2 1\n", 3);
    CHECK(c.label(1) == 3);
    CHECK(c.span() == 3);
    CHECK(parse_colouring(format_colouring(c), 3) == c);

    auto kind = [](std::string_view text, int n) {
        try {
            parse_colouring(text, n);
        } catch (const ParseError& e) {
            return e.kind();
        }
        return ParseErrorKind::MissingHeader;
    };
    CHECK(kind("c 0 0\nc 0 1\n", 2) == ParseErrorKind::DuplicateVertex);
    CHECK(kind("c 0 0\n", 2) == ParseErrorKind::MissingVertex);
    CHECK(kind("c 5 0\n", 2) == ParseErrorKind::EndpointOutOfRange);
    CHECK(kind("c 0 1\nc 1 2\n", 2) == ParseErrorKind::Malformed);
    CHECK(kind("x 0 1\n", 1) == ParseErrorKind::Malformed);
}

TEST_CASE("missing file")
{
    CHECK_THROWS_AS(read_file("/nonexistent/graph.txt"), InvalidArgument);
}
