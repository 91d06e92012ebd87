#include "tourn/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace tourn;

TEST_CASE("matrix and edge formats round-trip")
{
    OrientedGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    g.add_edge(3, 0);
    for (auto fmt : {GraphFormat::matrix, GraphFormat::edges}) {
        std::stringstream s;
        write_oriented_graph(s, g, fmt);
        CHECK(read_oriented_graph(s) == g);
    }
}

TEST_CASE("tournament parsing")
{
    std::stringstream s("# comment\n3\nmatrix\n010\n001\n100\n");
    const auto t = read_tournament(s);
    CHECK(t.beats(0, 1));
    CHECK(t.beats(2, 0));
}

TEST_CASE("parse errors carry line numbers")
{
    std::stringstream a("3\nedges\n1 2\n2 1\n");
    try {
        read_oriented_graph(a);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    std::stringstream c("2\nmatrix\n11\n00\n");
    CHECK_THROWS_AS(read_oriented_graph(c), ParseError);
    std::stringstream d("3\nedges\n1 2\n");
    CHECK_THROWS_AS(read_tournament(d), ParseError);
    std::stringstream e("2\nedges\n1 5\n");
    CHECK_THROWS_AS(read_oriented_graph(e), ParseError);
}
