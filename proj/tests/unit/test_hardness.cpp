#include "tourn/hardness.hpp"

#include "tourn/colorability.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace tourn;

namespace {

bool brute_cut_exists(const UndirectedGraph& g)
{
    const int n = g.order();
    const auto tri = g.triangles();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& t : tri) {
            const auto b0 = (mask >> t[0]) & 1U, b1 = (mask >> t[1]) & 1U, b2 = (mask >> t[2]) & 1U;
            if (b0 == b1 && b1 == b2) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

UndirectedGraph complete(int n)
{
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("gadget")
{
    const auto g = gadget();
    CHECK(g.order() == 7);
    CHECK(g.graph().is_complete());
    const auto rep = verify_gadget();
    CHECK(rep.transcription_ok);
    CHECK(rep.transcription_failures.empty());
    CHECK(rep.item1);
    CHECK(rep.item2);
    CHECK(rep.separating.empty());
    CHECK(rep.proper_count == static_cast<int>(rep.proper.size()));
    int count = 0;
    for (unsigned mask = 0; mask < 128; ++mask) {
        std::vector<int> colour(7);
        for (int v = 0; v < 7; ++v) colour[static_cast<std::size_t>(v)] = static_cast<int>((mask >> v) & 1U) + 1;
        const bool p = oracle::proper(g.graph(), colour, 2);
        CHECK(gadget_coloring_proper(g, mask) == p);
        count += p;
        if (p) CHECK(((mask >> gadget_vertex::u) & 1U) == ((mask >> gadget_vertex::v) & 1U));
    }
    CHECK(count == rep.proper_count);
    CHECK(count > 0);
}

TEST_CASE("undirected graph basics")
{
    UndirectedGraph g(4);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK(complete(4).triangles().size() == 4);
    std::stringstream s;
    write_undirected_graph(s, complete(4));
    const auto back = read_undirected_graph(s);
    CHECK(back.edges() == complete(4).edges());
    CHECK(UndirectedGraph::from_code(3, 7).triangles().size() == 1);
}

TEST_CASE("reduction layout")
{
    const auto tri = reduce(complete(3));
    CHECK(tri.t.order() == 3 + 3 + 15);
    CHECK(audit_reduction(complete(3), tri).ok());
    const auto k4 = reduce(complete(4));
    CHECK(k4.t.order() == 4 + 4 * 18);
    CHECK(audit_reduction(complete(4), k4).ok());
    UndirectedGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    const auto p = reduce(path);
    CHECK(p.t == Tournament::transitive(4));
    std::stringstream roles;
    write_roles(roles, tri);
    std::string line;
    int lines = 0;
    while (std::getline(roles, line)) ++lines;
    CHECK(lines == 21);
    for (int pos = 0; pos < 3; ++pos) {
        CHECK(tri.gadget_copy(0, pos, gadget_vertex::u) == tri.y(pos));
        CHECK(tri.gadget_copy(0, pos, gadget_vertex::v) == tri.z(0, pos));
    }
}

TEST_CASE("reduction equivalence on small graphs")
{
    CHECK_FALSE(has_triangle_free_cut(complete(5)).found());
    CHECK_FALSE(check_reduction(complete(5)).colorable);
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << oracle::pairs(n);
        for (std::uint64_t code = 0; code < codes; code += (n == 6 ? 37 : 1)) {
            const auto g = UndirectedGraph::from_code(n, code);
            const auto c = check_reduction(g);
            REQUIRE(c.decided);
            CHECK(c.agree);
            CHECK(c.cut_exists == brute_cut_exists(g));
            CHECK(c.lifted_valid);
            if (c.cut_exists) CHECK(is_triangle_free_cut(g, c.cut));
        }
    }
    for (std::uint64_t s = 0; s < 60; ++s) {
        CounterRng rng(s, 5);
        const auto g = UndirectedGraph::from_code(7, rng.next() & ((std::uint64_t{1} << 21) - 1));
        const auto c = check_reduction(g);
        REQUIRE(c.decided);
        CHECK(c.agree);
        CHECK(c.cut_exists == brute_cut_exists(g));
        CHECK(audit_reduction(g, reduce(g)).ok());
    }
}

TEST_CASE("colorability lift")
{
    for (const auto& t : oracle::all_tournaments(4)) {
        const auto l = lift(t, 3);
        CHECK(l.order() == 9);
        CHECK(oracle::k_colorable(l.graph(), 3) == oracle::k_colorable(t.graph(), 2));
    }
    const auto c = lift(Tournament::cyclic_triangle(), 3);
    CHECK(c.beats(0, 3));
    CHECK(c.beats(3, 6));
    CHECK(c.beats(6, 0));
    CHECK(chromatic_number(c.graph()).k == 3);
    CHECK_THROWS_AS(lift(c, 1), std::invalid_argument);
}
