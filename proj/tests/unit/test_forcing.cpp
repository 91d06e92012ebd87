#include "tourn/colorability.hpp"
#include "tourn/forcing.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace tourn;

namespace {

// Directed 4-cycle a1 -> b1 -> a2 -> b2 -> a1 across parts of size 2.
KPartiteTournament four_cycle()
{
    KPartiteTournament f(2, 2);
    f.orient(f.vertex(0, 0), f.vertex(1, 0));
    f.orient(f.vertex(1, 0), f.vertex(0, 1));
    f.orient(f.vertex(0, 1), f.vertex(1, 1));
    f.orient(f.vertex(1, 1), f.vertex(0, 0));
    return f;
}

// Completions built from cross edges and inner bits directly.
std::vector<Tournament> completions(const KPartiteTournament& f)
{
    std::vector<std::pair<int, int>> inner;
    for (int u = 0; u < f.order(); ++u)
        for (int v = u + 1; v < f.order(); ++v)
            if (f.part_of(u) == f.part_of(v)) inner.emplace_back(u, v);
    std::vector<Tournament> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << inner.size()); ++code) {
        OrientedGraph g(f.order());
        for (int u = 0; u < f.order(); ++u)
            for (int v = 0; v < f.order(); ++v)
                if (f.has_edge(u, v)) g.add_edge(u, v);
        for (std::size_t i = 0; i < inner.size(); ++i)
            ((code >> i) & 1U) ? g.add_edge(inner[i].first, inner[i].second) : g.add_edge(inner[i].second, inner[i].first);
        out.emplace_back(std::move(g));
    }
    return out;
}

bool oracle_forces(const KPartiteTournament& f, const OrientedGraph& h)
{
    for (const auto& t : completions(f))
        if (oracle::embeddings(t.graph(), h) == 0) return false;
    return true;
}

bool pairwise_ok(const std::vector<Tuple>& ts)
{
    for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
            int same = 0;
            for (std::size_t i = 0; i < ts[a].size(); ++i) same += ts[a][i] == ts[b][i];
            if (same > 1) return false;
        }
    return true;
}

} // namespace

TEST_CASE("k-partite tournament basics")
{
    KPartiteTournament f(3, 2);
    CHECK(f.order() == 6);
    CHECK_THROWS_AS(f.orient(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.check_complete(), std::invalid_argument);
    const auto c = four_cycle();
    c.check_complete();
    std::stringstream s;
    write_kpartite(s, c);
    CHECK(read_kpartite(s) == c);
    std::stringstream bad("parts: 2 2\n1.1 1.2\n");
    CHECK_THROWS(read_kpartite(bad));
}

TEST_CASE("tuple collections")
{
    CHECK(disjoint_tuples(2, 2).size() == 4);
    CHECK(disjoint_tuples(4, 3).size() >= 2);
    CHECK(disjoint_tuples(8, 4).size() >= 4);
    for (int k = 2; k <= 5; ++k)
        for (int t = 1; t <= 12; ++t) {
            const auto ts = disjoint_tuples(t, k);
            CHECK(pairwise_ok(ts));
            CHECK(pairwise_agreement_ok(ts));
            CHECK(static_cast<long long>(ts.size()) * k * k >= static_cast<long long>(t) * t);
            for (const auto& tu : ts) {
                CHECK(static_cast<int>(tu.size()) == k);
                for (int x : tu) CHECK((x >= 0 && x < t));
            }
        }
    CHECK_THROWS_AS(disjoint_tuples(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_tuples(0, 2), std::invalid_argument);
    const auto mixed = disjoint_tuples(std::vector<int>{2, 3, 5});
    CHECK(pairwise_ok(mixed));
    CHECK_FALSE(pairwise_agreement_ok({{0, 0, 1}, {0, 0, 2}}));
}

TEST_CASE("gamma closed form")
{
    CHECK(forcing_gamma(1) == Rational(1, 16));
    CHECK(forcing_gamma(2) == Rational(1, 16 * 8 * 16));
    const Rational g7 = forcing_gamma(7);
    BigInt den = BigInt(1) << 49;
    den *= 8 * 2401;
    CHECK(g7 == Rational(BigInt(1), den));
}

TEST_CASE("build_forcing respects D and is reproducible")
{
    const auto c3 = oracle::cycle3();
    const Coloring col{1, 1, 2};
    OrientedGraph none(2);
    const auto a = build_forcing(c3, col, none, 4, 17);
    const auto b = build_forcing(c3, col, none, 4, 17);
    CHECK(a == b);
    a.check_complete();
    CHECK(a.coins_used == 16);
    int differ = 0;
    for (std::uint64_t s = 0; s < 100; ++s)
        if (!(build_forcing(c3, col, none, 4, s) == a)) ++differ;
    CHECK(differ >= 99);

    // Transitive pattern: class 1 -> class 2 is consistent with D = {(1,2)}.
    const auto tt = Tournament::transitive(3).graph();
    OrientedGraph d(2);
    d.add_edge(0, 1);
    const auto f = build_forcing(tt, Coloring{1, 1, 2}, d, 3, 5);
    CHECK(f.coins_used == 0);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(f.has_edge(f.vertex(0, x), f.vertex(1, y)));
    CHECK_THROWS_AS(build_forcing(tt, Coloring{2, 1, 1}, d, 3, 5), std::invalid_argument);  // 1 -> 2 is an edge into class 1
    CHECK_THROWS_AS(build_forcing(c3, Coloring{1, 1, 1}, none, 2, 0), std::invalid_argument);
}

TEST_CASE("forcing C3 with the directed 4-cycle")
{
    const auto c3 = oracle::cycle3();
    const auto f = four_cycle();
    const auto r = forces_exhaustive(f, c3);
    CHECK(r.decided);
    CHECK(r.forces);
    CHECK(r.completions == 4);
    KPartiteTournament one(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) one.orient(one.vertex(0, a), one.vertex(1, b));
    const auto n = forces_exhaustive(one, c3);
    CHECK(n.decided);
    CHECK_FALSE(n.forces);
    REQUIRE(n.counterexample);
    CHECK(oracle::embeddings(n.counterexample->graph(), c3) == 0);
}

TEST_CASE("forces_exhaustive agrees with an independent completion oracle")
{
    for (std::uint64_t s = 0; s < 40; ++s) {
        CounterRng rng(s, 3);
        KPartiteTournament f(2, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                rng.coin() ? f.orient(f.vertex(0, a), f.vertex(1, b)) : f.orient(f.vertex(1, b), f.vertex(0, a));
        CHECK(forces_exhaustive(f, oracle::cycle3()).forces == oracle_forces(f, oracle::cycle3()));
    }
}

TEST_CASE("certify_completion yields disjoint valid copies")
{
    const auto c3 = oracle::cycle3();
    const Coloring col{1, 1, 2};
    const auto f = four_cycle();
    for (const auto& t : completions(f)) {
        const auto cert = certify_completion(f, t, c3, col);
        CHECK(cert.copies.size() >= 1);
        for (const auto& e : cert.copies) CHECK(is_embedding(t.graph(), c3, e));
        CHECK(cross_edge_disjoint(f, c3, cert.copies));
    }
    const auto notc = Tournament::transitive(4);
    CHECK_THROWS_AS(certify_completion(f, notc, c3, col), std::invalid_argument);
}

TEST_CASE("planted copies are certified in the transitive completion")
{
    const auto h = oracle::qr7().graph();
    const auto chi = chromatic_number(h);
    REQUIRE(chi.k == 3);
    OrientedGraph d(3);
    auto f = build_forcing(h, chi.coloring, d, 9, 1);
    const auto planted = plant_block_copies(f, h, chi.coloring);
    CHECK(planted > 0);
    // Complete each part transitively by index.
    OrientedGraph g = f.graph();
    for (int u = 0; u < f.order(); ++u)
        for (int v = u + 1; v < f.order(); ++v)
            if (f.part_of(u) == f.part_of(v)) g.add_edge(u, v);
    const Tournament t(std::move(g));
    const auto cert = certify_completion(f, t, h, chi.coloring);
    CHECK(cert.copies.size() == planted);
    CHECK(cross_edge_disjoint(f, h, cert.copies));
}

TEST_CASE("minimal forcing search")
{
    const auto c3 = oracle::cycle3();
    const auto r = search_min_forcing(c3, 3);
    REQUIRE(r.found());
    CHECK(r.value->part_size() == 2);
    CHECK(forces_exhaustive(*r.value, c3).forces);
    CHECK(oracle_forces(*r.value, c3));

    OrientedGraph edge(2);
    edge.add_edge(0, 1);
    const auto e = search_min_forcing(edge, 2);
    REQUIRE(e.found());
    CHECK(e.value->part_size() == 1);

    const auto tt = Tournament::transitive(3).graph();
    const auto t = search_min_forcing(tt, 3);
    REQUIRE(t.found());
    CHECK(oracle_forces(*t.value, tt));
    if (t.value->part_size() > 1) {
        // No smaller F forces it.
        const int m = t.value->part_size() - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * m)); ++mask) {
            KPartiteTournament f(2, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    ((mask >> (a * m + b)) & 1U) ? f.orient(f.vertex(0, a), f.vertex(1, b)) : f.orient(f.vertex(1, b), f.vertex(0, a));
            CHECK_FALSE(oracle_forces(f, tt));
        }
    }
    CHECK_THROWS_AS(search_min_forcing(oracle::qr7().graph(), 2), std::invalid_argument);
}
