#include "tourn/lowerbound.hpp"

#include "tourn/colorability.hpp"
#include "tourn/core.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace tourn;

namespace {

// Cyclic tuples by direct enumeration.
std::uint64_t brute_cycles(const RSGraph& r)
{
    const auto l = r.cycle.size();
    std::vector<int> x(l);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == l) {
            count += r.adjacent(x[l - 1], x[0]);
            return;
        }
        for (int a = 0; a < r.n_max; ++a) {
            x[j] = r.vertex(r.cycle[j], a);
            if (j > 0 && !r.adjacent(x[j - 1], x[j])) continue;
            rec(j + 1);
        }
    };
    rec(0);
    return count;
}

BlowupTournament qr7_blowup(bool planted)
{
    BlowupOptions o;
    o.n = 45;
    o.n_max = 5;
    o.seed = 1;
    o.planted = planted;
    return blowup_tournament(oracle::qr7().graph(), o);
}

} // namespace

TEST_CASE("Behrend sets are 3-AP-free and near the optimum")
{
    for (int n = 1; n <= 30; ++n) {
        const auto s = behrend(n);
        CHECK(is_ap_free(s.members));
        CHECK(oracle::ap_free(s.members));
        CHECK(std::is_sorted(s.members.begin(), s.members.end()));
        CHECK(s.members.front() >= 1);
        CHECK(s.members.back() <= n);
        CHECK(2 * static_cast<int>(s.members.size()) >= oracle::max_ap_free(n));
    }
    CHECK(behrend(1).members == std::vector<int>{1});
    CHECK_FALSE(is_ap_free({1, 2, 3}));
    CHECK(is_ap_free({1, 2, 4, 5}));
    CHECK_THROWS_AS(behrend(0), std::invalid_argument);
}

TEST_CASE("RS graphs pass their audits")
{
    for (int k = 3; k <= 5; ++k)
        for (int n_max : {1, 4, 7, 11}) {
            std::vector<int> cycle(static_cast<std::size_t>(k));
            std::iota(cycle.begin(), cycle.end(), 0);
            for (int len = 3; len <= k; ++len) {
                std::vector<int> c(cycle.begin(), cycle.begin() + len);
                std::reverse(c.begin() + 1, c.end());
                const auto r = rs_graph(k, c, n_max);
                const auto a = audit_rs_graph(r);
                CHECK(a.independent_parts);
                CHECK(a.transversal);
                CHECK(a.edge_disjoint);
                CHECK(a.union_exact);
                CHECK(a.density_ok);
                CHECK(a.cycle_bound);
                CHECK(a.patterned_cycles == brute_cycles(r));
                CHECK(count_patterned_cycles(r) == brute_cycles(r));
                CHECK(a.patterned_cycles >= r.cliques.size());
                CHECK(r.delta * r.vertices() * r.vertices() == static_cast<long long>(r.cliques.size()));
            }
        }
    CHECK_THROWS_AS(rs_graph(2, {0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rs_graph(3, {0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rs_graph(3, {0, 1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rs_graph(3, {0, 1, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rs_graph(3, {0, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("blow-up tournament structure")
{
    const auto b = qr7_blowup(false);
    CHECK(b.k_labels.size() == 3);
    CHECK(b.order() == 45);
    CHECK(b.block == 3);
    CHECK(b.r.cliques.size() >= 1);
    const auto a = audit_blowup(b);
    CHECK(a.item1);
    CHECK(a.item2);
    CHECK(a.item3);
    CHECK(a.k_nonedges);
    CHECK(is_proper_coloring(b.h, b.coloring, 3));
    // Same seed, same tournament.
    CHECK(qr7_blowup(false).t == b.t);

    std::stringstream s;
    write_provenance(s, b);
    CHECK(s.str().find("clique 1:") != std::string::npos);

    CHECK_THROWS_AS(blowup_tournament(Tournament::transitive(4).graph(), BlowupOptions{30, 3, 0, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(blowup_tournament(oracle::qr7().graph(), BlowupOptions{5, 3, 0, false}), std::invalid_argument);
}

TEST_CASE("copies of H localize onto R-cycles")
{
    const auto b = qr7_blowup(true);
    const auto rep = audit_copy_localization(b);
    REQUIRE(rep.decided);
    CHECK(rep.embeddings == count_embeddings(b.t, b.h));
    CHECK(rep.violations == 0);
    CHECK(rep.embeddings > 0);
    CHECK(rep.automorphisms == 3 * 7);
    CHECK(rep.copies * rep.automorphisms == rep.embeddings);
    CHECK(rep.c_size == count_c_tuples(b));
    CHECK(rep.c_bound);
    CHECK(rep.copy_bound);

    // One clique block: no copy of H at all.
    BlowupOptions o;
    o.n = 18;
    o.n_max = 3;
    const auto single = blowup_tournament(oracle::qr7().graph(), o);
    const auto rs = audit_copy_localization(single);
    CHECK(rs.decided);
    CHECK(rs.violations == 0);
}

TEST_CASE("farness certificate")
{
    const auto b = qr7_blowup(true);
    const auto base = farness_certificate(b, b.t);
    REQUIRE(base.family > 0);
    CHECK(base.valid);
    CHECK(base.disjoint);
    CHECK(base.reversed_cut == 0);
    CHECK(base.certified == static_cast<long long>(base.family));
    CHECK(base.surviving == base.family);
    std::uint64_t sum = 0;
    for (auto c : base.per_clique) sum += c;
    CHECK(sum == base.family);
    for (const auto& e : base.copies) CHECK(is_embedding(b.t.graph(), b.h, e));

    // Reversing one cut edge of a family member kills at most one member.
    const auto& copy = base.copies.front();
    bool done = false;
    for (const auto& e : b.h.edges()) {
        const int x = copy[static_cast<std::size_t>(e.from)], y = copy[static_cast<std::size_t>(e.to)];
        if (done || !b.cut_pair(x, y)) continue;
        Tournament m = b.t;
        m.reverse(x, y);
        const auto rep = farness_certificate(b, m);
        CHECK(rep.reversed_cut == 1);
        CHECK(rep.certified == static_cast<long long>(base.family) - 1);
        CHECK(rep.surviving + 1 == base.family);
        done = true;
    }
    CHECK(done);

    // Reversals inside parts leave the cut edges alone.
    Tournament m = b.t;
    int flips = 0;
    for (int u = 0; u < m.order(); ++u)
        for (int v = u + 1; v < m.order(); ++v)
            if (!b.cut_pair(u, v) && (u + v) % 3 == 0) {
                m.reverse(u, v);
                ++flips;
            }
    REQUIRE(flips > 0);
    const auto cl = farness_certificate(b, m);
    CHECK(cl.reversed_cut == 0);
    CHECK(cl.reversed_cluster == static_cast<std::uint64_t>(flips));
    // The family is rebuilt on the mutated clusters; no cut reversal means nothing is lost.
    CHECK(cl.certified == static_cast<long long>(cl.family));
    CHECK(cl.surviving == cl.family);
    CHECK(cl.disjoint);
    CHECK(cl.valid);
    CHECK_THROWS_AS(farness_certificate(b, Tournament::transitive(5)), std::invalid_argument);
}
