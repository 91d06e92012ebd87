#include "tourn/regularity.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace tourn;

namespace {

BinaryMatrix random_matrix(int n, std::uint64_t seed)
{
    CounterRng rng(seed, 11);
    BinaryMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, rng.coin());
    return a;
}

Partition random_partition(int n, int parts, std::uint64_t seed)
{
    CounterRng rng(seed, 12);
    Partition p(static_cast<std::size_t>(parts));
    for (int v = 0; v < n; ++v) p[v < parts ? static_cast<std::size_t>(v) : rng.uniform(static_cast<std::uint64_t>(parts))].push_back(v);
    for (auto& part : p) std::sort(part.begin(), part.end());
    return p;
}

// Bad weight recomputed entry by entry.
Rational recount_bad(const BinaryMatrix& a, const Partition& r, const Partition& c, const Rational& delta)
{
    const long long n = a.size();
    Rational bad = 0;
    for (const auto& rp : r)
        for (const auto& cp : c) {
            long long ones = 0;
            for (int x : rp)
                for (int y : cp) ones += a.at(x, y);
            const long long cells = static_cast<long long>(rp.size() * cp.size());
            const Rational d(ones, cells);
            if (!(d <= delta || d >= 1 - delta)) bad += Rational(cells, n * n);
        }
    return bad;
}

Partition singletons(int n)
{
    Partition p;
    for (int v = 0; v < n; ++v) p.push_back({v});
    return p;
}

Partition whole(int n)
{
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return {all};
}

bool contained_in_one(const std::vector<int>& part, const Partition& coarse)
{
    return std::any_of(coarse.begin(), coarse.end(), [&](const std::vector<int>& c) {
        return std::all_of(part.begin(), part.end(), [&](int v) { return std::count(c.begin(), c.end(), v) == 1; });
    });
}

} // namespace

TEST_CASE("matrix format and adjacency")
{
    const auto t = oracle::random_tournament(6, 2);
    const auto a = BinaryMatrix::adjacency(t);
    for (int i = 0; i < 6; ++i) {
        CHECK_FALSE(a.at(i, i));
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(a.at(i, j) + a.at(j, i) == 1);
    }
    std::stringstream s;
    write_matrix(s, a);
    CHECK(read_matrix(s) == a);
    std::stringstream bad("2\n01\n2x\n");
    CHECK_THROWS(read_matrix(bad));
}

TEST_CASE("bipartition audits")
{
    const Rational delta(1, 4);
    const auto a = random_matrix(8, 1);
    const auto single = audit_bipartition(a, singletons(8), singletons(8), delta);
    CHECK(single.bad_weight == 0);
    CHECK(single.homogeneous);
    CHECK(single.total_weight == 1);
    BinaryMatrix ones(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) ones.set(i, j, true);
    CHECK(audit_bipartition(ones, random_partition(5, 2, 1), random_partition(5, 3, 2), Rational(1, 100)).homogeneous);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto m = random_matrix(20, s);
        const auto r = random_partition(20, 4, s);
        const auto c = random_partition(20, 4, s + 50);
        const auto au = audit_bipartition(m, r, c, delta);
        CHECK(au.bad_weight == recount_bad(m, r, c, delta));
        CHECK(au.total_weight == 1);
        CHECK(au.blocks.size() == 16);
        // Monotone in delta.
        if (au.homogeneous) CHECK(audit_bipartition(m, r, c, Rational(1, 3)).homogeneous);
    }
    CHECK_THROWS_AS(audit_bipartition(a, singletons(8), singletons(8), Rational(1, 2)), std::invalid_argument);
    Partition broken = singletons(8);
    broken.pop_back();
    CHECK_THROWS_AS(audit_bipartition(a, broken, singletons(8), delta), std::invalid_argument);
}

TEST_CASE("matrix copy counting")
{
    const auto a = random_matrix(6, 4);
    BinaryMatrix one(1);
    one.set(0, 0, true);
    CHECK(count_matrix_copies(a, one) == a.ones());
    CHECK(count_matrix_copies(a, a) >= 1);
    for (int code = 0; code < 16; ++code) {
        BinaryMatrix b(2);
        std::vector<std::vector<int>> bv(2, std::vector<int>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const bool bit = (code >> (2 * i + j)) & 1;
                b.set(i, j, bit);
                bv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bit;
            }
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto m = random_matrix(6, s + 100);
            const auto at = [&](int r, int c) { return static_cast<int>(m.at(r, c)); };
            CHECK(count_matrix_copies(m, b) == oracle::matrix_copies(6, 2, at, bv, false));
            CHECK(count_matrix_copies(m, b, true) == oracle::matrix_copies(6, 2, at, bv, true));
            const auto w = find_matrix_copy(m, b);
            CHECK(w.has_value() == (count_matrix_copies(m, b) > 0));
        }
    }
}

TEST_CASE("diagonal-avoiding copies correspond to copies of F")
{
    for (int n = 4; n <= 8; ++n)
        for (std::uint64_t s = 0; s < 6; ++s) {
            const auto t = oracle::random_tournament(n, s * 13 + static_cast<std::uint64_t>(n));
            const auto a = BinaryMatrix::adjacency(t);
            CounterRng rng(s, 4);
            KPartiteTournament f(2, 2);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    rng.coin() ? f.orient(f.vertex(0, x), f.vertex(1, y)) : f.orient(f.vertex(1, y), f.vertex(0, x));
            // Sum over row and column relabelings of F.
            std::uint64_t total = 0;
            for (int sr = 0; sr < 2; ++sr)
                for (int sc = 0; sc < 2; ++sc) {
                    BinaryMatrix b(2);
                    for (int x = 0; x < 2; ++x)
                        for (int y = 0; y < 2; ++y)
                            b.set(x, y, f.has_edge(f.vertex(0, sr ? 1 - x : x), f.vertex(1, sc ? 1 - y : y)));
                    total += count_matrix_copies(a, b, true);
                }
            CHECK(total == oracle::embeddings(t.graph(), f.graph()));
            // Identity labeling: order-preserving row and column maps.
            const auto bf = BinaryMatrix::bipartite_adjacency(f);
            std::uint64_t ordered = 0;
            for (int r0 = 0; r0 < n; ++r0)
                for (int r1 = r0 + 1; r1 < n; ++r1)
                    for (int c0 = 0; c0 < n; ++c0)
                        for (int c1 = c0 + 1; c1 < n; ++c1) {
                            const int rs[2]{r0, r1}, cs[2]{c0, c1};
                            if (r0 == c0 || r0 == c1 || r1 == c0 || r1 == c1) continue;
                            bool ok = true;
                            for (int x = 0; x < 2; ++x)
                                for (int y = 0; y < 2; ++y)
                                    if (t.beats(rs[x], cs[y]) != f.has_edge(f.vertex(0, x), f.vertex(1, y))) ok = false;
                            ordered += ok;
                        }
            CHECK(count_matrix_copies(a, bf, true) == ordered);
        }
}

TEST_CASE("AFN partitioner branches are auditable")
{
    const Rational delta(1, 4);
    BinaryMatrix ones(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) ones.set(i, j, true);
    BinaryMatrix b2(2);
    const auto r1 = afn_partition(ones, b2, delta, 10);
    REQUIRE(r1.kind == AfnKind::partition);
    CHECK(r1.rows.size() == 1);
    CHECK(r1.audit.bad_weight == 0);

    const auto tr = BinaryMatrix::adjacency(Tournament::transitive(12));
    const auto r2 = afn_partition(tr, b2, delta, 12);
    REQUIRE(r2.kind == AfnKind::partition);
    CHECK(audit_bipartition(tr, r2.rows, r2.cols, delta).homogeneous);
    CHECK(recount_bad(tr, r2.rows, r2.cols, delta) <= delta);

    BinaryMatrix allone(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) allone.set(i, j, true);
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto m = random_matrix(30, s);
        for (int budget : {3, 30}) {
            const auto r = afn_partition(m, allone, delta, budget);
            CHECK(r.kind != AfnKind::inconclusive);
            if (r.kind == AfnKind::partition) {
                check_partition(r.rows, 30);
                check_partition(r.cols, 30);
                CHECK(recount_bad(m, r.rows, r.cols, delta) <= delta);
            } else {
                CHECK(r.copies == count_matrix_copies(m, allone));
                REQUIRE(r.witness);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) CHECK(m.at(r.witness->rows[static_cast<std::size_t>(i)], r.witness->cols[static_cast<std::size_t>(j)]));
            }
        }
    }
}

TEST_CASE("refinement to an equipartition")
{
    const auto s = refine_to_equipartition(7, whole(7), whole(7), whole(7), 7);
    CHECK(s.parts.size() == 7);
    for (const auto& p : s.parts) CHECK(p.size() == 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_partition(24, 3, seed);
        const auto c = random_partition(24, 3, seed + 30);
        const auto out = refine_to_equipartition(24, whole(24), r, c, 6);
        CHECK(out.parts.size() == 6);
        for (const auto& p : out.parts) CHECK(p.size() == 4);
        check_partition(out.parts, 24);
        CHECK(refines(out.parts, whole(24), 24));
        for (std::size_t z : out.leftover) CHECK(z < 3 * 3 * 4u);
    }
    // Non-divisible n and a nontrivial P.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Partition p{{0, 2, 4, 6, 8, 10, 12}, {1, 3, 5, 7, 9, 11, 13}};
        const auto r = random_partition(14, 2, seed);
        const auto c = random_partition(14, 3, seed + 9);
        const auto out = refine_to_equipartition(14, p, r, c, 4);
        CHECK(out.parts.size() == 4);
        CHECK(is_equipartition(out.parts));
        check_partition(out.parts, 14);
        CHECK(refines(out.parts, p, 14));
        for (const auto& part : out.parts) CHECK(contained_in_one(part, p));
    }
    CHECK_THROWS_AS(refine_to_equipartition(5, whole(5), whole(5), whole(5), 6), std::invalid_argument);
}

TEST_CASE("strong decomposition is audited from scratch")
{
    KPartiteTournament f(2, 1);
    f.orient(f.vertex(0, 0), f.vertex(1, 0));
    const Rational delta(1, 4);
    const auto tr = Tournament::transitive(20);
    const auto d = strong_decomposition(tr, f, delta);
    if (d.kind == DecompositionKind::decomposition) {
        const auto a = audit_decomposition(tr, d, delta);
        CHECK(a.item1);
        CHECK(a.item2);
        CHECK(a.w_inside_q);
        CHECK(a.q_equipartition);
    } else {
        CHECK(d.kind == DecompositionKind::copies);
    }

    KPartiteTournament g(2, 2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) g.orient(g.vertex(0, x), g.vertex(1, y));
    const auto t = oracle::random_tournament(60, 1);
    DecompositionOptions opt;
    opt.seed = 3;
    const auto r = strong_decomposition(t, g, delta, opt);
    CHECK(r.kind != DecompositionKind::inconclusive);
    if (r.kind == DecompositionKind::decomposition) {
        const auto a = audit_decomposition(t, r, delta);
        CHECK(a.item1);
        CHECK(a.item2);
        CHECK(a.w_inside_q);
        CHECK(a.q_equipartition);
        CHECK(audit_equipartition(t, r.q_parts, delta).equipartition);
        CHECK(refines(r.fine_parts, r.q_parts, 60));
    } else {
        CHECK(r.copies > 0);
    }
    const auto again = strong_decomposition(t, g, delta, opt);
    CHECK(again.representatives == r.representatives);
    CHECK(again.w == r.w);
    CHECK_THROWS_AS(strong_decomposition(t, g, Rational(1, 2)), std::invalid_argument);
}
