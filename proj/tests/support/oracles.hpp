#pragma once

// Brute-force reference implementations. They use only direct edge queries
// so they stay independent of the search code under test.

#include "tourn/digraph.hpp"
#include "tourn/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using tourn::OrientedGraph;
using tourn::Tournament;

inline int pairs(int n) { return n * (n - 1) / 2; }

// All 2^{C(n,2)} labeled tournaments; bit b orients pair b as i -> j (i < j).
inline std::vector<Tournament> all_tournaments(int n)
{
    std::vector<Tournament> out;
    const std::uint64_t count = std::uint64_t{1} << pairs(n);
    for (std::uint64_t code = 0; code < count; ++code) {
        OrientedGraph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                ((code >> bit) & 1U) ? g.add_edge(i, j) : g.add_edge(j, i);
        out.emplace_back(std::move(g));
    }
    return out;
}

// All 3^{C(n,2)} oriented graphs (absent, forward, backward per pair).
inline std::vector<OrientedGraph> all_oriented_graphs(int n)
{
    std::vector<OrientedGraph> out;
    const int p = pairs(n);
    std::uint64_t count = 1;
    for (int i = 0; i < p; ++i) count *= 3;
    for (std::uint64_t code = 0; code < count; ++code) {
        OrientedGraph g(n);
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto s = c % 3;
                c /= 3;
                if (s == 1) g.add_edge(i, j);
                if (s == 2) g.add_edge(j, i);
            }
        out.push_back(std::move(g));
    }
    return out;
}

inline Tournament random_tournament(int n, std::uint64_t seed)
{
    tourn::CounterRng rng(seed, 77);
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            rng.coin() ? g.add_edge(i, j) : g.add_edge(j, i);
    return Tournament(std::move(g));
}

inline OrientedGraph random_oriented(int n, std::uint64_t seed)
{
    tourn::CounterRng rng(seed, 78);
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto s = rng.uniform(3);
            if (s == 1) g.add_edge(i, j);
            if (s == 2) g.add_edge(j, i);
        }
    return g;
}

inline OrientedGraph cycle3()
{
    OrientedGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    return g;
}

// i -> j iff j - i is a nonzero square mod 7.
inline Tournament qr7()
{
    OrientedGraph g(7);
    for (int i = 0; i < 7; ++i)
        for (int d : {1, 2, 4}) g.add_edge(i, (i + d) % 7);
    return Tournament(std::move(g));
}

// Injective maps checked edge by edge at the leaves.
inline std::uint64_t embeddings(const OrientedGraph& host, const OrientedGraph& pattern)
{
    const int n = host.order();
    const int h = pattern.order();
    if (h > n) return 0;
    std::vector<int> map(static_cast<std::size_t>(h));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::uint64_t count = 0;
    const auto edges = pattern.edges();
    std::function<void(int)> rec = [&](int p) {
        if (p == h) {
            for (const auto& e : edges)
                if (!host.has_edge(map[static_cast<std::size_t>(e.from)], map[static_cast<std::size_t>(e.to)])) return;
            ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            map[static_cast<std::size_t>(p)] = v;
            rec(p + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0);
    return count;
}

// Acyclic iff repeated source removal empties the set.
inline bool acyclic(const OrientedGraph& g, std::vector<int> vs)
{
    while (!vs.empty()) {
        auto it = std::find_if(vs.begin(), vs.end(), [&](int v) {
            return std::none_of(vs.begin(), vs.end(), [&](int u) { return g.has_edge(u, v); });
        });
        if (it == vs.end()) return false;
        vs.erase(it);
    }
    return true;
}

inline bool proper(const OrientedGraph& g, const std::vector<int>& colour, int k)
{
    for (int c = 1; c <= k; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < g.order(); ++v)
            if (colour[static_cast<std::size_t>(v)] == c) cls.push_back(v);
        if (!acyclic(g, cls)) return false;
    }
    return true;
}

// k^n assignments.
inline bool k_colorable(const OrientedGraph& g, int k)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 1);
    while (true) {
        if (proper(g, colour, k)) return true;
        int i = 0;
        while (i < n && colour[static_cast<std::size_t>(i)] == k) colour[static_cast<std::size_t>(i++)] = 1;
        if (i == n) return false;
        ++colour[static_cast<std::size_t>(i)];
    }
}

inline int chromatic(const OrientedGraph& g)
{
    int k = 1;
    while (!k_colorable(g, k)) ++k;
    return k;
}

inline bool transitive_sequence(const Tournament& t, const std::vector<int>& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (!t.beats(seq[i], seq[j])) return false;
    return std::set<int>(seq.begin(), seq.end()).size() == seq.size();
}

// Smallest reversal set making t free of h, by subsets of increasing size.
inline int distance(const Tournament& t, const OrientedGraph& h, int max_size)
{
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i < t.order(); ++i)
        for (int j = i + 1; j < t.order(); ++j) ps.emplace_back(i, j);
    for (int size = 0; size <= max_size; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        if (size > static_cast<int>(ps.size())) break;
        while (true) {
            OrientedGraph g = t.graph();
            for (int p : pick) {
                const auto [i, j] = ps[static_cast<std::size_t>(p)];
                g.has_edge(i, j) ? g.orient(j, i) : g.orient(i, j);
            }
            if (embeddings(g, h) == 0) return size;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(ps.size()) - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return -1;
}

inline bool ap_free(const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t k = 0; k < s.size(); ++k)
                if (i != j && j != k && i != k && s[i] + s[k] == 2 * s[j]) return false;
    return true;
}

// Exact maximum 3-AP-free subset of 1..n by backtracking.
inline int max_ap_free(int n)
{
    int best = 0;
    std::vector<int> chosen;
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    std::function<void(int)> rec = [&](int x) {
        if (static_cast<int>(chosen.size()) + (n - x + 1) <= best) return;
        if (x > n) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        bool ok = true;
        for (int a : chosen)
            if (2 * a - x >= 1 && in[static_cast<std::size_t>(2 * a - x)]) ok = false;
        if (ok) {
            chosen.push_back(x);
            in[static_cast<std::size_t>(x)] = true;
            rec(x + 1);
            in[static_cast<std::size_t>(x)] = false;
            chosen.pop_back();
        }
        rec(x + 1);
    };
    rec(1);
    return best;
}

// Number of index choices r1<..<rk, c1<..<ck with a[r_i][c_j] = b[i][j].
template <typename At>
std::uint64_t matrix_copies(int n, int k, At a, const std::vector<std::vector<int>>& b, bool avoid_diagonal)
{
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            gen(v + 1);
            cur.pop_back();
        }
    };
    gen(0);
    std::uint64_t count = 0;
    for (const auto& rows : subsets)
        for (const auto& cols : subsets) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j) {
                    if (avoid_diagonal && rows[static_cast<std::size_t>(i)] == cols[static_cast<std::size_t>(j)]) ok = false;
                    else if (a(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) != b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ok = false;
                }
            if (ok) ++count;
        }
    return count;
}

} // namespace oracle
