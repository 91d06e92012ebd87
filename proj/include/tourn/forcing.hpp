#pragma once

// k-partite forcing construction, tuple collections with pairwise agreement
// at most one, the per-completion certificate and exhaustive forcing checks.

#include "tourn/budget.hpp"
#include "tourn/colorability.hpp"
#include "tourn/core.hpp"
#include "tourn/digraph.hpp"
#include "tourn/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace tourn {

// Parts V_1..V_k of size m; vertex a of part i has id i*m + a (0-based).
// Only cross edges are present and every cross pair is oriented.
class KPartiteTournament {
public:
    KPartiteTournament() = default;
    KPartiteTournament(int k, int m);

    int parts() const { return k_; }
    int part_size() const { return m_; }
    int order() const { return k_ * m_; }
    int vertex(int part, int index) const { return part * m_ + index; }
    int part_of(int v) const { return v / m_; }
    int index_of(int v) const { return v % m_; }

    // Orients a cross pair; throws std::invalid_argument for inner pairs.
    void orient(int u, int v);
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    const OrientedGraph& graph() const { return g_; }

    // Throws std::invalid_argument if some cross pair is unoriented.
    void check_complete() const;

    // Inner pairs (u, v), u < v, in order of part then index.
    std::vector<Edge> inner_pairs() const;

    // The completion orienting inner pair i as u -> v iff bit i of code is set.
    Tournament completion(std::uint64_t code) const;
    bool is_completion(const Tournament& t) const;

    std::uint64_t coins_used = 0;  // random cross pairs consumed by build_forcing

    friend bool operator==(const KPartiteTournament& a, const KPartiteTournament& b)
    {
        return a.k_ == b.k_ && a.m_ == b.m_ && a.g_ == b.g_;
    }

private:
    int k_ = 0;
    int m_ = 0;
    OrientedGraph g_;
};

// "parts: m k" then lines "i.a j.b" (1-based) for each cross edge.
void write_kpartite(std::ostream& out, const KPartiteTournament& f);
KPartiteTournament read_kpartite(std::istream& in);

using Tuple = std::vector<int>;

// Greedy collection in lexicographic order over [t]^k (entries 0-based):
// a tuple is kept iff it agrees with every kept tuple in at most one entry.
// Throws std::invalid_argument if k < 2 or t < 1.
std::vector<Tuple> disjoint_tuples(int t, int k);

// Same greedy over [ranges[0]] x ... x [ranges[k-1]]; k >= 2, ranges >= 0.
std::vector<Tuple> disjoint_tuples(const std::vector<int>& ranges);

// True iff any two distinct tuples agree in at most one entry.
bool pairwise_agreement_ok(const std::vector<Tuple>& tuples);

// 2^{-h^2} / (8 h^4).
Rational forcing_gamma(int h);

// coloring[v] in 1..k with k = d.order(). For (i,j) in E(d), no edge of h
// may point from class j to class i. V_i -> V_j is forced for (i,j) in E(d);
// other cross pairs get seeded fair coins. Throws std::invalid_argument
// naming the violating vertex pair on invalid input.
KPartiteTournament build_forcing(const OrientedGraph& h, const Coloring& coloring, const OrientedGraph& d, int m,
                                 std::uint64_t seed);

enum class BlockRule {
    all_vertices,  // extract transitive blocks until none remains
    half_part,     // stop after floor(m / (2 h_i)) blocks per part
};

struct CompletionCertificate {
    std::vector<std::vector<std::vector<int>>> blocks;  // blocks[i][j]: transitive order inside part i
    std::vector<std::vector<int>> class_order;          // forward order of each colour class of h
    std::size_t tuples = 0;                             // size of the tuple collection scanned
    std::vector<Embedding> copies;                      // copies of h, pairwise cross-edge-disjoint
    Rational target;                                    // gamma(h) * m^2
};

// Throws std::invalid_argument if t is not a completion of f or the colouring
// does not have f.parts() nonempty acyclic classes.
CompletionCertificate certify_completion(const KPartiteTournament& f, const Tournament& t, const OrientedGraph& h,
                                         const Coloring& coloring, BlockRule rule = BlockRule::all_vertices);

// Orients the cross pairs of every tuple of consecutive index blocks
// (block p of part i is indices p*h_i .. p*h_i + h_i - 1, in class order) as
// a copy of h. Tuples agree in at most one coordinate, so the plants never
// collide. Returns the number of tuples planted.
std::size_t plant_block_copies(KPartiteTournament& f, const OrientedGraph& h, const Coloring& coloring);

// True iff no two copies share a cross edge of f.
bool cross_edge_disjoint(const KPartiteTournament& f, const OrientedGraph& h, const std::vector<Embedding>& copies);

inline constexpr int max_exhaustive_inner_pairs = 20;

struct ForcingCheck {
    bool decided = false;  // false when the completion count is too large
    bool forces = false;
    std::uint64_t completions = 0;
    std::optional<Tournament> counterexample;  // an H-free completion
};

ForcingCheck forces_exhaustive(const KPartiteTournament& f, const OrientedGraph& h,
                               int max_inner_pairs = max_exhaustive_inner_pairs);

// Bipartite F with the least part size m <= m_max forcing h, trying cross
// masks in increasing order (bit a*m+b set means V_1[a] -> V_2[b]). Nodes
// count completions examined.
Search<KPartiteTournament> search_min_forcing(const OrientedGraph& h, int m_max,
                                              std::uint64_t budget = default_node_budget);

} // namespace tourn
