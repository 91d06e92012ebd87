#pragma once

// Hard instances for non-2-colorable patterns: Behrend sets, Ruzsa-Szemeredi
// style graphs, the blow-up tournament and its audits.

#include "tourn/core.hpp"
#include "tourn/digraph.hpp"
#include "tourn/forcing.hpp"
#include "tourn/orderedhom.hpp"
#include "tourn/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace tourn {

struct BehrendSet {
    int n_max = 0;
    std::vector<int> members;  // increasing, inside 1..n_max
    int base = 0;              // digit base d
    int dimension = 0;
    int digit_bound = 0;       // digits lie in 0..digit_bound
    long long radius = -1;     // squared norm; -1 when the whole cube is used
};

// True iff no a < b < c in s with a + c = 2b.
bool is_ap_free(const std::vector<int>& s);

// Sphere construction maximizing size over (base, dimension, radius); with
// digit bound 1 the whole 0/1 cube is 3-AP-free and is used as is.
// Throws std::invalid_argument if n_max < 1.
BehrendSet behrend(int n_max);

struct RSGraph {
    int k = 0;
    int n_max = 0;                    // part size
    std::vector<int> cycle;           // part indices i_1..i_l (0-based)
    std::vector<int> differences;     // Behrend set used for the clique steps
    std::vector<std::vector<int>> cliques;  // cliques[c][i] is the vertex in part i
    std::vector<std::vector<bool>> adj;
    Rational delta;                   // |cliques| / |V|^2

    int vertices() const { return k * n_max; }
    int vertex(int part, int value) const { return part * n_max + value; }
    int part_of(int v) const { return v / n_max; }
    bool adjacent(int u, int v) const
    {
        return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
};

// Parts are intervals of n_max values; for each Behrend difference d and
// start a, the clique has value a + i*d in part i. Throws
// std::invalid_argument unless k >= 3, n_max >= 1, 3 <= |cycle| <= k and
// cycle indices are distinct and inside 0..k-1.
RSGraph rs_graph(int k, const std::vector<int>& cycle, int n_max);

struct RSAudit {
    bool independent_parts = false;
    bool transversal = false;
    bool edge_disjoint = false;
    bool union_exact = false;
    bool density_ok = false;         // |cliques| >= delta |V|^2
    std::uint64_t patterned_cycles = 0;
    std::uint64_t cycle_limit = 0;   // |V|^2
    bool cycle_bound = false;
};

RSAudit audit_rs_graph(const RSGraph& r);

// Tuples (x_1..x_l), x_j in part i_j, with x_j ~ x_{j+1} cyclically.
std::uint64_t count_patterned_cycles(const RSGraph& r);

struct BlowupOptions {
    int n = 0;           // requested size; rounded down to a multiple of |V(R)|
    int n_max = 3;       // part size of R
    std::uint64_t seed = 0;
    // Plant h on every block tuple of F after the coins (see plant_block_copies).
    bool planted = false;
};

struct BlowupTournament {
    OrientedGraph h;
    CoreMember k_member;              // K(H) with its witness labeling
    std::vector<int> k_labels;        // a_1 < ... < a_k
    OphMap g;                         // backedge graph of the witness -> K
    Coloring coloring;                // H_i = vertices with colour i
    OrientedGraph d;                  // (i,j) for i < j with {a_i,a_j} not in E(K)
    std::vector<int> cycle;           // K positions i_1..i_l (0-based)
    RSGraph r;
    KPartiteTournament f;
    int block = 0;                    // n / r
    int n_requested = 0;
    Tournament t;
    std::uint64_t seed = 0;
    bool planted = false;

    int order() const { return t.order(); }
    // First vertex of B(x); B(x) = [first, first + block).
    int block_start(int x) const { return x * block; }
    int base_of(int v) const { return v / block; }
    int part_of(int v) const { return r.part_of(base_of(v)); }
    bool cut_pair(int u, int v) const { return part_of(u) != part_of(v); }
};

// Throws std::invalid_argument if h is 2-colorable, if the block size
// n / |V(R)| is zero, or a stage fails; stage failures name the stage.
BlowupTournament blowup_tournament(const OrientedGraph& h, const BlowupOptions& options);

struct BlowupAudit {
    bool item1 = false;   // each B(X_i) transitive in index order
    bool item2 = false;   // non-edges of R oriented from the lower part to the higher part
    bool item3 = false;   // each clique carries F edge for edge
    bool k_nonedges = false;  // B(X_i) -> B(X_j) for every non-edge {a_i,a_j} of K, i < j
};

BlowupAudit audit_blowup(const BlowupTournament& b);

struct LocalizationReport {
    bool decided = false;          // false when the embedding budget ran out
    std::uint64_t embeddings = 0;
    std::uint64_t violations = 0;  // embeddings without a C-tuple whose base is an R-cycle
    std::uint64_t automorphisms = 0;
    std::uint64_t copies = 0;      // embeddings / |Aut(H)|
    std::uint64_t c_size = 0;      // |C|
    Rational c_limit;              // n^l / r
    bool c_bound = false;
    BigInt copy_limit;             // |C| n^(h-l)
    bool copy_bound = false;
};

std::uint64_t count_c_tuples(const BlowupTournament& b);

LocalizationReport audit_copy_localization(const BlowupTournament& b,
                                           std::uint64_t max_embeddings = 50'000'000);

struct FarnessReport {
    std::uint64_t family = 0;          // |family|
    std::vector<std::uint64_t> per_clique;
    std::uint64_t reversed_cut = 0;    // cut edges where mutated differs from T
    std::uint64_t reversed_cluster = 0;
    long long certified = 0;           // family - reversed_cut
    std::uint64_t surviving = 0;       // family copies fully present in mutated
    bool disjoint = false;             // family pairwise cut-edge-disjoint
    bool valid = false;                // every family member is an embedding in T''
    std::vector<Embedding> copies;     // family, in T vertex ids
};

// Throws std::invalid_argument if mutated has a different order.
FarnessReport farness_certificate(const BlowupTournament& b, const Tournament& mutated);

// key: value lines describing K, the cycle, R, the block map and F.
void write_provenance(std::ostream& out, const BlowupTournament& b);

} // namespace tourn
