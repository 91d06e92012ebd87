#pragma once

// Densities, embeddings, edit distance to H-freeness and transitive extraction.

#include "tourn/budget.hpp"
#include "tourn/digraph.hpp"
#include "tourn/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tourn {

struct PairStats {
    std::uint64_t edges_xy = 0;  // edges from X to Y
    Rational density;            // edges_xy / (|X||Y|)
    bool x_dominates = false;    // density >= 1/2
    Rational weight;             // |X||Y| / n^2
};

// Throws std::invalid_argument if X or Y is empty, out of range, has
// repeated vertices, or X and Y intersect.
PairStats density(const OrientedGraph& g, std::span<const int> x, std::span<const int> y);
inline PairStats density(const Tournament& t, std::span<const int> x, std::span<const int> y)
{
    return density(t.graph(), x, y);
}

// embedding[p] is the host vertex of pattern vertex p.
using Embedding = std::vector<int>;

bool is_embedding(const OrientedGraph& host, const OrientedGraph& pattern, std::span<const int> map);

// Calls visit on every embedding in a fixed order; stops early when visit
// returns false. Returns false iff stopped early.
bool for_each_embedding(const OrientedGraph& host, const OrientedGraph& pattern,
                        const std::function<bool(const Embedding&)>& visit);

std::uint64_t count_embeddings(const OrientedGraph& host, const OrientedGraph& pattern);
inline std::uint64_t count_embeddings(const Tournament& host, const OrientedGraph& pattern)
{
    return count_embeddings(host.graph(), pattern);
}

std::optional<Embedding> find_embedding(const OrientedGraph& host, const OrientedGraph& pattern);

struct CopyCount {
    std::uint64_t labeled = 0;       // embeddings
    std::uint64_t automorphisms = 0; // |Aut(pattern)|
    std::uint64_t unlabeled = 0;     // labeled / automorphisms
};

CopyCount count_copies(const OrientedGraph& host, const OrientedGraph& pattern);

enum class DistanceStatus {
    exact,       // distance is the minimum
    infeasible,  // no tournament on these vertices is H-free
    exhausted,   // budget ran out; lower_bound <= minimum <= distance (if has_upper)
};

struct DistanceResult {
    DistanceStatus status = DistanceStatus::exact;
    std::uint64_t distance = 0;      // best reversal count found
    bool has_upper = false;          // a valid reversal set was found
    std::uint64_t lower_bound = 0;   // proven lower bound
    std::vector<Edge> reversals;     // edges of T reversed by the best solution
    std::uint64_t nodes = 0;
};

// Minimum number of edge reversals making T free of H.
DistanceResult distance_to_h_free(const Tournament& t, const OrientedGraph& h,
                                  std::uint64_t budget = default_node_budget);

// A sequence v1..vk with vi -> vj for all i < j, chosen inside `within`
// (all vertices when empty). Greedy max-out-degree recursion first, then
// exhaustive search. Throws std::invalid_argument if k < 1.
Search<std::vector<int>> transitive_subtournament(const Tournament& t, int k, std::span<const int> within = {},
                                                  std::uint64_t budget = default_node_budget);

} // namespace tourn
