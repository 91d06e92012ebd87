#pragma once

#include "tourn/bits.hpp"
#include "tourn/rng.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tourn {

// Directed edge from -> to (0-based vertex indices).
struct Edge {
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Digraph with at most one edge per vertex pair and no loops. Vertex order is
// meaningful: several constructions read it as a labeling.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int n);

    // Throws std::invalid_argument naming the offending edge on a loop,
    // an out-of-range endpoint, a duplicate, or an antiparallel pair.
    static OrientedGraph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return out_.test(static_cast<std::size_t>(u), static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

    void add_edge(int u, int v);
    // Sets u -> v, replacing v -> u if present.
    void orient(int u, int v);
    void remove_pair(int u, int v);

    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    bool is_complete() const;

    int out_degree(int u) const { return static_cast<int>(out_.row_count(static_cast<std::size_t>(u))); }
    int in_degree(int u) const { return static_cast<int>(in_.row_count(static_cast<std::size_t>(u))); }
    std::span<const Word> out_row(int u) const { return out_.row(static_cast<std::size_t>(u)); }
    std::span<const Word> in_row(int u) const { return in_.row(static_cast<std::size_t>(u)); }

    // Vertex i of the result is vertices[i] of this graph.
    OrientedGraph induced(std::span<const int> vertices) const;

    // Image of this graph under old vertex v -> perm[v].
    OrientedGraph relabeled(std::span<const int> perm) const;

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    BitMatrix out_;
    BitMatrix in_;
};

// Complete orientation: exactly one direction per vertex pair.
class Tournament {
public:
    Tournament() = default;
    // Throws std::invalid_argument if some pair is unoriented.
    explicit Tournament(OrientedGraph graph);

    // i -> j for all i < j.
    static Tournament transitive(int n);
    static Tournament random(int n, CounterRng& rng);
    // Pairs (i,j), i < j, in lexicographic order; bit set means i -> j.
    static Tournament from_code(int n, std::uint64_t code);
    // Cyclic triangle 0 -> 1 -> 2 -> 0.
    static Tournament cyclic_triangle();

    int order() const { return graph_.order(); }
    bool beats(int u, int v) const { return graph_.has_edge(u, v); }
    void orient(int u, int v) { graph_.orient(u, v); }
    void reverse(int u, int v);

    const OrientedGraph& graph() const { return graph_; }
    std::span<const Word> out_row(int u) const { return graph_.out_row(u); }
    std::span<const Word> in_row(int u) const { return graph_.in_row(u); }
    int out_degree(int u) const { return graph_.out_degree(u); }

    Tournament induced(std::span<const int> vertices) const { return Tournament(graph_.induced(vertices)); }

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    OrientedGraph graph_;
};

// True iff the induced subdigraph on `vertices` has no directed cycle.
bool is_acyclic(const OrientedGraph& g, std::span<const int> vertices);

// Topological order of the induced subdigraph, taking the smallest available
// vertex first; empty when `vertices` contains a cycle and is nonempty.
std::vector<int> topological_order(const OrientedGraph& g, std::span<const int> vertices);

} // namespace tourn
