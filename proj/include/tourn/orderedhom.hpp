#pragma once

// Order-preserving homomorphisms between labeled graphs, ordered cores,
// the family of cores over all labelings of an oriented graph, and K(H).

#include "tourn/bits.hpp"
#include "tourn/budget.hpp"
#include "tourn/digraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tourn {

// Undirected graph on a set of distinct positive labels; the natural order
// of the labels is part of the structure. Internally vertices are positions
// 0..size-1 in increasing label order.
class LabeledGraph {
public:
    LabeledGraph() = default;
    // Throws std::invalid_argument on repeated or non-positive labels, loops,
    // duplicate edges or endpoints that are not labels.
    LabeledGraph(std::vector<int> labels, std::span<const std::pair<int, int>> label_edges);

    // Labels 1..n, no edges.
    static LabeledGraph edgeless(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int pos) const { return labels_[static_cast<std::size_t>(pos)]; }
    // Position of a label, or -1.
    int position(int label) const;

    bool adjacent(int i, int j) const { return adj_.test(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
    void add_edge(int i, int j);
    std::size_t edge_count() const;

    // Edges as label pairs (a < b), lexicographic.
    std::vector<std::pair<int, int>> edges() const;
    // Edges as position pairs (i < j), lexicographic; equal for two graphs
    // iff they are order-isomorphic.
    std::vector<std::pair<int, int>> rank_edges() const;

    // Subgraph induced on the given positions, keeping labels.
    LabeledGraph induced(std::span<const int> positions) const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b)
    {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<int> labels_;
    BitMatrix adj_;
};

bool order_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

std::string describe(const LabeledGraph& g);
void write_labeled_graph(std::ostream& out, const LabeledGraph& g);
// "vertices: <labels>" then "i j" lines. Throws ParseError.
LabeledGraph read_labeled_graph(std::istream& in);

// Map from source labels to target labels.
struct OphMap {
    std::vector<int> source;  // labels of the source graph, increasing
    std::vector<int> image;   // image[i] is the label assigned to source[i]

    int operator()(int label) const;
};

bool is_oph(const LabeledGraph& from, const LabeledGraph& to, const OphMap& f);

// g after f. Throws std::invalid_argument if the label sets do not chain.
OphMap compose(const OphMap& f, const OphMap& g);

OphMap identity_map(const LabeledGraph& g);

// Backtracking in increasing label order; each image is at least the
// previous image.
Search<OphMap> find_oph(const LabeledGraph& from, const LabeledGraph& to,
                        std::uint64_t budget = default_node_budget);

// {i,j} is an edge iff i < j and the vertex labeled j points to the vertex
// labeled i. labeling[v] is the label of vertex v and must be a bijection
// onto 1..h; throws std::invalid_argument otherwise.
LabeledGraph backedge_graph(const OrientedGraph& h, std::span<const int> labeling);

struct CoreResult {
    LabeledGraph core;
    OphMap retraction;  // order-preserving homomorphism from G onto core
};

// Smallest induced subgraph receiving an order-preserving homomorphism from
// g; ties go to the lexicographically least label set. An edgeless graph
// with at least one vertex has the single smallest label as its core.
Search<CoreResult> ordered_core(const LabeledGraph& g, std::uint64_t budget = default_node_budget);

// True iff g has no order-preserving homomorphism to a proper induced subgraph.
bool is_ordered_core(const LabeledGraph& g);

struct CoreMember {
    LabeledGraph core;
    std::vector<int> labeling;  // witness: labeling[v] of H whose backedge graph has this core
    LabeledGraph backedge;      // backedge graph of the witness labeling
};

struct CoreFamily {
    std::vector<CoreMember> members;  // pairwise not order-isomorphic, in order of discovery
    std::uint64_t labelings = 0;
    std::uint64_t distinct_backedge_graphs = 0;
};

// Sweeps all h! labelings in lexicographic order of the labeling vector.
// Throws std::runtime_error if a core search exhausts its budget.
CoreFamily core_family(const OrientedGraph& h, std::uint64_t budget = default_node_budget);

// Pairs (i, j), i < j, of members with homomorphisms both ways.
std::vector<std::pair<int, int>> antisymmetry_violations(const CoreFamily& family);

// Indices of the maximal members: no other member maps into them.
std::vector<int> maximal_members(const CoreFamily& family);

// A maximal member, ties broken by the lexicographically least edge list.
// Throws std::invalid_argument on an empty family.
int select_k_index(const CoreFamily& family);
inline const CoreMember& select_k(const CoreFamily& family)
{
    return family.members[static_cast<std::size_t>(select_k_index(family))];
}

// Odd cycle (labels, length >= 3) of a graph that is not bipartite; consecutive
// entries and last/first are adjacent. Throws std::invalid_argument if bipartite.
std::vector<int> odd_cycle_certificate(const LabeledGraph& g);

// Proper graph coloring number by exhaustive search (small graphs).
int graph_chromatic_number(const LabeledGraph& g);

} // namespace tourn
