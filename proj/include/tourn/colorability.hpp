#pragma once

// Acyclic colorings of oriented graphs and the easy/hard classifier.

#include "tourn/budget.hpp"
#include "tourn/digraph.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tourn {

// coloring[v] in 1..k; every color class induces an acyclic subdigraph.
using Coloring = std::vector<int>;

bool is_proper_coloring(const OrientedGraph& g, const Coloring& coloring, int k);

// Backtracking over vertices in index order with incremental cycle checks.
// Vertex 1 always gets color 1. Throws std::invalid_argument if k < 1.
Search<Coloring> acyclic_k_coloring(const OrientedGraph& g, int k, std::uint64_t budget = default_node_budget);

// Cyclic triangles {a, b, c} with a < b < c.
std::vector<std::array<int, 3>> cyclic_triangles(const Tournament& t);

// 2-coloring with no monochromatic cyclic triangle, via NAE constraints.
// Valid for tournaments only: a tournament is transitive iff it has no
// cyclic triangle. Throws std::invalid_argument if g is not complete.
Search<Coloring> nae_two_coloring(const OrientedGraph& g, std::uint64_t budget = default_node_budget);
inline Search<Coloring> nae_two_coloring(const Tournament& t, std::uint64_t budget = default_node_budget)
{
    return nae_two_coloring(t.graph(), budget);
}

// Least k with a proper k-coloring, returned with a witness.
struct ChromaticResult {
    Outcome outcome = Outcome::found;  // found or exhausted
    int k = 0;
    Coloring coloring;
    std::uint64_t nodes = 0;
};
ChromaticResult chromatic_number(const OrientedGraph& g, std::uint64_t budget = default_node_budget);

enum class Difficulty { easy, hard };
const char* to_string(Difficulty d);

// easy iff g has an acyclic 2-coloring.
Search<Difficulty> classify(const OrientedGraph& g, std::uint64_t budget = default_node_budget);

// First tournament in (n, code) order that is not 2-colorable, searching
// n = 1..max_n and codes as in Tournament::from_code.
std::optional<Tournament> find_minimal_non_2_colorable(int max_n);

} // namespace tourn
