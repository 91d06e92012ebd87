#pragma once

// The 7-vertex gadget, the triangle-free-cut reduction to tournament
// 2-colorability, and the k -> k-1 colorability lift.

#include "tourn/budget.hpp"
#include "tourn/colorability.hpp"
#include "tourn/digraph.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tourn {

// Simple undirected graph. Text format: line 1 n, then "i j" lines (1-based).
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[idx(u, v)]; }
    // Throws std::invalid_argument on loops, out-of-range or repeated edges.
    void add_edge(int u, int v);
    std::vector<std::pair<int, int>> edges() const;

    // Triangles a < b < c in lexicographic order.
    std::vector<std::array<int, 3>> triangles() const;

    // Graph whose edges are the set bits of code over pairs (0,1),(0,2),..,(n-2,n-1).
    static UndirectedGraph from_code(int n, std::uint64_t code);

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v); }
    int n_ = 0;
    std::vector<bool> adj_;
};

UndirectedGraph read_undirected_graph(std::istream& in);
void write_undirected_graph(std::ostream& out, const UndirectedGraph& g);

namespace gadget_vertex {
inline constexpr int u = 0, v = 1, w = 2, a = 3, b = 4, c = 5, d = 6;
}

inline constexpr std::array<const char*, 7> gadget_names{"u", "v", "w", "a", "b", "c", "d"};

// The fixed gadget tournament on u,v,w,a,b,c,d (ids 0..6).
Tournament gadget();

struct GadgetReport {
    bool transcription_ok = false;  // cyclic triples and neighbourhood claims
    std::vector<std::string> transcription_failures;
    int proper_count = 0;           // proper 2-colorings among the 128
    bool item1 = false;             // {u,v,w}/{a,b,c,d} proper and separates N-(u) u N+(v) from u
    bool item2 = false;             // every proper coloring has c(u) = c(v)
    std::vector<unsigned> separating;  // proper colorings with c(u) != c(v); bit i = colour of vertex i
    std::vector<unsigned> proper;      // all proper colorings
};

// Colorings are bitmasks over the 7 gadget vertices.
bool gadget_coloring_proper(const Tournament& g, unsigned mask);
GadgetReport verify_gadget();

struct VertexRole {
    enum class Kind { y, z, k } kind = Kind::y;
    int index = 0;     // y: vertex of G; z, k: triangle t
    int position = 0;  // z, k: 0..2 for the triangle's i < j < l
    int internal = 0;  // k: gadget vertex w,a,b,c,d as 0..4
};

struct ReductionOutput {
    int n = 0;
    std::vector<std::array<int, 3>> triangles;
    Tournament t;
    std::vector<VertexRole> roles;

    int y(int i) const { return i; }
    int z(int t, int pos) const { return n + 3 * t + pos; }
    int k(int t, int pos, int internal) const
    {
        return n + 3 * static_cast<int>(triangles.size()) + 15 * t + 5 * pos + internal;
    }
    // T(G) vertex playing gadget vertex g in copy H_t^pos.
    int gadget_copy(int t, int pos, int g) const;
};

ReductionOutput reduce(const UndirectedGraph& g);

struct ReductionAudit {
    bool sizes = false;
    bool y_transitive = false;
    bool y_to_z = false;
    bool z_order = false;
    bool z_cyclic = false;
    bool k_order = false;     // K_s -> K_t for s < t
    bool k_inner = false;     // K_t^i -> K_t^j -> K_t^l and K_t^i -> K_t^l
    bool gadget_copies = false;
    bool defaults = false;    // remaining Y-K pairs point Y -> K, K-Z pairs K -> Z
    bool ok() const
    {
        return sizes && y_transitive && y_to_z && z_order && z_cyclic && k_order && k_inner && gadget_copies && defaults;
    }
};

// Role-respecting scan of every pair, independent of the assembly code.
ReductionAudit audit_reduction(const UndirectedGraph& g, const ReductionOutput& out);

// 2-colouring (values 0/1) of V(G) with no monochromatic triangle.
Search<std::vector<int>> has_triangle_free_cut(const UndirectedGraph& g, std::uint64_t budget = default_node_budget);
bool is_triangle_free_cut(const UndirectedGraph& g, const std::vector<int>& cut);

struct ReductionCheck {
    bool decided = false;         // false when a solver budget ran out
    bool cut_exists = false;
    bool colorable = false;
    bool agree = false;
    bool lifted_valid = false;    // lifted cut is triangle-free (true when not colorable)
    std::vector<int> cut;
    std::vector<int> lifted;      // phi(x_i) = c(y_i) - 1
    std::uint64_t nodes = 0;
};

ReductionCheck check_reduction(const UndirectedGraph& g, std::uint64_t budget = default_node_budget);

// Two copies T1, T2 of T plus z with T1 -> T2 -> z -> T1; T1 = 0..n-1,
// T2 = n..2n-1, z = 2n. Throws std::invalid_argument if k < 2.
Tournament lift(const Tournament& t, int k);

// One line per vertex: "id y i", "id z t pos" or "id k t pos name" (1-based).
void write_roles(std::ostream& out, const ReductionOutput& r);

} // namespace tourn
