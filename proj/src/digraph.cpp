#include "tourn/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tourn {

OrientedGraph::OrientedGraph(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    out_ = BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    in_ = BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
}

void OrientedGraph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n_));
}

OrientedGraph OrientedGraph::from_edges(int n, std::span<const Edge> edges)
{
    OrientedGraph g(n);
    for (const Edge& e : edges)
        g.add_edge(e.from, e.to);
    return g;
}

void OrientedGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    const std::string name = std::to_string(u + 1) + "->" + std::to_string(v + 1);
    if (u == v)
        throw std::invalid_argument("self-loop " + name);
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + name);
    if (has_edge(v, u))
        throw std::invalid_argument("edge " + name + " conflicts with its reverse");
    out_.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    in_.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
}

void OrientedGraph::remove_pair(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    out_.reset(su, sv);
    out_.reset(sv, su);
    in_.reset(su, sv);
    in_.reset(sv, su);
}

void OrientedGraph::orient(int u, int v)
{
    remove_pair(u, v);
    add_edge(u, v);
}

std::vector<Edge> OrientedGraph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v))
                out.push_back({u, v});
    return out;
}

std::size_t OrientedGraph::edge_count() const
{
    std::size_t total = 0;
    for (int u = 0; u < n_; ++u)
        total += out_.row_count(static_cast<std::size_t>(u));
    return total;
}

bool OrientedGraph::is_complete() const
{
    const auto n = static_cast<std::size_t>(n_);
    return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

OrientedGraph OrientedGraph::induced(std::span<const int> vertices) const
{
    const int k = static_cast<int>(vertices.size());
    OrientedGraph g(k);
    for (int i = 0; i < k; ++i) {
        check_vertex(vertices[i]);
        for (int j = 0; j < k; ++j)
            if (has_edge(vertices[i], vertices[j])) {
                g.out_.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                g.in_.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
            }
    }
    return g;
}

OrientedGraph OrientedGraph::relabeled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeling has wrong length");
    OrientedGraph g(n_);
    for (const Edge& e : edges())
        g.add_edge(perm[static_cast<std::size_t>(e.from)], perm[static_cast<std::size_t>(e.to)]);
    return g;
}

Tournament::Tournament(OrientedGraph graph) : graph_(std::move(graph))
{
    const int n = graph_.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!graph_.adjacent(u, v))
                throw std::invalid_argument("not a tournament: pair {" + std::to_string(u + 1) + "," +
                                            std::to_string(v + 1) + "} is unoriented");
}

Tournament Tournament::transitive(int n)
{
    OrientedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return Tournament(std::move(g));
}

Tournament Tournament::random(int n, CounterRng& rng)
{
    OrientedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin())
                g.add_edge(u, v);
            else
                g.add_edge(v, u);
        }
    return Tournament(std::move(g));
}

Tournament Tournament::from_code(int n, std::uint64_t code)
{
    OrientedGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1U)
                g.add_edge(u, v);
            else
                g.add_edge(v, u);
        }
    return Tournament(std::move(g));
}

Tournament Tournament::cyclic_triangle()
{
    const Edge edges[] = {{0, 1}, {1, 2}, {2, 0}};
    return Tournament(OrientedGraph::from_edges(3, edges));
}

void Tournament::reverse(int u, int v)
{
    if (graph_.has_edge(u, v))
        graph_.orient(v, u);
    else
        graph_.orient(u, v);
}

std::vector<int> topological_order(const OrientedGraph& g, std::span<const int> vertices)
{
    std::vector<int> members(vertices.begin(), vertices.end());
    std::sort(members.begin(), members.end());
    const std::size_t k = members.size();
    std::vector<int> indegree(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (g.has_edge(members[j], members[i]))
                ++indegree[i];
    std::vector<int> order;
    std::vector<bool> done(k, false);
    order.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!done[i] && indegree[i] == 0) {
                pick = i;
                break;
            }
        if (pick == k)
            return {};
        done[pick] = true;
        order.push_back(members[pick]);
        for (std::size_t j = 0; j < k; ++j)
            if (!done[j] && g.has_edge(members[pick], members[j]))
                --indegree[j];
    }
    return order;
}

bool is_acyclic(const OrientedGraph& g, std::span<const int> vertices)
{
    return vertices.empty() || !topological_order(g, vertices).empty();
}

} // namespace tourn
