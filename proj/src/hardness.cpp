#include "tourn/hardness.hpp"

#include "tourn/io.hpp"
#include "tourn/nae.hpp"

#include <ostream>
#include <stdexcept>

namespace tourn {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

constexpr std::array<std::pair<int, int>, 21> gadget_edges{{
    {0, 1}, {0, 2}, {2, 1}, {0, 6}, {0, 5}, {1, 6}, {1, 5}, {4, 0}, {3, 0}, {4, 1}, {3, 1},
    {5, 6}, {3, 4}, {6, 4}, {6, 3}, {5, 3}, {5, 4}, {2, 5}, {6, 2}, {2, 3}, {4, 2},
}};

bool cyclic(const Tournament& t, int x, int y, int z)
{
    return (t.beats(x, y) && t.beats(y, z) && t.beats(z, x)) || (t.beats(y, x) && t.beats(z, y) && t.beats(x, z));
}

} // namespace

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(sz(n) * sz(n), false)
{
    if (n < 0) throw std::invalid_argument("undirected graph: negative order");
}

void UndirectedGraph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} out of range");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u + 1));
    if (adjacent(u, v)) {
        throw std::invalid_argument("repeated edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
    }
    adj_[idx(u, v)] = true;
    adj_[idx(v, u)] = true;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::array<int, 3>> UndirectedGraph::triangles() const
{
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (adjacent(a, b))
                for (int c = b + 1; c < n_; ++c)
                    if (adjacent(a, c) && adjacent(b, c)) out.push_back({a, b, c});
    return out;
}

UndirectedGraph UndirectedGraph::from_code(int n, std::uint64_t code)
{
    UndirectedGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1U) g.add_edge(u, v);
    return g;
}

UndirectedGraph read_undirected_graph(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) reader.fail("missing vertex count");
    const auto head = reader.integers(line);
    if (head.size() != 1 || head[0] < 0 || head[0] > 100000) reader.fail("expected a vertex count");
    UndirectedGraph g(static_cast<int>(head[0]));
    while (reader.next(line)) {
        const auto e = reader.integers(line);
        if (e.size() != 2) reader.fail("expected an edge \"i j\"");
        try {
            g.add_edge(static_cast<int>(e[0] - 1), static_cast<int>(e[1] - 1));
        } catch (const std::invalid_argument& ex) {
            reader.fail(ex.what());
        }
    }
    return g;
}

void write_undirected_graph(std::ostream& out, const UndirectedGraph& g)
{
    out << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

Tournament gadget()
{
    OrientedGraph g(7);
    for (const auto& [x, y] : gadget_edges) g.add_edge(x, y);
    return Tournament(std::move(g));
}

bool gadget_coloring_proper(const Tournament& g, unsigned mask)
{
    for (const auto& tri : cyclic_triangles(g)) {
        const unsigned c0 = (mask >> tri[0]) & 1U;
        if (c0 == ((mask >> tri[1]) & 1U) && c0 == ((mask >> tri[2]) & 1U)) return false;
    }
    return true;
}

GadgetReport verify_gadget()
{
    using namespace gadget_vertex;
    const Tournament g = gadget();
    GadgetReport rep;
    const auto claim = [&](bool holds, const std::string& what) {
        if (!holds) rep.transcription_failures.push_back(what);
    };
    claim(cyclic(g, a, b, w), "{a,b,w} is not cyclic");
    claim(cyclic(g, c, d, w), "{c,d,w} is not cyclic");
    claim(g.beats(a, u) && g.beats(b, u), "N-(u) does not contain {a,b}");
    claim(g.beats(v, c) && g.beats(v, d), "N+(v) does not contain {c,d}");
    claim(g.beats(u, v), "u does not beat v");
    // u joins a vertex of {a,b} and a vertex of {c,d}; likewise v.
    for (int x : {a, b}) {
        for (int y : {c, d}) {
            claim(cyclic(g, u, x, y), std::string("{u,") + gadget_names[sz(x)] + "," + gadget_names[sz(y)] + "} is not cyclic");
            claim(cyclic(g, v, x, y), std::string("{v,") + gadget_names[sz(x)] + "," + gadget_names[sz(y)] + "} is not cyclic");
        }
    }
    rep.transcription_ok = rep.transcription_failures.empty();

    rep.item2 = true;
    for (unsigned mask = 0; mask < 128; ++mask) {
        if (!gadget_coloring_proper(g, mask)) continue;
        ++rep.proper_count;
        rep.proper.push_back(mask);
        if (((mask >> u) & 1U) != ((mask >> v) & 1U)) {
            rep.item2 = false;
            rep.separating.push_back(mask);
        }
    }
    const unsigned split = (1U << a) | (1U << b) | (1U << c) | (1U << d);
    bool opposite = true;
    for (int x = 0; x < 7; ++x) {
        if ((g.beats(x, u) || g.beats(v, x)) && ((split >> x) & 1U) == ((split >> u) & 1U)) opposite = false;
    }
    rep.item1 = gadget_coloring_proper(g, split) && opposite;
    return rep;
}

int ReductionOutput::gadget_copy(int t, int pos, int g) const
{
    if (g == gadget_vertex::u) return y(triangles[sz(t)][sz(pos)]);
    if (g == gadget_vertex::v) return z(t, pos);
    return k(t, pos, g - 2);
}

ReductionOutput reduce(const UndirectedGraph& g)
{
    ReductionOutput r;
    r.n = g.order();
    r.triangles = g.triangles();
    const int m = static_cast<int>(r.triangles.size());
    const int total = r.n + 18 * m;
    r.roles.resize(sz(total));
    for (int i = 0; i < r.n; ++i) r.roles[sz(r.y(i))] = {VertexRole::Kind::y, i, 0, 0};
    for (int t = 0; t < m; ++t) {
        for (int p = 0; p < 3; ++p) {
            r.roles[sz(r.z(t, p))] = {VertexRole::Kind::z, t, p, 0};
            for (int q = 0; q < 5; ++q) r.roles[sz(r.k(t, p, q))] = {VertexRole::Kind::k, t, p, q};
        }
    }

    // Default orientation by role order Y, K, Z and index, then overrides.
    const auto rank = [&](int x) {
        switch (r.roles[sz(x)].kind) {
        case VertexRole::Kind::y: return 0;
        case VertexRole::Kind::k: return 1;
        default: return 2;
        }
    };
    std::vector<std::vector<bool>> beats(sz(total), std::vector<bool>(sz(total), false));
    const auto set = [&](int x, int y) {
        beats[sz(x)][sz(y)] = true;
        beats[sz(y)][sz(x)] = false;
    };
    for (int x = 0; x < total; ++x) {
        for (int y = x + 1; y < total; ++y) {
            const int rx = rank(x), ry = rank(y);
            if (rx != ry) {
                rx < ry ? set(x, y) : set(y, x);
                continue;
            }
            set(x, y);  // Y by index, Z_s -> Z_t, K_s -> K_t, K_t^i -> K_t^j by layout
        }
    }
    for (int t = 0; t < m; ++t) {
        set(r.z(t, 2), r.z(t, 0));
        for (int p = 0; p < 3; ++p) {
            for (const auto& [x, y] : gadget_edges) set(r.gadget_copy(t, p, x), r.gadget_copy(t, p, y));
        }
    }
    OrientedGraph out(total);
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y)
            if (beats[sz(x)][sz(y)]) out.add_edge(x, y);
    r.t = Tournament(std::move(out));
    return r;
}

ReductionAudit audit_reduction(const UndirectedGraph& g, const ReductionOutput& out)
{
    ReductionAudit a;
    const auto tris = g.triangles();
    const int n = g.order();
    const int m = static_cast<int>(tris.size());
    const Tournament& t = out.t;
    a.sizes = out.n == n && out.triangles == tris && t.order() == n + 18 * m &&
              static_cast<int>(out.roles.size()) == t.order();
    if (!a.sizes) return a;

    // Roles from the stated layout, not from out.roles.
    const auto y_of = [&](int i) { return i; };
    const auto z_of = [&](int s, int p) { return n + 3 * s + p; };
    const auto k_of = [&](int s, int p, int q) { return n + 3 * m + 15 * s + 5 * p + q; };

    a.y_transitive = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!t.beats(y_of(i), y_of(j))) a.y_transitive = false;
    a.y_to_z = true;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < m; ++s)
            for (int p = 0; p < 3; ++p)
                if (!t.beats(y_of(i), z_of(s, p))) a.y_to_z = false;
    a.z_order = true;
    a.z_cyclic = true;
    a.k_order = true;
    a.k_inner = true;
    for (int s = 0; s < m; ++s) {
        if (!(t.beats(z_of(s, 0), z_of(s, 1)) && t.beats(z_of(s, 1), z_of(s, 2)) && t.beats(z_of(s, 2), z_of(s, 0)))) {
            a.z_cyclic = false;
        }
        for (int s2 = s + 1; s2 < m; ++s2) {
            for (int p = 0; p < 3; ++p) {
                for (int p2 = 0; p2 < 3; ++p2) {
                    if (!t.beats(z_of(s, p), z_of(s2, p2))) a.z_order = false;
                    for (int q = 0; q < 5; ++q)
                        for (int q2 = 0; q2 < 5; ++q2)
                            if (!t.beats(k_of(s, p, q), k_of(s2, p2, q2))) a.k_order = false;
                }
            }
        }
        for (int p = 0; p < 3; ++p)
            for (int p2 = p + 1; p2 < 3; ++p2)
                for (int q = 0; q < 5; ++q)
                    for (int q2 = 0; q2 < 5; ++q2)
                        if (!t.beats(k_of(s, p, q), k_of(s, p2, q2))) a.k_inner = false;
    }

    // Each copy H_s^p must be an exact gadget copy; record which Y-K and K-Z
    // pairs lie inside some copy.
    const Tournament h = gadget();
    const int total = t.order();
    std::vector<std::vector<bool>> in_copy(sz(total), std::vector<bool>(sz(total), false));
    a.gadget_copies = true;
    for (int s = 0; s < m; ++s) {
        for (int p = 0; p < 3; ++p) {
            std::array<int, 7> map{};
            map[0] = y_of(tris[sz(s)][sz(p)]);
            map[1] = z_of(s, p);
            for (int q = 0; q < 5; ++q) map[sz(q + 2)] = k_of(s, p, q);
            for (int x = 0; x < 7; ++x) {
                for (int y = 0; y < 7; ++y) {
                    if (x == y) continue;
                    in_copy[sz(map[sz(x)])][sz(map[sz(y)])] = true;
                    if (h.beats(x, y) != t.beats(map[sz(x)], map[sz(y)])) a.gadget_copies = false;
                }
            }
        }
    }
    a.defaults = true;
    for (int kv = n + 3 * m; kv < total; ++kv) {
        for (int i = 0; i < n; ++i)
            if (!in_copy[sz(y_of(i))][sz(kv)] && !t.beats(y_of(i), kv)) a.defaults = false;
        for (int zv = n; zv < n + 3 * m; ++zv)
            if (!in_copy[sz(kv)][sz(zv)] && !t.beats(kv, zv)) a.defaults = false;
    }
    return a;
}

Search<std::vector<int>> has_triangle_free_cut(const UndirectedGraph& g, std::uint64_t budget)
{
    NaeProblem p;
    p.variables = g.order();
    for (const auto& tri : g.triangles()) p.clauses.push_back(tri);
    return solve_nae(p, budget);
}

bool is_triangle_free_cut(const UndirectedGraph& g, const std::vector<int>& cut)
{
    if (static_cast<int>(cut.size()) != g.order()) return false;
    for (const auto& tri : g.triangles()) {
        if (cut[sz(tri[0])] == cut[sz(tri[1])] && cut[sz(tri[1])] == cut[sz(tri[2])]) return false;
    }
    return true;
}

ReductionCheck check_reduction(const UndirectedGraph& g, std::uint64_t budget)
{
    ReductionCheck rep;
    const auto cut = has_triangle_free_cut(g, budget);
    const ReductionOutput r = reduce(g);
    const auto col = nae_two_coloring(r.t, budget);
    rep.nodes = cut.nodes + col.nodes;
    if (cut.exhausted() || col.exhausted()) return rep;
    rep.decided = true;
    rep.cut_exists = cut.found();
    rep.colorable = col.found();
    rep.agree = rep.cut_exists == rep.colorable;
    if (cut.found()) rep.cut = *cut.value;
    rep.lifted_valid = true;
    if (col.found()) {
        for (int i = 0; i < g.order(); ++i) rep.lifted.push_back((*col.value)[sz(r.y(i))] - 1);
        rep.lifted_valid = is_triangle_free_cut(g, rep.lifted);
    }
    return rep;
}

Tournament lift(const Tournament& t, int k)
{
    if (k < 2) throw std::invalid_argument("lift: k must be at least 2");
    const int n = t.order();
    OrientedGraph g(2 * n + 1);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const bool fwd = t.beats(x, y);
            g.add_edge(fwd ? x : y, fwd ? y : x);
            g.add_edge(fwd ? n + x : n + y, fwd ? n + y : n + x);
        }
        for (int y = 0; y < n; ++y) g.add_edge(x, n + y);
        g.add_edge(n + x, 2 * n);
        g.add_edge(2 * n, x);
    }
    return Tournament(std::move(g));
}

void write_roles(std::ostream& out, const ReductionOutput& r)
{
    for (std::size_t x = 0; x < r.roles.size(); ++x) {
        const VertexRole& role = r.roles[x];
        out << x + 1 << ' ';
        switch (role.kind) {
        case VertexRole::Kind::y: out << "y " << role.index + 1; break;
        case VertexRole::Kind::z: out << "z " << role.index + 1 << ' ' << role.position + 1; break;
        case VertexRole::Kind::k:
            out << "k " << role.index + 1 << ' ' << role.position + 1 << ' ' << gadget_names[sz(role.internal + 2)];
            break;
        }
        out << '\n';
    }
}

} // namespace tourn
