#include "tourn/orderedhom.hpp"

#include "tourn/io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tourn {

LabeledGraph::LabeledGraph(std::vector<int> labels, std::span<const std::pair<int, int>> label_edges)
    : labels_(std::move(labels))
{
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 1)
            throw std::invalid_argument("labels must be positive");
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw std::invalid_argument("repeated label " + std::to_string(labels_[i]));
    }
    adj_ = BitMatrix(labels_.size(), labels_.size());
    for (const auto& [a, b] : label_edges) {
        const int i = position(a);
        const int j = position(b);
        if (i < 0 || j < 0)
            throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                        "} uses an unknown label");
        if (i == j)
            throw std::invalid_argument("loop at label " + std::to_string(a));
        if (adjacent(i, j))
            throw std::invalid_argument("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        add_edge(i, j);
    }
}

LabeledGraph LabeledGraph::edgeless(int n)
{
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    return LabeledGraph(std::move(labels), {});
}

int LabeledGraph::position(int label) const
{
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return -1;
    return static_cast<int>(it - labels_.begin());
}

void LabeledGraph::add_edge(int i, int j)
{
    adj_.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    adj_.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
}

std::size_t LabeledGraph::edge_count() const
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        total += adj_.row_count(i);
    return total / 2;
}

std::vector<std::pair<int, int>> LabeledGraph::rank_edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (adjacent(i, j))
                out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const
{
    auto out = rank_edges();
    for (auto& [a, b] : out) {
        a = label(a);
        b = label(b);
    }
    return out;
}

LabeledGraph LabeledGraph::induced(std::span<const int> positions) const
{
    std::vector<int> pos(positions.begin(), positions.end());
    std::sort(pos.begin(), pos.end());
    LabeledGraph g;
    for (int p : pos)
        g.labels_.push_back(label(p));
    g.adj_ = BitMatrix(pos.size(), pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (adjacent(pos[i], pos[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

bool order_isomorphic(const LabeledGraph& a, const LabeledGraph& b)
{
    return a.size() == b.size() && a.rank_edges() == b.rank_edges();
}

std::string describe(const LabeledGraph& g)
{
    std::ostringstream out;
    out << "vertices {";
    for (int i = 0; i < g.size(); ++i)
        out << (i ? "," : "") << g.label(i);
    out << "} edges {";
    bool first = true;
    for (const auto& [a, b] : g.edges()) {
        out << (first ? "" : ",") << a << '-' << b;
        first = false;
    }
    out << '}';
    return out.str();
}

void write_labeled_graph(std::ostream& out, const LabeledGraph& g)
{
    out << "vertices:";
    for (int l : g.labels())
        out << ' ' << l;
    out << '\n';
    for (const auto& [a, b] : g.edges())
        out << a << ' ' << b << '\n';
}

LabeledGraph read_labeled_graph(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    if (!reader.next(line))
        throw ParseError(reader.line_number(), "empty input, expected 'vertices:'");
    const std::string key = "vertices:";
    if (line.rfind(key, 0) != 0)
        reader.fail("expected 'vertices: <labels>'");
    std::vector<int> labels;
    for (long long v : reader.integers(std::string_view(line).substr(key.size()))) {
        if (v < 1 || v > 1000000)
            reader.fail("labels must be positive");
        labels.push_back(static_cast<int>(v));
    }
    if (!std::is_sorted(labels.begin(), labels.end()))
        reader.fail("labels must be sorted");
    std::vector<std::pair<int, int>> edges;
    while (reader.next(line)) {
        const auto ij = reader.integers(line);
        if (ij.size() != 2)
            reader.fail("edge lines must be 'i j'");
        if (ij[0] >= ij[1])
            reader.fail("edge lines need i < j");
        edges.emplace_back(static_cast<int>(ij[0]), static_cast<int>(ij[1]));
        try {
            LabeledGraph check(labels, edges);
        }
        catch (const std::invalid_argument& e) {
            reader.fail(e.what());
        }
    }
    try {
        return LabeledGraph(labels, edges);
    }
    catch (const std::invalid_argument& e) {
        reader.fail(e.what());
    }
}

int OphMap::operator()(int label) const
{
    const auto it = std::lower_bound(source.begin(), source.end(), label);
    if (it == source.end() || *it != label)
        throw std::invalid_argument("label " + std::to_string(label) + " is not in the domain");
    return image[static_cast<std::size_t>(it - source.begin())];
}

bool is_oph(const LabeledGraph& from, const LabeledGraph& to, const OphMap& f)
{
    if (f.source != from.labels() || f.image.size() != f.source.size())
        return false;
    std::vector<int> pos(f.image.size());
    for (std::size_t i = 0; i < f.image.size(); ++i) {
        pos[i] = to.position(f.image[i]);
        if (pos[i] < 0)
            return false;
        if (i > 0 && f.image[i] < f.image[i - 1])
            return false;
    }
    for (const auto& [i, j] : from.rank_edges())
        if (!to.adjacent(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]))
            return false;
    return true;
}

OphMap compose(const OphMap& f, const OphMap& g)
{
    OphMap out;
    out.source = f.source;
    out.image.reserve(f.image.size());
    for (int l : f.image)
        out.image.push_back(g(l));
    return out;
}

OphMap identity_map(const LabeledGraph& g)
{
    return {g.labels(), g.labels()};
}

namespace {

class OphSearch {
public:
    OphSearch(const LabeledGraph& from, const LabeledGraph& to, std::uint64_t budget)
        : from_(from), to_(to), pos_(static_cast<std::size_t>(from.size()), -1), counter_(budget)
    {
    }

    Search<OphMap> run()
    {
        Search<OphMap> result;
        if (place(0, 0)) {
            OphMap f;
            f.source = from_.labels();
            for (int p : pos_)
                f.image.push_back(to_.label(p));
            result.outcome = Outcome::found;
            result.value = std::move(f);
        }
        else {
            result.outcome = counter_.out() ? Outcome::exhausted : Outcome::none;
        }
        result.nodes = counter_.used();
        return result;
    }

private:
    bool place(int i, int low)
    {
        if (!counter_.tick())
            return false;
        if (i == from_.size())
            return true;
        for (int c = low; c < to_.size(); ++c) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (from_.adjacent(i, j) && !to_.adjacent(pos_[static_cast<std::size_t>(j)], c))
                    ok = false;
            if (!ok)
                continue;
            pos_[static_cast<std::size_t>(i)] = c;
            if (place(i + 1, c))
                return true;
            if (counter_.out())
                return false;
        }
        pos_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const LabeledGraph& from_;
    const LabeledGraph& to_;
    std::vector<int> pos_;
    NodeCounter counter_;
};

} // namespace

Search<OphMap> find_oph(const LabeledGraph& from, const LabeledGraph& to, std::uint64_t budget)
{
    OphSearch search(from, to, budget);
    return search.run();
}

LabeledGraph backedge_graph(const OrientedGraph& h, std::span<const int> labeling)
{
    const int n = h.order();
    if (static_cast<int>(labeling.size()) != n)
        throw std::invalid_argument("labeling has " + std::to_string(labeling.size()) + " entries, expected " +
                                    std::to_string(n));
    std::vector<int> vertex_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int l = labeling[static_cast<std::size_t>(v)];
        if (l < 1 || l > n || vertex_of[static_cast<std::size_t>(l - 1)] >= 0)
            throw std::invalid_argument("labeling is not a bijection onto 1.." + std::to_string(n));
        vertex_of[static_cast<std::size_t>(l - 1)] = v;
    }
    LabeledGraph g = LabeledGraph::edgeless(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.has_edge(vertex_of[static_cast<std::size_t>(j)], vertex_of[static_cast<std::size_t>(i)]))
                g.add_edge(i, j);
    return g;
}

Search<CoreResult> ordered_core(const LabeledGraph& g, std::uint64_t budget)
{
    Search<CoreResult> result;
    const int n = g.size();
    if (n == 0) {
        result.outcome = Outcome::found;
        result.value = CoreResult{g, identity_map(g)};
        return result;
    }
    const bool has_edges = g.edge_count() > 0;
    for (int s = 1; s <= n; ++s) {
        // Position subsets of size s in lexicographic order.
        std::vector<int> pick(static_cast<std::size_t>(s));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            const LabeledGraph candidate = g.induced(pick);
            if (!has_edges || candidate.edge_count() > 0) {
                const auto f = find_oph(g, candidate, budget - result.nodes);
                result.nodes += f.nodes;
                if (f.exhausted()) {
                    result.outcome = Outcome::exhausted;
                    return result;
                }
                if (f.found()) {
                    result.outcome = Outcome::found;
                    result.value = CoreResult{candidate, *f.value};
                    return result;
                }
            }
            int i = s - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - s + i)
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    // Not reached: g maps to itself.
    result.outcome = Outcome::none;
    return result;
}

bool is_ordered_core(const LabeledGraph& g)
{
    const auto c = ordered_core(g, unlimited_budget);
    return c.found() && c.value->core.size() == g.size();
}

CoreFamily core_family(const OrientedGraph& h, std::uint64_t budget)
{
    CoreFamily family;
    const int n = h.order();
    std::vector<int> labeling(static_cast<std::size_t>(n));
    std::iota(labeling.begin(), labeling.end(), 1);
    std::map<std::vector<std::pair<int, int>>, bool> seen_backedge;
    do {
        ++family.labelings;
        LabeledGraph g = backedge_graph(h, labeling);
        auto key = g.rank_edges();
        if (seen_backedge.count(key) != 0)
            continue;
        seen_backedge.emplace(std::move(key), true);
        const auto core = ordered_core(g, budget);
        if (!core.found())
            throw std::runtime_error("ordered core search exhausted its budget");
        const LabeledGraph& c = core.value->core;
        const bool known = std::any_of(family.members.begin(), family.members.end(),
                                       [&](const CoreMember& m) { return order_isomorphic(m.core, c); });
        if (!known)
            family.members.push_back({c, labeling, std::move(g)});
    } while (std::next_permutation(labeling.begin(), labeling.end()));
    family.distinct_backedge_graphs = seen_backedge.size();
    return family;
}

std::vector<std::pair<int, int>> antisymmetry_violations(const CoreFamily& family)
{
    std::vector<std::pair<int, int>> out;
    const auto& m = family.members;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (find_oph(m[i].core, m[j].core, unlimited_budget).found() &&
                find_oph(m[j].core, m[i].core, unlimited_budget).found())
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::vector<int> maximal_members(const CoreFamily& family)
{
    std::vector<int> out;
    const auto& m = family.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < m.size() && maximal; ++j)
            if (j != i && !order_isomorphic(m[i].core, m[j].core) &&
                find_oph(m[j].core, m[i].core, unlimited_budget).found())
                maximal = false;
        if (maximal)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

int select_k_index(const CoreFamily& family)
{
    const auto maximal = maximal_members(family);
    if (maximal.empty())
        throw std::invalid_argument("empty core family");
    int best = maximal.front();
    for (int i : maximal) {
        const auto& a = family.members[static_cast<std::size_t>(i)].core;
        const auto& b = family.members[static_cast<std::size_t>(best)].core;
        if (std::make_pair(a.edges(), a.labels()) < std::make_pair(b.edges(), b.labels()))
            best = i;
    }
    return best;
}

std::vector<int> odd_cycle_certificate(const LabeledGraph& g)
{
    const int n = g.size();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (depth[static_cast<std::size_t>(root)] >= 0)
            continue;
        depth[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v))
                    continue;
                if (depth[static_cast<std::size_t>(v)] < 0) {
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
                else if (depth[static_cast<std::size_t>(v)] == depth[static_cast<std::size_t>(u)]) {
                    std::vector<int> left{u};
                    std::vector<int> right{v};
                    int a = u;
                    int b = v;
                    while (a != b) {
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    // left ends at the common ancestor; right repeats it.
                    right.pop_back();
                    std::vector<int> cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    for (int& p : cycle)
                        p = g.label(p);
                    return cycle;
                }
            }
        }
    }
    throw std::invalid_argument("graph is bipartite, no odd cycle");
}

namespace {

bool graph_color(const LabeledGraph& g, int k, int v, int used, std::vector<int>& color)
{
    if (v == g.size())
        return true;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c)
                ok = false;
        if (!ok)
            continue;
        color[static_cast<std::size_t>(v)] = c;
        if (graph_color(g, k, v + 1, std::max(used, c + 1), color))
            return true;
    }
    return false;
}

} // namespace

int graph_chromatic_number(const LabeledGraph& g)
{
    std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
    for (int k = 0;; ++k)
        if (graph_color(g, k, 0, 0, color))
            return k;
}

} // namespace tourn
