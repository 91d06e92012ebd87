#include "tourn/forcing.hpp"

#include "tourn/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tourn {

KPartiteTournament::KPartiteTournament(int k, int m) : k_(k), m_(m), g_(k * m)
{
    if (k < 1 || m < 0)
        throw std::invalid_argument("k-partite tournament needs k >= 1 and m >= 0");
}

void KPartiteTournament::orient(int u, int v)
{
    if (part_of(u) == part_of(v))
        throw std::invalid_argument("pair " + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                    " lies inside one part");
    g_.orient(u, v);
}

void KPartiteTournament::check_complete() const
{
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v)
            if (part_of(u) != part_of(v) && !g_.adjacent(u, v))
                throw std::invalid_argument("cross pair " + std::to_string(part_of(u) + 1) + "." +
                                            std::to_string(index_of(u) + 1) + " " + std::to_string(part_of(v) + 1) +
                                            "." + std::to_string(index_of(v) + 1) + " is unoriented");
}

std::vector<Edge> KPartiteTournament::inner_pairs() const
{
    std::vector<Edge> out;
    for (int p = 0; p < k_; ++p)
        for (int a = 0; a < m_; ++a)
            for (int b = a + 1; b < m_; ++b)
                out.push_back({vertex(p, a), vertex(p, b)});
    return out;
}

Tournament KPartiteTournament::completion(std::uint64_t code) const
{
    OrientedGraph g = g_;
    int bit = 0;
    for (const Edge& e : inner_pairs()) {
        if ((code >> bit) & 1U)
            g.add_edge(e.from, e.to);
        else
            g.add_edge(e.to, e.from);
        ++bit;
    }
    return Tournament(std::move(g));
}

bool KPartiteTournament::is_completion(const Tournament& t) const
{
    if (t.order() != order())
        return false;
    for (int u = 0; u < order(); ++u)
        for (int v = 0; v < order(); ++v)
            if (part_of(u) != part_of(v) && g_.has_edge(u, v) != t.beats(u, v))
                return false;
    return true;
}

void write_kpartite(std::ostream& out, const KPartiteTournament& f)
{
    out << "parts: " << f.part_size() << ' ' << f.parts() << '\n';
    for (const Edge& e : f.graph().edges())
        out << f.part_of(e.from) + 1 << '.' << f.index_of(e.from) + 1 << ' ' << f.part_of(e.to) + 1 << '.'
            << f.index_of(e.to) + 1 << '\n';
}

namespace {

int parse_part_vertex(const LineReader& reader, const std::string& token, int k, int m, const KPartiteTournament& f)
{
    const auto dot = token.find('.');
    if (dot == std::string::npos)
        reader.fail("expected 'i.a', got '" + token + "'");
    std::string both = token;
    both[dot] = ' ';
    const auto ia = reader.integers(both);
    if (ia.size() != 2 || ia[0] < 1 || ia[0] > k || ia[1] < 1 || ia[1] > m)
        reader.fail("vertex '" + token + "' out of range");
    return f.vertex(static_cast<int>(ia[0] - 1), static_cast<int>(ia[1] - 1));
}

} // namespace

KPartiteTournament read_kpartite(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    if (!reader.next(line))
        throw ParseError(reader.line_number(), "empty input, expected 'parts: m k'");
    const std::string key = "parts:";
    if (line.rfind(key, 0) != 0)
        reader.fail("expected 'parts: m k'");
    const auto mk = reader.integers(std::string_view(line).substr(key.size()));
    if (mk.size() != 2 || mk[0] < 1 || mk[1] < 1 || mk[0] * mk[1] > 100000)
        reader.fail("expected positive 'm k'");
    const int m = static_cast<int>(mk[0]);
    const int k = static_cast<int>(mk[1]);
    KPartiteTournament f(k, m);
    while (reader.next(line)) {
        const auto space = line.find_first_of(" \t");
        if (space == std::string::npos)
            reader.fail("edge lines must be 'i.a j.b'");
        const std::string first = line.substr(0, space);
        std::string second = line.substr(space + 1);
        second.erase(0, second.find_first_not_of(" \t"));
        const int u = parse_part_vertex(reader, first, k, m, f);
        const int v = parse_part_vertex(reader, second, k, m, f);
        if (f.part_of(u) == f.part_of(v))
            reader.fail("edge inside part " + std::to_string(f.part_of(u) + 1));
        if (f.graph().adjacent(u, v))
            reader.fail("pair given twice");
        f.orient(u, v);
    }
    try {
        f.check_complete();
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_number(), e.what());
    }
    return f;
}

namespace {

class TupleGreedy {
public:
    explicit TupleGreedy(const std::vector<int>& ranges) : ranges_(ranges), k_(ranges.size()), current_(k_, 0)
    {
        used_.resize(k_ * k_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                used_[i * k_ + j].assign(static_cast<std::size_t>(ranges[i]) * static_cast<std::size_t>(ranges[j]),
                                         false);
    }

    std::vector<Tuple> run()
    {
        descend(0);
        return std::move(out_);
    }

private:
    bool used(std::size_t i, std::size_t j, int a, int b) const
    {
        return used_[i * k_ + j][static_cast<std::size_t>(a) * static_cast<std::size_t>(ranges_[j]) +
                                 static_cast<std::size_t>(b)];
    }

    // Lexicographic scan; a prefix that already repeats a coordinate pair of a
    // kept tuple cannot be completed, so its subtree is skipped.
    void descend(std::size_t j)
    {
        if (j == k_) {
            out_.push_back(current_);
            for (std::size_t a = 0; a < k_; ++a)
                for (std::size_t b = a + 1; b < k_; ++b)
                    used_[a * k_ + b][static_cast<std::size_t>(current_[a]) * static_cast<std::size_t>(ranges_[b]) +
                                      static_cast<std::size_t>(current_[b])] = true;
            return;
        }
        for (int v = 0; v < ranges_[j]; ++v) {
            // A kept tuple may have claimed a pair of the fixed prefix.
            for (std::size_t a = 0; a < j; ++a)
                for (std::size_t b = a + 1; b < j; ++b)
                    if (used(a, b, current_[a], current_[b]))
                        return;
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (used(i, j, current_[i], v))
                    ok = false;
            if (!ok)
                continue;
            current_[j] = v;
            descend(j + 1);
        }
    }

    const std::vector<int>& ranges_;
    std::size_t k_;
    Tuple current_;
    std::vector<std::vector<bool>> used_;
    std::vector<Tuple> out_;
};

} // namespace

std::vector<Tuple> disjoint_tuples(const std::vector<int>& ranges)
{
    if (ranges.size() < 2)
        throw std::invalid_argument("tuple collections need k >= 2");
    for (int r : ranges)
        if (r < 0)
            throw std::invalid_argument("negative tuple range");
    TupleGreedy greedy(ranges);
    return greedy.run();
}

std::vector<Tuple> disjoint_tuples(int t, int k)
{
    if (k < 2)
        throw std::invalid_argument("tuple collections need k >= 2");
    if (t < 1)
        throw std::invalid_argument("tuple collections need t >= 1");
    return disjoint_tuples(std::vector<int>(static_cast<std::size_t>(k), t));
}

bool pairwise_agreement_ok(const std::vector<Tuple>& tuples)
{
    for (std::size_t a = 0; a < tuples.size(); ++a)
        for (std::size_t b = a + 1; b < tuples.size(); ++b) {
            if (tuples[a].size() != tuples[b].size())
                return false;
            int same = 0;
            for (std::size_t i = 0; i < tuples[a].size(); ++i)
                same += tuples[a][i] == tuples[b][i] ? 1 : 0;
            if (same > 1)
                return false;
        }
    return true;
}

Rational forcing_gamma(int h)
{
    const BigInt denominator = (BigInt(1) << static_cast<unsigned>(h * h)) * 8 * BigInt(h) * h * h * h;
    return Rational(BigInt(1), denominator);
}

namespace {

std::vector<std::vector<int>> color_classes(const OrientedGraph& h, const Coloring& coloring, int k)
{
    if (static_cast<int>(coloring.size()) != h.order())
        throw std::invalid_argument("colouring has " + std::to_string(coloring.size()) + " entries, expected " +
                                    std::to_string(h.order()));
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
    for (int v = 0; v < h.order(); ++v) {
        const int c = coloring[static_cast<std::size_t>(v)];
        if (c < 1 || c > k)
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has colour " + std::to_string(c) +
                                        " outside 1.." + std::to_string(k));
        classes[static_cast<std::size_t>(c - 1)].push_back(v);
    }
    for (int c = 0; c < k; ++c) {
        const auto& cls = classes[static_cast<std::size_t>(c)];
        if (cls.empty())
            throw std::invalid_argument("colour class " + std::to_string(c + 1) + " is empty");
        if (!is_acyclic(h, cls))
            throw std::invalid_argument("colour class " + std::to_string(c + 1) + " contains a directed cycle");
    }
    return classes;
}

} // namespace

KPartiteTournament build_forcing(const OrientedGraph& h, const Coloring& coloring, const OrientedGraph& d, int m,
                                 std::uint64_t seed)
{
    const int k = d.order();
    if (k < 2 || k > h.order())
        throw std::invalid_argument("need 2 <= k <= h, got k = " + std::to_string(k));
    if (m < 1)
        throw std::invalid_argument("part size must be positive");
    color_classes(h, coloring, k);
    for (const Edge& e : h.edges()) {
        const int ci = coloring[static_cast<std::size_t>(e.to)] - 1;
        const int cj = coloring[static_cast<std::size_t>(e.from)] - 1;
        if (ci != cj && d.has_edge(ci, cj))
            throw std::invalid_argument("edge " + std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1) +
                                        " points from class " + std::to_string(cj + 1) + " to class " +
                                        std::to_string(ci + 1) + " against D");
    }

    KPartiteTournament f(k, m);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (d.has_edge(i, j) || d.has_edge(j, i)) {
                const bool forward = d.has_edge(i, j);
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b) {
                        const int u = f.vertex(i, a);
                        const int v = f.vertex(j, b);
                        forward ? f.orient(u, v) : f.orient(v, u);
                    }
                continue;
            }
            const CounterRng rng(seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(k) +
                                           static_cast<std::uint64_t>(j));
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    const auto counter = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(m) +
                                         static_cast<std::uint64_t>(b);
                    const bool forward = (rng.at(counter) >> 63) != 0;
                    const int u = f.vertex(i, a);
                    const int v = f.vertex(j, b);
                    forward ? f.orient(u, v) : f.orient(v, u);
                    ++f.coins_used;
                }
        }
    return f;
}

CompletionCertificate certify_completion(const KPartiteTournament& f, const Tournament& t, const OrientedGraph& h,
                                         const Coloring& coloring, BlockRule rule)
{
    if (!f.is_completion(t))
        throw std::invalid_argument("tournament is not a completion of F");
    const int k = f.parts();
    const int m = f.part_size();
    const auto classes = color_classes(h, coloring, k);

    CompletionCertificate cert;
    cert.target = forcing_gamma(h.order()) * m * m;
    for (const auto& cls : classes)
        cert.class_order.push_back(topological_order(h, cls));

    // Transitive blocks per part, extracted one by one.
    std::vector<int> counts;
    for (int i = 0; i < k; ++i) {
        const int hi = static_cast<int>(classes[static_cast<std::size_t>(i)].size());
        const int limit = rule == BlockRule::half_part ? m / (2 * hi) : m / hi;
        std::vector<int> remaining;
        for (int a = 0; a < m; ++a)
            remaining.push_back(f.vertex(i, a));
        std::vector<std::vector<int>> blocks;
        while (static_cast<int>(blocks.size()) < limit) {
            const auto found = transitive_subtournament(t, hi, remaining, unlimited_budget);
            if (!found.found())
                break;
            blocks.push_back(*found.value);
            for (int v : *found.value)
                remaining.erase(std::find(remaining.begin(), remaining.end(), v));
            if (remaining.empty())
                break;
        }
        counts.push_back(static_cast<int>(blocks.size()));
        cert.blocks.push_back(std::move(blocks));
    }

    const auto tuples = disjoint_tuples(counts);
    cert.tuples = tuples.size();
    for (const Tuple& s : tuples) {
        Embedding map(static_cast<std::size_t>(h.order()), -1);
        for (int i = 0; i < k; ++i) {
            const auto& order = cert.class_order[static_cast<std::size_t>(i)];
            const auto& block = cert.blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
            for (std::size_t p = 0; p < order.size(); ++p)
                map[static_cast<std::size_t>(order[p])] = block[p];
        }
        if (is_embedding(t.graph(), h, map))
            cert.copies.push_back(std::move(map));
    }
    return cert;
}

std::size_t plant_block_copies(KPartiteTournament& f, const OrientedGraph& h, const Coloring& coloring)
{
    const int k = f.parts();
    const int m = f.part_size();
    const auto classes = color_classes(h, coloring, k);
    std::vector<int> counts;
    std::vector<int> slot(static_cast<std::size_t>(h.order()));
    for (const auto& cls : classes) {
        const auto order = topological_order(h, cls);
        for (std::size_t p = 0; p < order.size(); ++p)
            slot[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
        counts.push_back(m / static_cast<int>(cls.size()));
    }
    const auto tuples = disjoint_tuples(counts);
    for (const Tuple& s : tuples)
        for (const Edge& e : h.edges()) {
            const int ci = coloring[static_cast<std::size_t>(e.from)] - 1;
            const int cj = coloring[static_cast<std::size_t>(e.to)] - 1;
            if (ci == cj)
                continue;
            const int hi = static_cast<int>(classes[static_cast<std::size_t>(ci)].size());
            const int hj = static_cast<int>(classes[static_cast<std::size_t>(cj)].size());
            f.orient(f.vertex(ci, s[static_cast<std::size_t>(ci)] * hi + slot[static_cast<std::size_t>(e.from)]),
                     f.vertex(cj, s[static_cast<std::size_t>(cj)] * hj + slot[static_cast<std::size_t>(e.to)]));
        }
    return tuples.size();
}

bool cross_edge_disjoint(const KPartiteTournament& f, const OrientedGraph& h, const std::vector<Embedding>& copies)
{
    BitMatrix seen(static_cast<std::size_t>(f.order()), static_cast<std::size_t>(f.order()));
    const auto edges = h.edges();
    for (const Embedding& e : copies)
        for (const Edge& he : edges) {
            const int u = e[static_cast<std::size_t>(he.from)];
            const int v = e[static_cast<std::size_t>(he.to)];
            if (f.part_of(u) == f.part_of(v))
                continue;
            if (seen.test(static_cast<std::size_t>(u), static_cast<std::size_t>(v)))
                return false;
            seen.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        }
    return true;
}

ForcingCheck forces_exhaustive(const KPartiteTournament& f, const OrientedGraph& h, int max_inner_pairs)
{
    ForcingCheck check;
    f.check_complete();
    const auto inner = f.inner_pairs();
    if (static_cast<int>(inner.size()) > max_inner_pairs || inner.size() >= 63)
        return check;
    check.decided = true;
    check.forces = true;
    const std::uint64_t total = std::uint64_t{1} << inner.size();
    OrientedGraph g = f.graph();
    for (std::uint64_t code = 0; code < total; ++code) {
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if ((code >> i) & 1U)
                g.orient(inner[i].from, inner[i].to);
            else
                g.orient(inner[i].to, inner[i].from);
        }
        ++check.completions;
        if (!find_embedding(g, h)) {
            check.forces = false;
            check.counterexample = Tournament(g);
            return check;
        }
    }
    return check;
}

Search<KPartiteTournament> search_min_forcing(const OrientedGraph& h, int m_max, std::uint64_t budget)
{
    if (!acyclic_k_coloring(h, 2, unlimited_budget).found())
        throw std::invalid_argument("pattern is not 2-colorable, so no bipartite tournament forces it");
    Search<KPartiteTournament> result;
    NodeCounter counter(budget);
    for (int m = 1; m <= m_max; ++m) {
        if (m * m >= 63 || 2 * (m * (m - 1) / 2) > max_exhaustive_inner_pairs)
            break;
        const std::uint64_t masks = std::uint64_t{1} << (m * m);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            KPartiteTournament f(2, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    const int u = f.vertex(0, a);
                    const int v = f.vertex(1, b);
                    (mask >> (a * m + b)) & 1U ? f.orient(u, v) : f.orient(v, u);
                }
            const auto check = forces_exhaustive(f, h);
            for (std::uint64_t i = 0; i < check.completions; ++i)
                if (!counter.tick())
                    break;
            if (counter.out()) {
                result.outcome = Outcome::exhausted;
                result.nodes = counter.used();
                return result;
            }
            if (check.decided && check.forces) {
                result.outcome = Outcome::found;
                result.value = std::move(f);
                result.nodes = counter.used();
                return result;
            }
        }
    }
    result.outcome = Outcome::none;
    result.nodes = counter.used();
    return result;
}

} // namespace tourn
