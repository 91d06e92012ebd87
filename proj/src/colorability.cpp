#include "tourn/colorability.hpp"

#include "tourn/nae.hpp"

#include <algorithm>
#include <stdexcept>

namespace tourn {

bool is_proper_coloring(const OrientedGraph& g, const Coloring& coloring, int k)
{
    if (static_cast<int>(coloring.size()) != g.order())
        return false;
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(std::max(k, 0)));
    for (int v = 0; v < g.order(); ++v) {
        const int c = coloring[static_cast<std::size_t>(v)];
        if (c < 1 || c > k)
            return false;
        classes[static_cast<std::size_t>(c - 1)].push_back(v);
    }
    for (const auto& cls : classes)
        if (!is_acyclic(g, cls))
            return false;
    return true;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const OrientedGraph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), coloring_(static_cast<std::size_t>(g.order()), 0),
          classes_(static_cast<std::size_t>(k), Bitset(static_cast<std::size_t>(g.order()))), counter_(budget)
    {
    }

    Search<Coloring> run()
    {
        Search<Coloring> result;
        if (place(0, 0)) {
            result.outcome = Outcome::found;
            result.value = coloring_;
        }
        else {
            result.outcome = counter_.out() ? Outcome::exhausted : Outcome::none;
        }
        result.nodes = counter_.used();
        return result;
    }

private:
    // True if adding v to the class closes a directed cycle through v.
    bool closes_cycle(int v, const Bitset& cls) const
    {
        Bitset target = cls;
        target.and_row(g_.in_row(v));
        if (target.none())
            return false;
        Bitset visited = cls;
        visited.and_row(g_.out_row(v));
        Bitset frontier = visited;
        while (frontier.any()) {
            Bitset probe = visited;
            probe &= target;
            if (probe.any())
                return true;
            Bitset next(cls.size());
            frontier.for_each([&](int u) {
                Bitset step = cls;
                step.and_row(g_.out_row(u));
                next |= step;
            });
            next.and_not(visited);
            visited |= next;
            frontier = std::move(next);
        }
        return false;
    }

    bool place(int v, int used)
    {
        if (!counter_.tick())
            return false;
        if (v == g_.order())
            return true;
        const int limit = std::min(k_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            Bitset& cls = classes_[static_cast<std::size_t>(c - 1)];
            if (closes_cycle(v, cls))
                continue;
            cls.set(static_cast<std::size_t>(v));
            coloring_[static_cast<std::size_t>(v)] = c;
            if (place(v + 1, std::max(used, c)))
                return true;
            cls.reset(static_cast<std::size_t>(v));
            coloring_[static_cast<std::size_t>(v)] = 0;
            if (counter_.out())
                return false;
        }
        return false;
    }

    const OrientedGraph& g_;
    int k_;
    Coloring coloring_;
    std::vector<Bitset> classes_;
    NodeCounter counter_;
};

} // namespace

Search<Coloring> acyclic_k_coloring(const OrientedGraph& g, int k, std::uint64_t budget)
{
    if (k < 1)
        throw std::invalid_argument("number of colors must be at least 1");
    ColoringSearch search(g, k, budget);
    return search.run();
}

std::vector<std::array<int, 3>> cyclic_triangles(const Tournament& t)
{
    std::vector<std::array<int, 3>> out;
    const int n = t.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const bool ab = t.beats(a, b);
                if (ab == t.beats(b, c) && ab == t.beats(c, a))
                    out.push_back({a, b, c});
            }
    return out;
}

Search<Coloring> nae_two_coloring(const OrientedGraph& g, std::uint64_t budget)
{
    if (!g.is_complete())
        throw std::invalid_argument("NAE 2-coloring requires a tournament");
    const Tournament t{OrientedGraph(g)};
    NaeProblem problem;
    problem.variables = t.order();
    problem.clauses = cyclic_triangles(t);
    const auto solved = solve_nae(problem, budget);
    Search<Coloring> result;
    result.outcome = solved.outcome;
    result.nodes = solved.nodes;
    if (solved.found()) {
        Coloring c(solved.value->size());
        for (std::size_t v = 0; v < c.size(); ++v)
            c[v] = (*solved.value)[v] + 1;
        result.value = std::move(c);
    }
    return result;
}

ChromaticResult chromatic_number(const OrientedGraph& g, std::uint64_t budget)
{
    ChromaticResult r;
    if (g.order() == 0)
        return r;
    std::uint64_t left = budget;
    for (int k = 1; k <= g.order(); ++k) {
        const auto s = acyclic_k_coloring(g, k, left);
        r.nodes += s.nodes;
        if (s.found()) {
            r.k = k;
            r.coloring = *s.value;
            return r;
        }
        if (s.exhausted()) {
            r.outcome = Outcome::exhausted;
            r.k = k;
            return r;
        }
        left = left == unlimited_budget ? left : left - s.nodes;
    }
    return r;
}

const char* to_string(Difficulty d)
{
    return d == Difficulty::easy ? "easy" : "hard";
}

Search<Difficulty> classify(const OrientedGraph& g, std::uint64_t budget)
{
    Search<Difficulty> result;
    if (g.order() == 0) {
        result.outcome = Outcome::found;
        result.value = Difficulty::easy;
        return result;
    }
    const auto s = acyclic_k_coloring(g, 2, budget);
    result.nodes = s.nodes;
    if (s.exhausted()) {
        result.outcome = Outcome::exhausted;
        return result;
    }
    result.outcome = Outcome::found;
    result.value = s.found() ? Difficulty::easy : Difficulty::hard;
    return result;
}

std::optional<Tournament> find_minimal_non_2_colorable(int max_n)
{
    for (int n = 1; n <= max_n && n <= 11; ++n) {
        const int pairs = n * (n - 1) / 2;
        const std::uint64_t codes = std::uint64_t{1} << pairs;
        for (std::uint64_t code = 0; code < codes; ++code) {
            const Tournament t = Tournament::from_code(n, code);
            if (!nae_two_coloring(t, unlimited_budget).found())
                return t;
        }
    }
    return std::nullopt;
}

} // namespace tourn
