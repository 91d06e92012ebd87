#include "tourn/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tourn {

namespace {

void check_set(const OrientedGraph& g, std::span<const int> s, const char* name, Bitset& seen)
{
    if (s.empty())
        throw std::invalid_argument(std::string("vertex set ") + name + " is empty");
    for (int v : s) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument(std::string("vertex set ") + name + " has out-of-range vertex " +
                                        std::to_string(v + 1));
        if (seen.test(static_cast<std::size_t>(v)))
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " repeated or shared between X and Y");
        seen.set(static_cast<std::size_t>(v));
    }
}

// Pattern vertices in search order: each next vertex has the most edges to
// the vertices already placed (ties: larger degree, then smaller index).
std::vector<int> search_order(const OrientedGraph& p)
{
    const int h = p.order();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(h), false);
    for (int step = 0; step < h; ++step) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int v = 0; v < h; ++v) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            int links = 0;
            for (int u : order)
                links += p.adjacent(u, v) ? 1 : 0;
            const int degree = p.out_degree(v) + p.in_degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        placed[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }
    return order;
}

class Embedder {
public:
    Embedder(const OrientedGraph& host, const OrientedGraph& pattern)
        : host_(host), pattern_(pattern), order_(search_order(pattern)),
          map_(static_cast<std::size_t>(pattern.order()), -1),
          candidates_(static_cast<std::size_t>(pattern.order()), Bitset(static_cast<std::size_t>(host.order()))),
          used_(static_cast<std::size_t>(host.order()))
    {
    }

    bool enumerate(const std::function<bool(const Embedding&)>& visit)
    {
        if (pattern_.order() > host_.order())
            return true;
        if (pattern_.order() == 0)
            return visit(map_);
        return descend(0, &visit, nullptr);
    }

    std::uint64_t count()
    {
        if (pattern_.order() > host_.order())
            return 0;
        if (pattern_.order() == 0)
            return 1;
        std::uint64_t total = 0;
        descend(0, nullptr, &total);
        return total;
    }

private:
    void fill_candidates(std::size_t depth)
    {
        Bitset& cand = candidates_[depth];
        cand = Bitset::full(static_cast<std::size_t>(host_.order()));
        cand.and_not(used_);
        const int p = order_[depth];
        for (std::size_t i = 0; i < depth; ++i) {
            const int q = order_[i];
            const int image = map_[static_cast<std::size_t>(q)];
            if (pattern_.has_edge(q, p))
                cand.and_row(host_.out_row(image));
            else if (pattern_.has_edge(p, q))
                cand.and_row(host_.in_row(image));
        }
    }

    bool descend(std::size_t depth, const std::function<bool(const Embedding&)>* visit, std::uint64_t* total)
    {
        fill_candidates(depth);
        const Bitset& cand = candidates_[depth];
        const bool last = depth + 1 == order_.size();
        if (last && total != nullptr) {
            *total += cand.count();
            return true;
        }
        const int p = order_[depth];
        for (std::size_t y = cand.find_first(); y < cand.size(); y = cand.find_next(y + 1)) {
            map_[static_cast<std::size_t>(p)] = static_cast<int>(y);
            bool keep_going = true;
            if (last) {
                keep_going = (*visit)(map_);
            }
            else {
                used_.set(y);
                keep_going = descend(depth + 1, visit, total);
                used_.reset(y);
            }
            if (!keep_going) {
                map_[static_cast<std::size_t>(p)] = -1;
                return false;
            }
        }
        map_[static_cast<std::size_t>(p)] = -1;
        return true;
    }

    const OrientedGraph& host_;
    const OrientedGraph& pattern_;
    std::vector<int> order_;
    Embedding map_;
    std::vector<Bitset> candidates_;
    Bitset used_;
};

} // namespace

PairStats density(const OrientedGraph& g, std::span<const int> x, std::span<const int> y)
{
    Bitset seen(static_cast<std::size_t>(g.order()));
    check_set(g, x, "X", seen);
    check_set(g, y, "Y", seen);
    const Bitset ymask = make_mask(static_cast<std::size_t>(g.order()), y);
    PairStats stats;
    for (int v : x)
        stats.edges_xy += kernels::popcount_and(g.out_row(v), ymask.words());
    const std::uint64_t size = static_cast<std::uint64_t>(x.size()) * y.size();
    stats.density = Rational(stats.edges_xy, size);
    stats.x_dominates = 2 * stats.edges_xy >= size;
    const auto n = static_cast<std::uint64_t>(g.order());
    stats.weight = Rational(size, n * n);
    return stats;
}

bool is_embedding(const OrientedGraph& host, const OrientedGraph& pattern, std::span<const int> map)
{
    if (static_cast<int>(map.size()) != pattern.order())
        return false;
    Bitset used(static_cast<std::size_t>(host.order()));
    for (int v : map) {
        if (v < 0 || v >= host.order() || used.test(static_cast<std::size_t>(v)))
            return false;
        used.set(static_cast<std::size_t>(v));
    }
    for (const Edge& e : pattern.edges())
        if (!host.has_edge(map[static_cast<std::size_t>(e.from)], map[static_cast<std::size_t>(e.to)]))
            return false;
    return true;
}

bool for_each_embedding(const OrientedGraph& host, const OrientedGraph& pattern,
                        const std::function<bool(const Embedding&)>& visit)
{
    Embedder embedder(host, pattern);
    return embedder.enumerate(visit);
}

std::uint64_t count_embeddings(const OrientedGraph& host, const OrientedGraph& pattern)
{
    Embedder embedder(host, pattern);
    return embedder.count();
}

std::optional<Embedding> find_embedding(const OrientedGraph& host, const OrientedGraph& pattern)
{
    std::optional<Embedding> found;
    for_each_embedding(host, pattern, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

CopyCount count_copies(const OrientedGraph& host, const OrientedGraph& pattern)
{
    CopyCount c;
    c.labeled = count_embeddings(host, pattern);
    // An edge-preserving self-injection of a finite graph is an automorphism.
    c.automorphisms = count_embeddings(pattern, pattern);
    c.unlabeled = c.labeled / c.automorphisms;
    return c;
}

namespace {

class DistanceSearch {
public:
    DistanceSearch(const Tournament& t, const OrientedGraph& h, std::uint64_t budget)
        : current_(t), h_(h), n_(t.order()),
          committed_(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)), counter_(budget)
    {
    }

    DistanceResult run()
    {
        DistanceResult r;
        root_bound_ = 0;
        bool first = true;
        explore(0, first);
        r.nodes = counter_.used();
        r.lower_bound = root_bound_;
        if (has_best_) {
            r.has_upper = true;
            r.distance = best_;
            r.reversals = best_set_;
        }
        if (counter_.out()) {
            r.status = DistanceStatus::exhausted;
        }
        else if (!has_best_) {
            r.status = DistanceStatus::infeasible;
        }
        else {
            r.status = DistanceStatus::exact;
            r.lower_bound = best_;
        }
        return r;
    }

private:
    struct Hit {
        std::vector<Edge> free_edges;  // uncommitted host edges used by the embedding
    };

    bool committed(int u, int v) const
    {
        return committed_.test(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    void set_committed(int u, int v, bool value)
    {
        committed_.assign(static_cast<std::size_t>(u), static_cast<std::size_t>(v), value);
        committed_.assign(static_cast<std::size_t>(v), static_cast<std::size_t>(u), value);
    }

    // Collects every embedding's uncommitted edges; returns false if some
    // embedding uses only committed edges (the branch is dead).
    bool collect(std::vector<Hit>& hits)
    {
        const auto pattern_edges = h_.edges();
        bool alive = true;
        for_each_embedding(current_.graph(), h_, [&](const Embedding& m) {
            Hit hit;
            for (const Edge& e : pattern_edges) {
                const int a = m[static_cast<std::size_t>(e.from)];
                const int b = m[static_cast<std::size_t>(e.to)];
                if (!committed(a, b))
                    hit.free_edges.push_back({a, b});
            }
            if (hit.free_edges.empty()) {
                alive = false;
                return false;
            }
            std::sort(hit.free_edges.begin(), hit.free_edges.end());
            hits.push_back(std::move(hit));
            return true;
        });
        return alive;
    }

    // Greedy packing of hits pairwise disjoint on uncommitted pairs.
    std::uint64_t packing_bound(std::vector<Hit>& hits) const
    {
        std::sort(hits.begin(), hits.end(),
                  [](const Hit& a, const Hit& b) { return a.free_edges.size() < b.free_edges.size(); });
        BitMatrix taken(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
        std::uint64_t packed = 0;
        for (const Hit& hit : hits) {
            bool disjoint = true;
            for (const Edge& e : hit.free_edges)
                if (taken.test(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to))) {
                    disjoint = false;
                    break;
                }
            if (!disjoint)
                continue;
            for (const Edge& e : hit.free_edges) {
                taken.set(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to));
                taken.set(static_cast<std::size_t>(e.to), static_cast<std::size_t>(e.from));
            }
            ++packed;
        }
        return packed;
    }

    void explore(std::uint64_t cost, bool& root)
    {
        if (!counter_.tick())
            return;
        std::vector<Hit> hits;
        const bool alive = collect(hits);
        const bool is_root = root;
        root = false;
        if (!alive)
            return;
        if (hits.empty()) {
            if (!has_best_ || cost < best_) {
                has_best_ = true;
                best_ = cost;
                best_set_ = reversed_;
            }
            return;
        }
        // packing_bound sorts hits so the first has the fewest free edges.
        const std::uint64_t bound = cost + packing_bound(hits);
        if (is_root)
            root_bound_ = bound;
        if (has_best_ && bound >= best_)
            return;
        const std::vector<Edge> branch = hits.front().free_edges;
        for (const Edge& e : branch) {
            set_committed(e.from, e.to, true);
            current_.reverse(e.from, e.to);
            reversed_.push_back(e);
            explore(cost + 1, root);
            reversed_.pop_back();
            current_.reverse(e.from, e.to);
            if (counter_.out())
                break;
            // Later branches keep this edge as it is.
        }
        for (const Edge& e : branch)
            set_committed(e.from, e.to, false);
    }

    Tournament current_;
    const OrientedGraph& h_;
    int n_;
    BitMatrix committed_;
    NodeCounter counter_;
    std::vector<Edge> reversed_;
    bool has_best_ = false;
    std::uint64_t best_ = 0;
    std::vector<Edge> best_set_;
    std::uint64_t root_bound_ = 0;
};

} // namespace

DistanceResult distance_to_h_free(const Tournament& t, const OrientedGraph& h, std::uint64_t budget)
{
    DistanceSearch search(t, h, budget);
    return search.run();
}

namespace {

bool extend_chain(const Tournament& t, const Bitset& cand, int remaining, std::vector<int>& chain,
                  NodeCounter& counter)
{
    if (remaining == 0)
        return true;
    if (static_cast<int>(cand.count()) < remaining)
        return false;
    for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1)) {
        if (!counter.tick())
            return false;
        Bitset next = cand;
        next.and_row(t.out_row(static_cast<int>(v)));
        chain.push_back(static_cast<int>(v));
        if (extend_chain(t, next, remaining - 1, chain, counter))
            return true;
        chain.pop_back();
        if (counter.out())
            return false;
    }
    return false;
}

} // namespace

Search<std::vector<int>> transitive_subtournament(const Tournament& t, int k, std::span<const int> within,
                                                  std::uint64_t budget)
{
    if (k < 1)
        throw std::invalid_argument("transitive subtournament size must be at least 1");
    const auto n = static_cast<std::size_t>(t.order());
    Bitset pool = within.empty() ? Bitset::full(n) : make_mask(n, within);

    Search<std::vector<int>> result;
    NodeCounter counter(budget);

    // Greedy: a vertex of maximum out-degree inside the pool keeps at least
    // half of the remaining pool as its out-neighborhood.
    std::vector<int> chain;
    Bitset cand = pool;
    while (static_cast<int>(chain.size()) < k && cand.any()) {
        counter.tick();
        int best = -1;
        std::uint64_t best_out = 0;
        cand.for_each([&](int v) {
            const std::uint64_t out = kernels::popcount_and(t.out_row(v), cand.words());
            if (best < 0 || out > best_out) {
                best = v;
                best_out = out;
            }
        });
        chain.push_back(best);
        cand.and_row(t.out_row(best));
    }
    if (static_cast<int>(chain.size()) == k) {
        result.outcome = Outcome::found;
        result.value = std::move(chain);
        result.nodes = counter.used();
        return result;
    }

    chain.clear();
    if (extend_chain(t, pool, k, chain, counter)) {
        result.outcome = Outcome::found;
        result.value = std::move(chain);
    }
    else {
        result.outcome = counter.out() ? Outcome::exhausted : Outcome::none;
    }
    result.nodes = counter.used();
    return result;
}

} // namespace tourn
