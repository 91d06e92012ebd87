#include "tourn/lowerbound.hpp"

#include "tourn/colorability.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace tourn {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Digit vectors of the given base with digits in 0..bound, as values below limit.
void digit_vectors(int base, int dim, int bound, int limit,
                   std::vector<std::pair<int, long long>>& out)
{
    std::vector<int> digits(sz(dim), 0);
    while (true) {
        long long value = 0;
        long long norm = 0;
        long long place = 1;
        for (int i = 0; i < dim; ++i) {
            value += digits[sz(i)] * place;
            norm += static_cast<long long>(digits[sz(i)]) * digits[sz(i)];
            place *= base;
        }
        if (value < limit) out.emplace_back(static_cast<int>(value), norm);
        int i = 0;
        while (i < dim && digits[sz(i)] == bound) digits[sz(i++)] = 0;
        if (i == dim) break;
        ++digits[sz(i)];
    }
}

} // namespace

bool is_ap_free(const std::vector<int>& s)
{
    std::set<int> members(s.begin(), s.end());
    for (auto a = members.begin(); a != members.end(); ++a) {
        for (auto c = std::next(a); c != members.end(); ++c) {
            if ((*a + *c) % 2 == 0 && members.count((*a + *c) / 2)) return false;
        }
    }
    return true;
}

BehrendSet behrend(int n_max)
{
    if (n_max < 1) throw std::invalid_argument("behrend: n_max must be at least 1");
    BehrendSet best;
    best.n_max = n_max;
    for (int base = 3; base <= n_max + 2; ++base) {
        const int bound = (base - 1) / 2;
        long long reach = 1;
        for (int dim = 1; dim <= 31; ++dim) {
            std::vector<std::pair<int, long long>> points;
            digit_vectors(base, dim, bound, n_max, points);
            std::vector<int> chosen;
            long long radius = -1;
            if (bound == 1) {
                for (const auto& p : points) chosen.push_back(p.first + 1);
            } else {
                std::map<long long, std::vector<int>> spheres;
                for (const auto& p : points) spheres[p.second].push_back(p.first + 1);
                for (const auto& [r, group] : spheres) {
                    if (group.size() > chosen.size()) {
                        chosen = group;
                        radius = r;
                    }
                }
            }
            std::sort(chosen.begin(), chosen.end());
            if (chosen.size() > best.members.size()) {
                best.members = chosen;
                best.base = base;
                best.dimension = dim;
                best.digit_bound = bound;
                best.radius = radius;
            }
            reach *= base;
            if (reach >= n_max) break;
        }
    }
    if (!is_ap_free(best.members)) throw std::logic_error("behrend: construction is not 3-AP-free");
    return best;
}

RSGraph rs_graph(int k, const std::vector<int>& cycle, int n_max)
{
    if (k < 3) throw std::invalid_argument("rs_graph: k must be at least 3");
    if (n_max < 1) throw std::invalid_argument("rs_graph: n_max must be at least 1");
    const int l = static_cast<int>(cycle.size());
    if (l < 3 || l > k) throw std::invalid_argument("rs_graph: cycle length must lie in 3..k");
    std::vector<bool> seen(sz(k), false);
    for (int i : cycle) {
        if (i < 0 || i >= k) throw std::invalid_argument("rs_graph: cycle index " + std::to_string(i + 1) + " out of range");
        if (seen[sz(i)]) throw std::invalid_argument("rs_graph: cycle index " + std::to_string(i + 1) + " repeated");
        seen[sz(i)] = true;
    }
    RSGraph r;
    r.k = k;
    r.n_max = n_max;
    r.cycle = cycle;
    r.adj.assign(sz(k * n_max), std::vector<bool>(sz(k * n_max), false));
    const int span = (n_max - 1) / (k - 1);
    if (span >= 1) r.differences = behrend(span).members;
    for (int d : r.differences) {
        for (int a = 0; a + (k - 1) * d <= n_max - 1; ++a) {
            std::vector<int> clique;
            for (int i = 0; i < k; ++i) clique.push_back(r.vertex(i, a + i * d));
            for (int i = 0; i < k; ++i) {
                for (int j = i + 1; j < k; ++j) {
                    r.adj[sz(clique[sz(i)])][sz(clique[sz(j)])] = true;
                    r.adj[sz(clique[sz(j)])][sz(clique[sz(i)])] = true;
                }
            }
            r.cliques.push_back(std::move(clique));
        }
    }
    const long long v = r.vertices();
    r.delta = Rational(static_cast<long long>(r.cliques.size())) / Rational(v * v);
    return r;
}

std::uint64_t count_patterned_cycles(const RSGraph& r)
{
    const int l = static_cast<int>(r.cycle.size());
    std::uint64_t total = 0;
    for (int x = 0; x < r.n_max; ++x) {
        std::vector<std::uint64_t> ways(sz(r.n_max), 0);
        ways[sz(x)] = 1;
        for (int j = 0; j + 1 < l; ++j) {
            std::vector<std::uint64_t> next(sz(r.n_max), 0);
            for (int a = 0; a < r.n_max; ++a) {
                if (!ways[sz(a)]) continue;
                const int u = r.vertex(r.cycle[sz(j)], a);
                for (int b = 0; b < r.n_max; ++b) {
                    if (r.adjacent(u, r.vertex(r.cycle[sz(j + 1)], b))) next[sz(b)] += ways[sz(a)];
                }
            }
            ways = std::move(next);
        }
        const int start = r.vertex(r.cycle[0], x);
        for (int b = 0; b < r.n_max; ++b) {
            if (ways[sz(b)] && r.adjacent(r.vertex(r.cycle[sz(l - 1)], b), start)) total += ways[sz(b)];
        }
    }
    return total;
}

RSAudit audit_rs_graph(const RSGraph& r)
{
    RSAudit a;
    const int n = r.vertices();
    a.independent_parts = true;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (r.adjacent(u, v) && r.part_of(u) == r.part_of(v)) a.independent_parts = false;
        }
    }
    a.transversal = true;
    for (const auto& c : r.cliques) {
        if (static_cast<int>(c.size()) != r.k) a.transversal = false;
        for (int i = 0; i < static_cast<int>(c.size()); ++i) {
            if (r.part_of(c[sz(i)]) != i) a.transversal = false;
        }
    }
    std::vector<std::vector<int>> owner(sz(n), std::vector<int>(sz(n), 0));
    a.edge_disjoint = true;
    for (const auto& c : r.cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (++owner[sz(c[i])][sz(c[j])] > 1) a.edge_disjoint = false;
                ++owner[sz(c[j])][sz(c[i])];
            }
        }
    }
    a.union_exact = true;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (r.adjacent(u, v) != (owner[sz(u)][sz(v)] > 0)) a.union_exact = false;
        }
    }
    a.density_ok = Rational(static_cast<long long>(r.cliques.size())) >= r.delta * Rational(static_cast<long long>(n) * n);
    a.patterned_cycles = count_patterned_cycles(r);
    a.cycle_limit = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    a.cycle_bound = a.patterned_cycles <= a.cycle_limit;
    return a;
}

BlowupTournament blowup_tournament(const OrientedGraph& h, const BlowupOptions& options)
{
    const auto two = acyclic_k_coloring(h, 2);
    if (two.found()) throw std::invalid_argument("blowup: H is 2-colorable");
    if (two.exhausted()) throw std::invalid_argument("blowup: 2-colorability undecided within budget");

    BlowupTournament b;
    b.h = h;
    b.seed = options.seed;
    b.n_requested = options.n;
    b.planted = options.planted;

    CoreFamily family;
    try {
        family = core_family(h);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("blowup: core family stage failed: ") + e.what());
    }
    b.k_member = select_k(family);
    const LabeledGraph& kg = b.k_member.core;
    b.k_labels = kg.labels();
    const int k = kg.size();
    const auto hom = find_oph(b.k_member.backedge, kg);
    if (!hom.found()) throw std::invalid_argument("blowup: homomorphism stage failed");
    b.g = *hom.value;

    const int hn = h.order();
    b.coloring.assign(sz(hn), 0);
    for (int v = 0; v < hn; ++v) {
        b.coloring[sz(v)] = kg.position(b.g(b.k_member.labeling[sz(v)])) + 1;
    }
    b.d = OrientedGraph(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!kg.adjacent(i, j)) b.d.add_edge(i, j);
        }
    }
    for (int label : odd_cycle_certificate(kg)) b.cycle.push_back(kg.position(label));

    try {
        b.r = rs_graph(k, b.cycle, options.n_max);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("blowup: RS graph stage failed: ") + e.what());
    }
    const int rv = b.r.vertices();
    b.block = options.n / rv;
    if (b.block < 1) {
        throw std::invalid_argument("blowup: n = " + std::to_string(options.n) + " is below |V(R)| = " +
                                    std::to_string(rv));
    }
    try {
        b.f = build_forcing(h, b.coloring, b.d, b.block, options.seed);
        if (options.planted) plant_block_copies(b.f, h, b.coloring);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("blowup: forcing stage failed: ") + e.what());
    }

    const int n = rv * b.block;
    OrientedGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (b.part_of(u) == b.part_of(v) || !b.r.adjacent(b.base_of(u), b.base_of(v))) g.add_edge(u, v);
        }
    }
    for (const auto& c : b.r.cliques) {
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                for (int a = 0; a < b.block; ++a) {
                    for (int c2 = 0; c2 < b.block; ++c2) {
                        const int x = b.block_start(c[sz(i)]) + a;
                        const int y = b.block_start(c[sz(j)]) + c2;
                        if (b.f.has_edge(b.f.vertex(i, a), b.f.vertex(j, c2))) g.add_edge(x, y);
                        else g.add_edge(y, x);
                    }
                }
            }
        }
    }
    b.t = Tournament(std::move(g));
    return b;
}

BlowupAudit audit_blowup(const BlowupTournament& b)
{
    BlowupAudit a;
    const int n = b.order();
    const int k = b.r.k;
    const int part_len = b.r.n_max * b.block;
    a.item1 = true;
    a.item2 = true;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool same = u / part_len == v / part_len;
            if (same && !b.t.beats(u, v)) a.item1 = false;
            if (!same && !b.r.adjacent(u / b.block, v / b.block) && !b.t.beats(u, v)) a.item2 = false;
        }
    }
    a.item3 = true;
    for (const auto& c : b.r.cliques) {
        for (int x = 0; x < b.f.order(); ++x) {
            for (int y = 0; y < b.f.order(); ++y) {
                if (b.f.part_of(x) == b.f.part_of(y)) continue;
                const int tx = c[sz(b.f.part_of(x))] * b.block + b.f.index_of(x);
                const int ty = c[sz(b.f.part_of(y))] * b.block + b.f.index_of(y);
                if (b.f.has_edge(x, y) != b.t.beats(tx, ty)) a.item3 = false;
            }
        }
    }
    a.k_nonedges = true;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (b.k_member.core.adjacent(i, j)) continue;
            std::vector<int> xi, xj;
            for (int t = 0; t < part_len; ++t) {
                xi.push_back(i * part_len + t);
                xj.push_back(j * part_len + t);
            }
            if (density(b.t, xi, xj).density != Rational(1)) a.k_nonedges = false;
        }
    }
    return a;
}

namespace {

// C-tuple step from cycle position j (part i_j) to j+1 (part i_{j+1}).
bool c_step(const BlowupTournament& b, int j, int u, int v)
{
    const int l = static_cast<int>(b.cycle.size());
    const int next = (j + 1) % l;
    return b.cycle[sz(j)] < b.cycle[sz(next)] ? b.t.beats(v, u) : b.t.beats(u, v);
}

} // namespace

std::uint64_t count_c_tuples(const BlowupTournament& b)
{
    const int l = static_cast<int>(b.cycle.size());
    const int part_len = b.r.n_max * b.block;
    std::uint64_t total = 0;
    for (int s = 0; s < part_len; ++s) {
        std::vector<std::uint64_t> ways(sz(part_len), 0);
        ways[sz(s)] = 1;
        for (int j = 0; j + 1 < l; ++j) {
            std::vector<std::uint64_t> next(sz(part_len), 0);
            for (int a = 0; a < part_len; ++a) {
                if (!ways[sz(a)]) continue;
                const int u = b.cycle[sz(j)] * part_len + a;
                for (int c = 0; c < part_len; ++c) {
                    if (c_step(b, j, u, b.cycle[sz(j + 1)] * part_len + c)) next[sz(c)] += ways[sz(a)];
                }
            }
            ways = std::move(next);
        }
        const int start = b.cycle[0] * part_len + s;
        for (int c = 0; c < part_len; ++c) {
            if (ways[sz(c)] && c_step(b, l - 1, b.cycle[sz(l - 1)] * part_len + c, start)) total += ways[sz(c)];
        }
    }
    return total;
}

LocalizationReport audit_copy_localization(const BlowupTournament& b, std::uint64_t max_embeddings)
{
    LocalizationReport rep;
    const int l = static_cast<int>(b.cycle.size());
    const int part_len = b.r.n_max * b.block;
    const bool finished = for_each_embedding(b.t.graph(), b.h, [&](const Embedding& e) {
        std::vector<std::vector<int>> choices(sz(l));
        for (int j = 0; j < l; ++j) {
            for (int v : e) {
                if (v / part_len == b.cycle[sz(j)]) choices[sz(j)].push_back(v);
            }
        }
        std::vector<int> pick(sz(l));
        std::function<bool(int)> search = [&](int j) -> bool {
            if (j == l) {
                if (!c_step(b, l - 1, pick[sz(l - 1)], pick[0])) return false;
                for (int t = 0; t < l; ++t) {
                    if (!b.r.adjacent(b.base_of(pick[sz(t)]), b.base_of(pick[sz((t + 1) % l)]))) return false;
                }
                return true;
            }
            for (int v : choices[sz(j)]) {
                if (j > 0 && !c_step(b, j - 1, pick[sz(j - 1)], v)) continue;
                pick[sz(j)] = v;
                if (search(j + 1)) return true;
            }
            return false;
        };
        if (!search(0)) ++rep.violations;
        return ++rep.embeddings < max_embeddings;
    });
    rep.decided = finished;
    rep.automorphisms = count_embeddings(b.h, b.h);
    rep.copies = rep.embeddings / rep.automorphisms;
    rep.c_size = count_c_tuples(b);
    const long long n = b.order();
    BigInt nl = 1;
    for (int i = 0; i < l; ++i) nl *= n;
    rep.c_limit = Rational(nl) / Rational(b.r.vertices());
    rep.c_bound = Rational(BigInt(rep.c_size)) <= rep.c_limit;
    rep.copy_limit = BigInt(rep.c_size);
    for (int i = 0; i < b.h.order() - l; ++i) rep.copy_limit *= n;
    rep.copy_bound = BigInt(rep.copies) <= rep.copy_limit;
    return rep;
}

FarnessReport farness_certificate(const BlowupTournament& b, const Tournament& mutated)
{
    const int n = b.order();
    if (mutated.order() != n) throw std::invalid_argument("farness: mutated tournament has a different order");
    FarnessReport rep;

    OrientedGraph mixed(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool cut = b.cut_pair(u, v);
            const bool changed = b.t.beats(u, v) != mutated.beats(u, v);
            if (changed) ++(cut ? rep.reversed_cut : rep.reversed_cluster);
            const Tournament& src = cut ? b.t : mutated;
            if (src.beats(u, v)) mixed.add_edge(u, v);
            else mixed.add_edge(v, u);
        }
    }
    const Tournament t2(std::move(mixed));

    const int k = b.r.k;
    const int m = b.block;
    for (const auto& c : b.r.cliques) {
        std::vector<int> ids;
        for (int i = 0; i < k; ++i) {
            for (int a = 0; a < m; ++a) ids.push_back(b.block_start(c[sz(i)]) + a);
        }
        const Tournament local = t2.induced(ids);
        const auto cert = certify_completion(b.f, local, b.h, b.coloring);
        rep.per_clique.push_back(cert.copies.size());
        for (const auto& copy : cert.copies) {
            Embedding global;
            for (int v : copy) global.push_back(ids[sz(v)]);
            rep.copies.push_back(std::move(global));
        }
    }
    rep.family = rep.copies.size();
    rep.certified = static_cast<long long>(rep.family) - static_cast<long long>(rep.reversed_cut);

    rep.valid = true;
    rep.disjoint = true;
    std::set<std::pair<int, int>> used;
    for (const auto& e : rep.copies) {
        if (!is_embedding(t2.graph(), b.h, e)) rep.valid = false;
        if (is_embedding(mutated.graph(), b.h, e)) ++rep.surviving;
        for (const Edge& edge : b.h.edges()) {
            const int x = e[sz(edge.from)];
            const int y = e[sz(edge.to)];
            if (!b.cut_pair(x, y)) continue;
            if (!used.emplace(std::min(x, y), std::max(x, y)).second) rep.disjoint = false;
        }
    }
    return rep;
}

void write_provenance(std::ostream& out, const BlowupTournament& b)
{
    const auto list = [&](const std::vector<int>& v, int shift) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + shift);
        return s;
    };
    out << "h: " << b.h.order() << '\n';
    out << "k: " << b.r.k << '\n';
    out << "k_graph: " << describe(b.k_member.core) << '\n';
    out << "witness_labeling: " << list(b.k_member.labeling, 0) << '\n';
    out << "coloring: " << list(b.coloring, 0) << '\n';
    out << "cycle: " << list(b.cycle, 1) << '\n';
    out << "n_max: " << b.r.n_max << '\n';
    out << "differences: " << list(b.r.differences, 0) << '\n';
    out << "cliques: " << b.r.cliques.size() << '\n';
    out << "delta: " << to_string(b.r.delta) << '\n';
    out << "block: " << b.block << '\n';
    out << "n: " << b.order() << '\n';
    out << "seed: " << b.seed << '\n';
    out << "coins: " << b.f.coins_used << '\n';
    out << "planted: " << (b.planted ? "yes" : "no") << '\n';
    for (std::size_t c = 0; c < b.r.cliques.size(); ++c) {
        out << "clique " << c + 1 << ": " << list(b.r.cliques[c], 1) << '\n';
    }
    for (int x = 0; x < b.r.vertices(); ++x) {
        out << "block " << x + 1 << ": " << b.block_start(x) + 1 << ' ' << b.block_start(x) + b.block << '\n';
    }
}

} // namespace tourn
