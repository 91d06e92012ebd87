// Command-line front end. Each subcommand prints a human summary, a "---"
// line, then key: value lines. Exit codes: 0 success, 1 negative decision,
// 2 budget exhausted, 3 input error.

#include "tourn/colorability.hpp"
#include "tourn/core.hpp"
#include "tourn/forcing.hpp"
#include "tourn/hardness.hpp"
#include "tourn/io.hpp"
#include "tourn/lowerbound.hpp"
#include "tourn/orderedhom.hpp"
#include "tourn/regularity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tourn;

namespace {

enum Exit { ok = 0, negative = 1, exhausted = 2, input_error = 3 };

struct Config {
    std::uint64_t seed = 0;
    std::uint64_t budget = default_node_budget;
    std::string format = "matrix";
    std::string out;
};

class Report {
public:
    void line(std::string s)
    {
        while (!s.empty() && s.back() == '\n') s.pop_back();
        summary_.push_back(std::move(s));
    }
    template <typename T>
    void kv(const std::string& key, const T& value)
    {
        std::ostringstream s;
        s << value;
        values_.emplace_back(key, s.str());
    }
    void emit(const Config& cfg) const
    {
        std::ostringstream s;
        for (const auto& l : summary_) s << l << '\n';
        s << "---\n";
        for (const auto& [k, v] : values_) s << k << ": " << v << '\n';
        if (cfg.out.empty()) {
            std::cout << s.str();
            return;
        }
        std::ofstream f(cfg.out);
        if (!f) throw std::runtime_error("cannot write " + cfg.out);
        f << s.str();
    }

private:
    std::vector<std::string> summary_;
    std::vector<std::pair<std::string, std::string>> values_;
};

// Input error raised by the front end itself.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::string join(const std::vector<int>& v, int shift = 0, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i] + shift);
    return s;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

const char* outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::found: return "found";
    case Outcome::none: return "none";
    default: return "exhausted";
    }
}

int outcome_exit(Outcome o) { return o == Outcome::found ? ok : o == Outcome::none ? negative : exhausted; }

GraphFormat output_format(const Config& cfg) { return parse_graph_format(cfg.format); }

void write_artifact(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    body(f);
}

OrientedGraph read_graph(const std::string& path)
{
    auto in = open(path);
    return read_oriented_graph(in);
}

Tournament read_tourn(const std::string& path)
{
    auto in = open(path);
    return read_tournament(in);
}

// A proper colouring with k = max(2, chi) nonempty classes, for forcing.
Coloring forcing_coloring(const OrientedGraph& h, std::uint64_t budget)
{
    const auto chi = chromatic_number(h, budget);
    if (chi.outcome != Outcome::found) throw std::runtime_error("chromatic number undecided within budget");
    Coloring c = chi.coloring;
    if (chi.k == 1 && h.order() >= 2) c.back() = 2;
    return c;
}

int cmd_color(const Config& cfg, const std::string& file, int k)
{
    const auto g = read_graph(file);
    const auto r = acyclic_k_coloring(g, k, cfg.budget);
    Report rep;
    rep.line(std::string("acyclic ") + std::to_string(k) + "-coloring: " + outcome_name(r.outcome));
    rep.kv("n", g.order());
    rep.kv("k", k);
    rep.kv("outcome", outcome_name(r.outcome));
    if (r.found()) rep.kv("coloring", join(*r.value));
    rep.kv("nodes", r.nodes);
    rep.emit(cfg);
    return outcome_exit(r.outcome);
}

int cmd_chromatic(const Config& cfg, const std::string& file)
{
    const auto g = read_graph(file);
    const auto r = chromatic_number(g, cfg.budget);
    Report rep;
    if (r.outcome == Outcome::found) rep.line("dichromatic number " + std::to_string(r.k));
    else rep.line("budget exhausted; upper bound " + std::to_string(r.k));
    rep.kv("n", g.order());
    rep.kv("outcome", outcome_name(r.outcome));
    rep.kv("chromatic", r.k);
    if (!r.coloring.empty()) rep.kv("coloring", join(r.coloring));
    rep.kv("nodes", r.nodes);
    rep.emit(cfg);
    return r.outcome == Outcome::found ? ok : exhausted;
}

int cmd_classify(const Config& cfg, const std::string& file)
{
    const auto g = read_graph(file);
    const auto r = classify(g, cfg.budget);
    Report rep;
    rep.line(r.found() ? to_string(*r.value) : "undecided");
    rep.kv("n", g.order());
    rep.kv("class", r.found() ? to_string(*r.value) : "undecided");
    rep.kv("nodes", r.nodes);
    rep.emit(cfg);
    return r.found() ? ok : exhausted;
}

int cmd_count(const Config& cfg, const std::string& host_file, const std::string& pattern_file)
{
    const auto host = read_graph(host_file);
    const auto pattern = read_graph(pattern_file);
    const auto c = count_copies(host, pattern);
    Report rep;
    rep.line("copies " + std::to_string(c.unlabeled));
    rep.kv("host_n", host.order());
    rep.kv("pattern_n", pattern.order());
    rep.kv("embeddings", c.labeled);
    rep.kv("automorphisms", c.automorphisms);
    rep.kv("count", c.unlabeled);
    rep.emit(cfg);
    return c.unlabeled ? ok : negative;
}

int cmd_distance(const Config& cfg, const std::string& t_file, const std::string& h_file)
{
    const auto t = read_tourn(t_file);
    const auto h = read_graph(h_file);
    const auto r = distance_to_h_free(t, h, cfg.budget);
    Report rep;
    const char* status = r.status == DistanceStatus::exact ? "exact"
                         : r.status == DistanceStatus::infeasible ? "infeasible" : "exhausted";
    if (r.status == DistanceStatus::exact) rep.line("distance " + std::to_string(r.distance));
    else if (r.status == DistanceStatus::infeasible) rep.line("no H-free tournament on these vertices");
    else rep.line("budget exhausted; bounds " + std::to_string(r.lower_bound) + ".." +
                  (r.has_upper ? std::to_string(r.distance) : std::string("?")));
    rep.kv("status", status);
    if (r.has_upper) rep.kv("distance", r.distance);
    rep.kv("lower_bound", r.lower_bound);
    const Rational n2 = Rational(t.order()) * t.order();
    if (r.has_upper && t.order() > 0) rep.kv("epsilon", annotated(Rational(r.distance) / n2));
    std::string rev;
    for (const Edge& e : r.reversals) rev += (rev.empty() ? "" : ", ") + std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1);
    rep.kv("reversals", rev);
    rep.kv("nodes", r.nodes);
    rep.emit(cfg);
    return r.status == DistanceStatus::exact ? ok : r.status == DistanceStatus::infeasible ? negative : exhausted;
}

int cmd_core(const Config& cfg, const std::string& file)
{
    auto in = open(file);
    const auto g = read_labeled_graph(in);
    const auto r = ordered_core(g, cfg.budget);
    Report rep;
    if (!r.found()) {
        rep.line("budget exhausted");
        rep.kv("nodes", r.nodes);
        rep.emit(cfg);
        return exhausted;
    }
    rep.line("ordered core " + describe(r.value->core));
    rep.kv("input", describe(g));
    rep.kv("core", describe(r.value->core));
    rep.kv("core_size", r.value->core.size());
    std::string map;
    for (std::size_t i = 0; i < r.value->retraction.source.size(); ++i) {
        map += (i ? " " : "") + std::to_string(r.value->retraction.source[i]) + "->" +
               std::to_string(r.value->retraction.image[i]);
    }
    rep.kv("retraction", map);
    rep.kv("nodes", r.nodes);
    rep.emit(cfg);
    return ok;
}

int cmd_kofh(const Config& cfg, const std::string& file)
{
    const auto h = read_graph(file);
    const auto family = core_family(h, cfg.budget);
    const auto& k = select_k(family);
    Report rep;
    rep.line("K(H) = " + describe(k.core));
    rep.kv("h", h.order());
    rep.kv("family", family.members.size());
    rep.kv("maximal", maximal_members(family).size());
    rep.kv("antisymmetry_violations", antisymmetry_violations(family).size());
    rep.kv("k", k.core.size());
    rep.kv("k_graph", describe(k.core));
    rep.kv("witness_labeling", join(k.labeling));
    const int chi = graph_chromatic_number(k.core);
    rep.kv("k_chromatic", chi);
    if (chi >= 3) rep.kv("odd_cycle", join(odd_cycle_certificate(k.core)));
    rep.emit(cfg);
    return ok;
}

int cmd_forcing_build(const Config& cfg, const std::string& file, int m, const std::string& write)
{
    const auto h = read_graph(file);
    const Coloring c = forcing_coloring(h, cfg.budget);
    int k = 0;
    for (int x : c) k = std::max(k, x);
    const auto f = build_forcing(h, c, OrientedGraph(k), m, cfg.seed);
    write_artifact(write, [&](std::ostream& o) { write_kpartite(o, f); });
    Report rep;
    rep.line("F with " + std::to_string(k) + " parts of size " + std::to_string(m));
    rep.kv("parts", k);
    rep.kv("m", m);
    rep.kv("coloring", join(c));
    rep.kv("seed", cfg.seed);
    rep.kv("coins", f.coins_used);
    rep.kv("gamma", annotated(forcing_gamma(h.order())));
    if (write.empty()) {
        std::ostringstream s;
        write_kpartite(s, f);
        rep.line(s.str());
    }
    rep.emit(cfg);
    return ok;
}

int cmd_forcing_check(const Config& cfg, const std::string& f_file, const std::string& h_file)
{
    auto in = open(f_file);
    const auto f = read_kpartite(in);
    const auto h = read_graph(h_file);
    const auto r = forces_exhaustive(f, h);
    Report rep;
    rep.line(!r.decided ? "too many completions to check" : r.forces ? "every completion contains H"
                                                                     : "found an H-free completion");
    rep.kv("decided", yes(r.decided));
    rep.kv("forces", yes(r.forces));
    rep.kv("completions", r.completions);
    rep.emit(cfg);
    if (r.counterexample) write_tournament(std::cout, *r.counterexample, output_format(cfg));
    return !r.decided ? exhausted : r.forces ? ok : negative;
}

int cmd_forcing_search(const Config& cfg, const std::string& file, int m_max, const std::string& write)
{
    const auto h = read_graph(file);
    const auto r = search_min_forcing(h, m_max, cfg.budget);
    Report rep;
    rep.line(std::string("minimal forcing search: ") + outcome_name(r.outcome));
    rep.kv("outcome", outcome_name(r.outcome));
    rep.kv("m_max", m_max);
    if (r.found()) {
        rep.kv("m", r.value->part_size());
        write_artifact(write, [&](std::ostream& o) { write_kpartite(o, *r.value); });
        std::ostringstream s;
        write_kpartite(s, *r.value);
        rep.line(s.str());
    }
    rep.kv("completions", r.nodes);
    rep.emit(cfg);
    return outcome_exit(r.outcome);
}

int cmd_regularity(const Config& cfg, const std::string& t_file, const std::string& f_file, const std::string& delta_text)
{
    const auto t = read_tourn(t_file);
    auto in = open(f_file);
    const auto f = read_kpartite(in);
    const Rational delta = parse_rational(delta_text);
    DecompositionOptions opt;
    opt.seed = cfg.seed;
    const auto d = strong_decomposition(t, f, delta, opt);
    Report rep;
    rep.line(std::string("strong decomposition: ") + to_string(d.kind));
    rep.kv("kind", to_string(d.kind));
    if (!d.stage.empty()) rep.kv("stage", d.stage);
    rep.kv("delta", annotated(delta));
    rep.kv("q", d.q_parts.size());
    rep.kv("fine_parts", d.fine_parts.size());
    rep.kv("gamma", annotated(d.gamma));
    rep.kv("attempts", d.attempts);
    rep.kv("copies", d.copies);
    int code = ok;
    if (d.kind == DecompositionKind::decomposition) {
        const auto a = audit_decomposition(t, d, delta);
        rep.kv("item1_failures", a.item1_failures);
        rep.kv("item1_limit", annotated(d.item1_limit));
        rep.kv("item1", yes(a.item1));
        rep.kv("item2", yes(a.item2));
        rep.kv("w_inside_q", yes(a.w_inside_q));
        rep.kv("q_equipartition", yes(a.q_equipartition));
        rep.kv("min_w", d.min_w);
        rep.kv("representatives", join(d.representatives, 1));
        if (!(a.item1 && a.item2 && a.w_inside_q && a.q_equipartition)) code = negative;
    } else if (d.kind == DecompositionKind::inconclusive) {
        code = exhausted;
    }
    rep.emit(cfg);
    return code;
}

int cmd_behrend(const Config& cfg, int n)
{
    const auto b = behrend(n);
    Report rep;
    rep.line("3-AP-free set of size " + std::to_string(b.members.size()) + " in [1," + std::to_string(n) + "]");
    rep.kv("n", n);
    rep.kv("size", b.members.size());
    rep.kv("base", b.base);
    rep.kv("dimension", b.dimension);
    rep.kv("digit_bound", b.digit_bound);
    rep.kv("radius", b.radius < 0 ? std::string("cube") : std::to_string(b.radius));
    rep.kv("members", join(b.members));
    rep.kv("ap_free", yes(is_ap_free(b.members)));
    rep.emit(cfg);
    return ok;
}

std::vector<int> parse_cycle(const std::string& text, int k)
{
    std::vector<int> cycle;
    if (text.empty()) {
        for (int i = 0; i < std::min(k, 3); ++i) cycle.push_back(i);
        return cycle;
    }
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            cycle.push_back(std::stoi(item) - 1);
        } catch (const std::exception&) {
            throw InputError("bad cycle entry '" + item + "'");
        }
    }
    return cycle;
}

int cmd_rsgraph(const Config& cfg, int k, int n_max, const std::string& cycle_text)
{
    const auto r = rs_graph(k, parse_cycle(cycle_text, k), n_max);
    const auto a = audit_rs_graph(r);
    Report rep;
    rep.line("R with " + std::to_string(r.vertices()) + " vertices and " + std::to_string(r.cliques.size()) + " cliques");
    rep.kv("k", k);
    rep.kv("n_max", n_max);
    rep.kv("cycle", join(r.cycle, 1));
    rep.kv("differences", join(r.differences));
    rep.kv("cliques", r.cliques.size());
    rep.kv("delta", annotated(r.delta));
    rep.kv("independent_parts", yes(a.independent_parts));
    rep.kv("transversal", yes(a.transversal));
    rep.kv("edge_disjoint", yes(a.edge_disjoint));
    rep.kv("union_exact", yes(a.union_exact));
    rep.kv("patterned_cycles", a.patterned_cycles);
    rep.kv("cycle_limit", a.cycle_limit);
    rep.kv("cycle_bound", yes(a.cycle_bound));
    rep.emit(cfg);
    const bool good = a.independent_parts && a.transversal && a.edge_disjoint && a.union_exact && a.cycle_bound;
    return good ? ok : negative;
}

BlowupTournament make_blowup(const Config& cfg, const std::string& file, int n, int n_max, bool planted)
{
    BlowupOptions o;
    o.n = n;
    o.n_max = n_max;
    o.seed = cfg.seed;
    o.planted = planted;
    return blowup_tournament(read_graph(file), o);
}

int cmd_blowup(const Config& cfg, const std::string& file, int n, int n_max, bool planted, const std::string& write)
{
    const auto b = make_blowup(cfg, file, n, n_max, planted);
    const auto a = audit_blowup(b);
    write_artifact(write, [&](std::ostream& o) { write_tournament(o, b.t, output_format(cfg)); });
    if (!write.empty()) write_artifact(write + ".provenance", [&](std::ostream& o) { write_provenance(o, b); });
    Report rep;
    rep.line("blow-up tournament on " + std::to_string(b.order()) + " vertices");
    rep.kv("n", b.order());
    rep.kv("k_graph", describe(b.k_member.core));
    rep.kv("cycle", join(b.cycle, 1));
    rep.kv("block", b.block);
    rep.kv("cliques", b.r.cliques.size());
    rep.kv("item1", yes(a.item1));
    rep.kv("item2", yes(a.item2));
    rep.kv("item3", yes(a.item3));
    rep.kv("k_nonedges", yes(a.k_nonedges));
    rep.emit(cfg);
    return a.item1 && a.item2 && a.item3 && a.k_nonedges ? ok : negative;
}

int cmd_audit_copies(const Config& cfg, const std::string& file, int n, int n_max, bool planted)
{
    const auto b = make_blowup(cfg, file, n, n_max, planted);
    const auto r = audit_copy_localization(b, cfg.budget);
    Report rep;
    rep.line(std::to_string(r.embeddings) + " embeddings, " + std::to_string(r.violations) + " outside the cycle tuples");
    rep.kv("n", b.order());
    rep.kv("decided", yes(r.decided));
    rep.kv("embeddings", r.embeddings);
    rep.kv("violations", r.violations);
    rep.kv("copies", r.copies);
    rep.kv("c_size", r.c_size);
    rep.kv("c_limit", annotated(r.c_limit));
    rep.kv("c_bound", yes(r.c_bound));
    rep.kv("copy_limit", r.copy_limit);
    rep.kv("copy_bound", yes(r.copy_bound));
    rep.emit(cfg);
    if (!r.decided) return exhausted;
    return r.violations == 0 && r.c_bound && r.copy_bound ? ok : negative;
}

int cmd_gadget_verify(const Config& cfg)
{
    const auto r = verify_gadget();
    Report rep;
    rep.line("gadget: " + std::to_string(r.proper_count) + " proper colorings among 128");
    for (unsigned mask = 0; mask < 128; ++mask) {
        std::string s;
        for (int v = 0; v < 7; ++v) s += ((mask >> v) & 1U) ? 'B' : 'R';
        const bool proper = gadget_coloring_proper(gadget(), mask);
        rep.line("  " + s + (proper ? " proper" : " improper"));
    }
    for (const auto& f : r.transcription_failures) rep.line("transcription: " + f);
    rep.kv("assignments", 128);
    rep.kv("proper", r.proper_count);
    rep.kv("transcription", yes(r.transcription_ok));
    rep.kv("item1", yes(r.item1));
    rep.kv("item2", yes(r.item2));
    rep.kv("separating", r.separating.size());
    rep.emit(cfg);
    return r.transcription_ok && r.item1 && r.item2 ? ok : negative;
}

UndirectedGraph read_ugraph(const std::string& path)
{
    auto in = open(path);
    return read_undirected_graph(in);
}

int cmd_reduce(const Config& cfg, const std::string& file, const std::string& write)
{
    const auto g = read_ugraph(file);
    const auto r = reduce(g);
    const auto a = audit_reduction(g, r);
    write_artifact(write, [&](std::ostream& o) { write_tournament(o, r.t, output_format(cfg)); });
    if (!write.empty()) write_artifact(write + ".roles", [&](std::ostream& o) { write_roles(o, r); });
    Report rep;
    rep.line("T(G) on " + std::to_string(r.t.order()) + " vertices from " + std::to_string(r.triangles.size()) +
             " triangles");
    rep.kv("n", g.order());
    rep.kv("triangles", r.triangles.size());
    rep.kv("order", r.t.order());
    rep.kv("audit", yes(a.ok()));
    rep.emit(cfg);
    return a.ok() ? ok : negative;
}

int cmd_check_reduction(const Config& cfg, const std::string& file)
{
    const auto g = read_ugraph(file);
    const auto r = check_reduction(g, cfg.budget);
    Report rep;
    if (!r.decided) rep.line("budget exhausted");
    else rep.line(std::string("triangle-free cut ") + yes(r.cut_exists) + ", T(G) 2-colorable " + yes(r.colorable));
    rep.kv("decided", yes(r.decided));
    rep.kv("cut", yes(r.cut_exists));
    rep.kv("colorable", yes(r.colorable));
    rep.kv("agree", yes(r.agree));
    rep.kv("lifted_valid", yes(r.lifted_valid));
    if (!r.lifted.empty()) rep.kv("lifted_cut", join(r.lifted));
    rep.kv("nodes", r.nodes);
    rep.emit(cfg);
    if (!r.decided) return exhausted;
    return r.agree && r.lifted_valid ? ok : negative;
}

int cmd_lift(const Config& cfg, const std::string& file, int k, const std::string& write)
{
    const auto t = read_tourn(file);
    const auto l = lift(t, k);
    write_artifact(write, [&](std::ostream& o) { write_tournament(o, l, output_format(cfg)); });
    const auto before = acyclic_k_coloring(t.graph(), k - 1, cfg.budget);
    const auto after = acyclic_k_coloring(l.graph(), k, cfg.budget);
    Report rep;
    rep.line("lift on " + std::to_string(l.order()) + " vertices");
    rep.kv("n", t.order());
    rep.kv("order", l.order());
    rep.kv("k", k);
    rep.kv("t_k_minus_1", outcome_name(before.outcome));
    rep.kv("lift_k", outcome_name(after.outcome));
    if (write.empty()) {
        std::ostringstream s;
        write_tournament(s, l, output_format(cfg));
        rep.line(s.str());
    }
    rep.emit(cfg);
    if (before.exhausted() || after.exhausted()) return exhausted;
    return before.found() == after.found() ? ok : negative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tournament removal-lemma toolkit"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--budget", cfg.budget, "Node budget per solver call");
    app.add_option("--format", cfg.format, "Output graph format")->check(CLI::IsMember({"matrix", "edges"}));
    app.add_option("--out", cfg.out, "Report path");

    std::string a, b, write, cycle, delta = "1/4";
    int k = 2, m = 2, n = 0, n_max = 3, m_max = 3, number = 0;
    bool planted = false;
    std::function<int()> run;

    const auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
    const auto file = [](CLI::App* s, const char* name, std::string& v) { s->add_option(name, v)->required(); };

    auto* s = sub("color", "Acyclic k-coloring");
    file(s, "graph", a);
    s->add_option("-k", k, "Number of colors");
    s->callback([&] { run = [&] { return cmd_color(cfg, a, k); }; });

    s = sub("chromatic", "Dichromatic number");
    file(s, "graph", a);
    s->callback([&] { run = [&] { return cmd_chromatic(cfg, a); }; });

    s = sub("classify", "Easy or hard pattern");
    file(s, "graph", a);
    s->callback([&] { run = [&] { return cmd_classify(cfg, a); }; });

    s = sub("count", "Copies of a pattern in a host");
    file(s, "host", a);
    file(s, "pattern", b);
    s->callback([&] { run = [&] { return cmd_count(cfg, a, b); }; });

    s = sub("distance", "Reversals to destroy every copy");
    file(s, "tournament", a);
    file(s, "pattern", b);
    s->callback([&] { run = [&] { return cmd_distance(cfg, a, b); }; });

    s = sub("core", "Ordered core of a labeled graph");
    file(s, "labeled", a);
    s->callback([&] { run = [&] { return cmd_core(cfg, a); }; });

    s = sub("kofh", "Core family and K(H)");
    file(s, "graph", a);
    s->callback([&] { run = [&] { return cmd_kofh(cfg, a); }; });

    s = sub("forcing-build", "Seeded forcing k-partite tournament");
    file(s, "pattern", a);
    s->add_option("-m", m, "Part size");
    s->add_option("--write", write, "Write F here");
    s->callback([&] { run = [&] { return cmd_forcing_build(cfg, a, m, write); }; });

    s = sub("forcing-check", "Check every completion contains the pattern");
    file(s, "kpartite", a);
    file(s, "pattern", b);
    s->callback([&] { run = [&] { return cmd_forcing_check(cfg, a, b); }; });

    s = sub("forcing-search", "Smallest bipartite forcing F");
    file(s, "pattern", a);
    s->add_option("--m-max", m_max, "Largest part size");
    s->add_option("--write", write, "Write F here");
    s->callback([&] { run = [&] { return cmd_forcing_search(cfg, a, m_max, write); }; });

    s = sub("regularity", "Strong decomposition with audit");
    file(s, "tournament", a);
    file(s, "kpartite", b);
    s->add_option("--delta", delta, "Homogeneity threshold as a fraction");
    s->callback([&] { run = [&] { return cmd_regularity(cfg, a, b, delta); }; });

    s = sub("behrend", "3-AP-free subset of [1,N]");
    s->add_option("N", number)->required();
    s->callback([&] { run = [&] { return cmd_behrend(cfg, number); }; });

    s = sub("rsgraph", "Clique-structured graph R with audits");
    s->add_option("k", k)->required();
    s->add_option("n_max", n_max)->required();
    s->add_option("--cycle", cycle, "Comma-separated 1-based part indices");
    s->callback([&] { run = [&] { return cmd_rsgraph(cfg, k, n_max, cycle); }; });

    s = sub("blowup", "Blow-up tournament with structural audits");
    file(s, "pattern", a);
    s->add_option("--n", n, "Requested order")->required();
    s->add_option("--n-max", n_max, "Part size of R");
    s->add_flag("--planted", planted, "Plant the pattern on block tuples of F");
    s->add_option("--write", write, "Write T here (and T.provenance)");
    s->callback([&] { run = [&] { return cmd_blowup(cfg, a, n, n_max, planted, write); }; });

    s = sub("audit-copies", "Localize every copy in a blow-up");
    file(s, "pattern", a);
    s->add_option("--n", n, "Requested order")->required();
    s->add_option("--n-max", n_max, "Part size of R");
    s->add_flag("--planted", planted, "Plant the pattern on block tuples of F");
    s->callback([&] { run = [&] { return cmd_audit_copies(cfg, a, n, n_max, planted); }; });

    s = sub("gadget-verify", "Sweep all 128 gadget colorings");
    s->callback([&] { run = [&] { return cmd_gadget_verify(cfg); }; });

    s = sub("reduce", "Tournament T(G) from an undirected graph");
    file(s, "graph", a);
    s->add_option("--write", write, "Write T(G) here (and T.roles)");
    s->callback([&] { run = [&] { return cmd_reduce(cfg, a, write); }; });

    s = sub("check-reduction", "Triangle-free cut versus 2-colorability of T(G)");
    file(s, "graph", a);
    s->callback([&] { run = [&] { return cmd_check_reduction(cfg, a); }; });

    s = sub("lift", "Two copies plus a vertex");
    file(s, "tournament", a);
    s->add_option("-k", k, "Target color count")->required();
    s->add_option("--write", write, "Write the lift here");
    s->callback([&] { run = [&] { return cmd_lift(cfg, a, k, write); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }
    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exhausted;
    }
}
