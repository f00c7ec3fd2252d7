// Command-line front end: recognition, orderings, knotting graphs, class
// membership, forbidden-pattern search, verification runs, generators and
// exhaustive enumeration.
//
// Exit codes: 0 positive/pass, 1 negative/counterexample, 2 usage or parse error.

#include <sschordal/sschordal.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

using namespace sschordal;
using json = nlohmann::json;

namespace {

constexpr int exit_positive = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LabelledDigraph read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_labelled(text);
}

Variant parse_variant(const std::string& s) {
    auto v = variant_from_name(s);
    if (!v) throw UsageError("unknown variant " + s + " (chordal, strict, semi-strict)");
    return *v;
}

json arcs_json(const Digraph& d) {
    json a = json::array();
    for (auto [u, v] : d.arcs()) a.push_back({u, v});
    return a;
}

json digraph_json(const Digraph& d, const Labels& labels = {}) {
    json j{{"n", d.order()}, {"arcs", arcs_json(d)}};
    if (!labels.empty()) {
        json names = json::array();
        for (Vertex v = 0; v < d.order(); ++v) names.push_back(labels(v));
        j["labels"] = names;
    }
    return j;
}

std::string names(std::span<const Vertex> vs, const Labels& labels) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + labels(vs[i]);
    return s;
}

std::string tuple_text(const VertexTuple& t, const Labels& labels) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + labels(t[i]);
    return s + ")";
}

// ---- recognize / order -------------------------------------------------------

struct Recognition {
    Variant variant;
    EliminationRun run;
    std::optional<Witness> witness;  // for the lowest stalled vertex
};

Recognition recognise(const Digraph& d, Variant var) {
    Recognition r{var, greedy_eliminate(d, var), std::nullopt};
    if (!r.run.complete()) r.witness = witness_within(d, r.run.stalled, r.run.stalled.first(), var);
    return r;
}

void print_recognition(std::ostream& os, const LabelledDigraph& in, const Recognition& r) {
    os << variant_name(r.variant) << ": " << (r.run.complete() ? "YES" : "NO") << '\n';
    if (r.run.complete()) {
        os << "ordering: " << names(r.run.removed, in.labels) << '\n';
        return;
    }
    const auto& w = *r.witness;
    os << "witness: " << tuple_text({w.u, w.v, w.w}, in.labels) << '\n';
    auto sub = induced(in.digraph, r.run.stalled);
    os << "stalled subdigraph:\n" << serialize(sub.digraph, in.labels.restrict_to(sub.original));
}

json recognition_json(const Recognition& r) {
    json j{{"variant", variant_name(r.variant)}, {"chordal", r.run.complete()}};
    if (r.run.complete()) {
        j["ordering"] = r.run.removed;
    } else {
        j["witness"] = {{"u", r.witness->u}, {"v", r.witness->v}, {"w", r.witness->w}};
        j["stalled"] = r.run.stalled.to_vector();
    }
    return j;
}

int cmd_recognize(const std::string& input, const std::string& variant, bool all, bool as_json) {
    auto in = read_input(input);
    auto selected = parse_variant(variant);
    std::vector<Variant> shown = all ? std::vector<Variant>{Variant::Chordal, Variant::Strict, Variant::SemiStrict}
                                     : std::vector<Variant>{selected};
    json results = json::array();
    bool positive = false;
    for (auto v : shown) {
        auto r = recognise(in.digraph, v);
        if (v == selected) positive = r.run.complete();
        if (as_json)
            results.push_back(recognition_json(r));
        else
            print_recognition(std::cout, in, r);
    }
    if (as_json) std::cout << json{{"results", results}}.dump() << '\n';
    return positive ? exit_positive : exit_negative;
}

int cmd_order(const std::string& input, const std::string& variant, bool as_json) {
    auto in = read_input(input);
    auto ord = elimination_ordering(in.digraph, parse_variant(variant));
    if (as_json) {
        std::cout << json{{"variant", variant_name(parse_variant(variant))},
                          {"ordering", ord ? json(ord->order) : json(nullptr)}}
                         .dump()
                  << '\n';
    } else if (ord) {
        std::cout << names(ord->order, in.labels) << '\n';
    } else {
        std::cout << "none\n";
    }
    return ord ? exit_positive : exit_negative;
}

// ---- knot ----------------------------------------------------------------------

int cmd_knot(const std::string& input, bool dot, bool as_json) {
    auto in = read_input(input);
    auto k = knotting_graph(in.digraph);
    if (dot) {
        std::cout << knotting_dot(k, in.labels);
    } else if (as_json) {
        json classes = json::array();
        for (std::size_t c = 0; c < k.classes().size(); ++c) {
            const auto& cls = k.classes()[c];
            json members = json::array();
            for (auto [u, v] : cls.members) members.push_back({u, v});
            classes.push_back({{"name", k.class_name(static_cast<int>(c), in.labels)},
                               {"owner", cls.owner},
                               {"index", cls.index},
                               {"degree", k.degree(static_cast<int>(c))},
                               {"arcs", members}});
        }
        json edges = json::array();
        for (std::size_t e = 0; e < k.edges().size(); ++e)
            edges.push_back({{"classes", {k.edges()[e].first, k.edges()[e].second}},
                             {"arc", {k.arcs()[e].first, k.arcs()[e].second}}});
        std::cout << json{{"classes", classes}, {"edges", edges}}.dump() << '\n';
    } else {
        std::cout << knotting_listing(k, in.labels);
    }
    return exit_positive;
}

// ---- classify ------------------------------------------------------------------

int cmd_classify(const std::string& input, bool as_json) {
    auto in = read_input(input);
    auto rep = classify(in.digraph);
    if (as_json) {
        json j = json::object();
        for (const auto& f : rep.flags) {
            json e{{"value", f.value}};
            if (f.witness) e["witness"] = *f.witness;
            j[f.name] = e;
        }
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& f : rep.flags) {
            std::cout << f.name << '=' << (f.value ? "true" : "false");
            if (f.witness) std::cout << " witness " << tuple_text(*f.witness, in.labels);
            std::cout << '\n';
        }
    }
    return exit_positive;
}

// ---- forbidden -----------------------------------------------------------------

int cmd_forbidden(const std::string& input, int k_max, bool as_json) {
    auto in = read_input(input);
    const auto& d = in.digraph;
    std::vector<Embedding> hits;
    for (const auto& t : fig1_search_order())
        if (auto e = find_induced(d, t)) hits.push_back(*e);
    if (k_max < 0) k_max = d.order() - 4;
    for (int k = 1; k <= k_max; ++k)
        if (auto e = find_induced(d, lollipop_template(k))) hits.push_back(*e);
    auto cycle = find_nonsym_induced_dicycle(d, 3);

    if (as_json) {
        for (const auto& e : hits) {
            json map = json::array();
            for (std::size_t t = 0; t < e.host.size(); ++t) map.push_back({t, e.host[t]});
            std::cout << json{{"pattern", e.pattern}, {"map", map}}.dump() << '\n';
        }
        if (cycle) std::cout << json{{"pattern", "Dicycle"}, {"cycle", *cycle}}.dump() << '\n';
    } else {
        for (const auto& e : hits) std::cout << e.to_string() << '\n';
        if (cycle) std::cout << "Dicycle: " << names(*cycle, in.labels) << '\n';
        if (hits.empty() && !cycle) std::cout << "none\n";
    }
    return hits.empty() && !cycle ? exit_positive : exit_negative;
}

// ---- verify --------------------------------------------------------------------

json report_json(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    json ces = json::array();
    for (const auto& c : r.counterexamples) {
        json values = json::object();
        for (const auto& p : c.values) values[p.name] = p.value;
        json e{{"instance", c.id}, {"digraph", c.digraph}, {"values", values}};
        if (c.vertex) e["vertex"] = *c.vertex;
        ces.push_back(e);
    }
    return {{"check", r.check},     {"parameters", params},    {"asserted", r.asserted},
            {"total", r.total},     {"filtered", r.filtered},  {"passed", r.passed},
            {"aborted", r.aborted}, {"counterexamples", ces}, {"status", r.ok() ? "PASS" : "FAIL"}};
}

struct VerifyArgs {
    std::string check;
    std::optional<int> n;
    std::optional<std::uint64_t> samples;
    std::optional<int> n_random;
    std::uint64_t seed = 1;
    int shards = 1;
    std::optional<std::size_t> limit;
    int k_max = 4;
    bool json = false;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
    RunOptions opt{a.shards, a.limit.value_or(10)};
    VerificationReport rep;
    if (a.check == "recognizers") {
        rep = check_recognizer_equivalence(a.n.value_or(4), a.samples.value_or(0), a.seed, opt);
    } else if (a.check == "lemma1") {
        rep = check_lemma1(a.n.value_or(4), a.samples.value_or(10000), a.n_random.value_or(7), a.seed, opt);
    } else if (a.check == "theorem4") {
        rep = check_theorem4(a.n.value_or(4), opt);
    } else if (a.check == "theorem5") {
        int n = a.n.value_or(5);
        rep = check_theorem5(n, n + 1, std::max(n + 1, a.n_random.value_or(8)), a.samples.value_or(1000), a.seed, opt);
    } else if (a.check == "nesting") {
        rep = check_nesting(a.n.value_or(4), opt);
    } else if (a.check == "knotting") {
        rep = check_knotting_invariants(a.samples.value_or(10000), a.n_random.value_or(8), a.seed, opt);
    } else if (a.check == "families") {
        rep = check_families(a.k_max, opt);
    } else if (a.check == "deletion") {
        rep = probe_knotting_deletion(a.n_random.value_or(7), a.samples.value_or(10000), a.seed,
                                      {a.shards, a.limit.value_or(0)});
    } else {
        throw UsageError("unknown check " + a.check);
    }
    if (a.json)
        std::cout << report_json(rep).dump() << '\n';
    else
        std::cout << rep.to_text();
    if (a.timing) std::cerr << "wall time: " << rep.wall_seconds << " s\n";
    return rep.ok() ? exit_positive : exit_negative;
}

// ---- gen / enumerate -------------------------------------------------------------

int cmd_gen(const std::string& cls, int n, std::uint64_t seed, int depth, int width, bool dot, bool as_json) {
    Digraph d;
    Rng rng(seed);
    if (cls == "wqt")
        d = generate_wqt(seed, depth, width);
    else if (cls == "ls" || cls == "locally-semicomplete")
        d = generate_locally_semicomplete(seed, n);
    else if (cls == "random")
        d = random_digraph(n, {}, seed);
    else if (cls == "semicomplete")
        d = random_semicomplete(rng, n);
    else if (cls == "symmetric")
        d = random_symmetric(rng, n);
    else if (cls == "transitive-oriented")
        d = random_transitive_oriented(rng, n);
    else
        throw UsageError("unknown class " + cls);
    if (dot)
        std::cout << to_dot(d);
    else if (as_json)
        std::cout << digraph_json(d).dump() << '\n';
    else
        std::cout << serialize(d);
    return exit_positive;
}

bool class_flag(const Digraph& d, const std::string& name) {
    static const std::map<std::string, bool (*)(const Digraph&)> preds{
        {"semicomplete", is_semicomplete},
        {"locally-semicomplete", is_locally_semicomplete},
        {"weakly-quasi-transitive", is_weakly_quasi_transitive},
        {"wqt", is_weakly_quasi_transitive},
        {"quasi-transitive", is_quasi_transitive},
        {"extended-semicomplete", is_extended_semicomplete},
        {"symmetric", is_symmetric},
        {"oriented", is_oriented},
        {"transitive-oriented", is_transitive_oriented},
        {"semi-strict-chordal", [](const Digraph& g) { return is_chordal(g, Variant::SemiStrict); }},
        {"strict-chordal", [](const Digraph& g) { return is_chordal(g, Variant::Strict); }},
        {"chordal", [](const Digraph& g) { return is_chordal(g, Variant::Chordal); }},
    };
    auto it = preds.find(name);
    if (it == preds.end()) throw UsageError("unknown filter " + name);
    return it->second(d);
}

int cmd_enumerate(int n, const std::string& filter, bool as_json) {
    if (!filter.empty()) class_flag(Digraph(0), filter);  // validate before streaming
    std::uint64_t count = 0;
    for (auto d : enumerate_digraphs(n)) {
        if (!filter.empty() && !class_flag(d, filter)) continue;
        if (as_json)
            std::cout << digraph_json(d).dump() << '\n';
        else
            std::cout << (count ? "\n" : "") << serialize(d);
        ++count;
    }
    std::cerr << count << " digraphs\n";
    return exit_positive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-strict chordality toolkit for digraphs"};
    app.require_subcommand(1, 1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string input = "-", variant = "semi-strict";
    bool all = false, dot = false;

    auto* rec = app.add_subcommand("recognize", "Decide chordality (default variant: semi-strict)");
    rec->add_option("input", input, "Digraph file, or - for stdin");
    rec->add_option("--variant", variant, "chordal | strict | semi-strict");
    rec->add_flag("--all", all, "Report all three variants");
    rec->add_flag("--json", as_json, "Machine-readable output");

    auto* ord = app.add_subcommand("order", "Print a perfect elimination ordering");
    ord->add_option("input", input, "Digraph file, or - for stdin");
    ord->add_option("--variant", variant, "chordal | strict | semi-strict");
    ord->add_flag("--json", as_json, "Machine-readable output");

    auto* knot = app.add_subcommand("knot", "Knotting graph listing or DOT");
    knot->add_option("input", input, "Digraph file, or - for stdin");
    knot->add_flag("--dot", dot, "Graphviz output with splitting groups clustered");
    knot->add_flag("--json", as_json, "Machine-readable output");

    auto* cls = app.add_subcommand("classify", "Digraph class membership with witnesses");
    cls->add_option("input", input, "Digraph file, or - for stdin");
    cls->add_flag("--json", as_json, "Machine-readable output");

    int k_max = -1;
    auto* forb = app.add_subcommand("forbidden", "Search the forbidden induced subdigraph families");
    forb->add_option("input", input, "Digraph file, or - for stdin");
    forb->add_option("--k-max", k_max, "Largest lollipop path length (default n-4)");
    forb->add_flag("--json", as_json, "JSON lines output");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run a verification check");
    ver->add_option("--check", va.check, "recognizers | lemma1 | theorem4 | theorem5 | nesting | knotting | families | deletion")
        ->required();
    ver->add_option("--n", va.n, "Order (exhaustive part)");
    ver->add_option("--samples", va.samples, "Random samples");
    ver->add_option("--n-random", va.n_random, "Largest order of random samples");
    ver->add_option("--seed", va.seed, "Seed");
    ver->add_option("--shards", va.shards, "Worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--limit", va.limit, "Counterexamples kept before aborting (0 = unlimited; default 10, deletion probe unlimited)");
    ver->add_option("--k-max", va.k_max, "Largest lollipop k for the families check");
    ver->add_flag("--timing", va.timing, "Print wall time to stderr");
    ver->add_flag("--json", as_json, "Machine-readable output");

    std::string gen_class = "random";
    int gen_n = 5, depth = 2, width = 3;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "Generate a digraph");
    gen->add_option("--class", gen_class, "wqt | ls | random | semicomplete | symmetric | transitive-oriented");
    gen->add_option("--n", gen_n, "Order")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--depth", depth, "Substitution depth (wqt)");
    gen->add_option("--width", width, "Vertices per level (wqt)");
    gen->add_flag("--dot", dot, "Graphviz output");
    gen->add_flag("--json", as_json, "Machine-readable output");

    int enum_n = 2;
    std::string filter;
    auto* en = app.add_subcommand("enumerate", "Stream every labelled digraph of an order");
    en->add_option("--n", enum_n, "Order")->required();
    en->add_option("--filter", filter, "Keep only digraphs with this class flag");
    en->add_flag("--json", as_json, "JSON lines output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*rec) return cmd_recognize(input, variant, all, as_json);
        if (*ord) return cmd_order(input, variant, as_json);
        if (*knot) return cmd_knot(input, dot, as_json);
        if (*cls) return cmd_classify(input, as_json);
        if (*forb) return cmd_forbidden(input, k_max, as_json);
        if (*ver) {
            va.json = as_json;
            return cmd_verify(va);
        }
        if (*gen) return cmd_gen(gen_class, gen_n, seed, depth, width, dot, as_json);
        if (*en) return cmd_enumerate(enum_n, filter, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
