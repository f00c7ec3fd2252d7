#ifndef SSCHORDAL_HARNESS_HPP
#define SSCHORDAL_HARNESS_HPP

// Exhaustive and randomized cross-checks of the recognisers and the
// characterisation theorems.
//
// A check is a pure function from an instance id to an Outcome. Ids are split
// into contiguous shards run on separate threads; shard results are merged in
// id order, so reports do not depend on the shard count. After `limit`
// counterexamples the check stops, and counts cover ids up to that point.

#include <sschordal/chordality.hpp>
#include <sschordal/classes.hpp>
#include <sschordal/digraph.hpp>
#include <sschordal/io.hpp>
#include <sschordal/knotting.hpp>
#include <sschordal/patterns.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace sschordal {

struct PredicateValue {
    std::string name;
    bool value;
};

struct Counterexample {
    std::uint64_t id = 0;
    std::string digraph;  // text format
    std::vector<PredicateValue> values;
    std::optional<Vertex> vertex;
};

struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool asserted = true;  // false for probes that only record outcomes
    std::uint64_t total = 0;
    std::uint64_t filtered = 0;
    std::uint64_t passed = 0;
    bool aborted = false;
    std::vector<Counterexample> counterexamples;
    double wall_seconds = 0;  // not part of the rendered report

    bool ok() const { return !asserted || counterexamples.empty(); }

    /// Deterministic text rendering (wall time excluded).
    std::string to_text(std::size_t max_listed = 10) const {
        std::ostringstream os;
        os << "check: " << check << '\n';
        for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << '\n';
        os << "total: " << total << '\n'
           << "filtered: " << filtered << '\n'
           << "passed: " << passed << '\n'
           << (asserted ? "counterexamples: " : "disagreements: ") << counterexamples.size() << '\n';
        if (aborted) os << "aborted: counterexample limit reached\n";
        for (std::size_t i = 0; i < counterexamples.size() && i < max_listed; ++i) {
            const auto& c = counterexamples[i];
            os << "- instance " << c.id;
            if (c.vertex) os << " vertex " << *c.vertex;
            os << ':';
            for (const auto& p : c.values) os << ' ' << p.name << '=' << (p.value ? "true" : "false");
            os << '\n';
            std::istringstream lines(c.digraph);
            for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
        }
        os << "status: " << (asserted ? (ok() ? "PASS" : "FAIL") : "RECORDED") << '\n';
        return os.str();
    }
};

struct RunOptions {
    int shards = 1;
    std::size_t limit = 10;  // 0 = unlimited
};

struct Outcome {
    enum class Kind { Skipped, Passed, Failed } kind = Kind::Skipped;
    Counterexample counterexample;

    static Outcome skipped() { return {}; }
    static Outcome passed() { return {Kind::Passed, {}}; }
    static Outcome failed(const Digraph& d, std::vector<PredicateValue> values, std::optional<Vertex> v = {}) {
        return {Kind::Failed, {0, serialize(d), std::move(values), v}};
    }
};

using InstanceCheck = std::function<Outcome(std::uint64_t)>;

namespace detail {

struct ShardResult {
    std::uint64_t first = 0, processed = 0, filtered = 0, passed = 0;
    struct Hit {
        Counterexample ce;
        std::uint64_t processed, filtered, passed;  // shard counts including this hit
    };
    std::vector<Hit> hits;
};

inline ShardResult run_shard(const InstanceCheck& check, std::uint64_t first, std::uint64_t last, std::size_t limit) {
    ShardResult r;
    r.first = first;
    for (std::uint64_t id = first; id < last; ++id) {
        auto o = check(id);
        ++r.processed;
        if (o.kind == Outcome::Kind::Skipped) continue;
        ++r.filtered;
        if (o.kind == Outcome::Kind::Passed) {
            ++r.passed;
            continue;
        }
        o.counterexample.id = id;
        r.hits.push_back({std::move(o.counterexample), r.processed, r.filtered, r.passed});
        if (limit && r.hits.size() >= limit) break;
    }
    return r;
}

}  // namespace detail

/// Runs ids [0, count) through `check` and merges the shard results.
inline VerificationReport run_check(std::string name, std::uint64_t count, const InstanceCheck& check,
                                    const RunOptions& opt, bool asserted = true) {
    auto start = std::chrono::steady_clock::now();
    std::uint64_t shards = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::max(1, opt.shards)));
    shards = std::min<std::uint64_t>(shards, std::max<std::uint64_t>(1, count));
    std::vector<detail::ShardResult> results(shards);
    auto bound = [&](std::uint64_t s) { return count / shards * s + std::min(s, count % shards); };
    if (shards == 1) {
        results[0] = detail::run_shard(check, 0, count, opt.limit);
    } else {
        std::vector<std::thread> workers;
        for (std::uint64_t s = 0; s < shards; ++s)
            workers.emplace_back([&, s] { results[s] = detail::run_shard(check, bound(s), bound(s + 1), opt.limit); });
        for (auto& w : workers) w.join();
    }

    VerificationReport rep;
    rep.check = std::move(name);
    rep.asserted = asserted;
    for (const auto& r : results) {
        std::size_t room = opt.limit ? opt.limit - rep.counterexamples.size() : r.hits.size();
        if (opt.limit && r.hits.size() >= room) {
            // The global limit is reached inside this shard; later shards are discarded.
            const auto& cut = r.hits[room - 1];
            for (std::size_t i = 0; i < room; ++i) rep.counterexamples.push_back(r.hits[i].ce);
            rep.total += cut.processed;
            rep.filtered += cut.filtered;
            rep.passed += cut.passed;
            rep.aborted = true;
            break;
        }
        for (const auto& h : r.hits) rep.counterexamples.push_back(h.ce);
        rep.total += r.processed;
        rep.filtered += r.filtered;
        rep.passed += r.passed;
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// Concatenation of full enumerations for orders lo..hi; maps a global id to
/// (order, enumeration index).
class OrderRange {
public:
    OrderRange(int lo, int hi, int cap = default_enumeration_cap) : lo_(lo) {
        if (hi > cap) throw DigraphError("enumeration cap exceeded: n=" + std::to_string(hi));
        offsets_.push_back(0);
        for (int n = lo; n <= hi; ++n) offsets_.push_back(offsets_.back() + digraph_count(n));
    }
    std::uint64_t size() const { return offsets_.back(); }
    Digraph at(std::uint64_t id) const {
        std::size_t k = 0;
        while (id >= offsets_[k + 1]) ++k;
        return digraph_at(lo_ + static_cast<int>(k), id - offsets_[k]);
    }

private:
    int lo_;
    std::vector<std::uint64_t> offsets_;
};

/// Random digraph for sample `id`: order uniform in [n_lo, n_hi], pair-kind
/// weights themselves random so densities vary across samples.
inline Digraph sample_digraph(std::uint64_t seed, std::uint64_t id, int n_lo, int n_hi) {
    Rng rng(mix_seed(seed) ^ mix_seed(id + 0x51ed270b27a4c1d3ULL));
    int n = rng.between(n_lo, n_hi);
    KindWeights w{rng.uniform() + 0.05, rng.uniform(), rng.uniform(), rng.uniform()};
    return random_digraph(n, w, rng.next());
}

inline std::string param(std::uint64_t x) { return std::to_string(x); }

// ---- checks ------------------------------------------------------------------

inline constexpr int unfiltered_exhaustive_cap = 4;

/// Greedy elimination = subset oracle = knotting elimination = knotting subset
/// oracle. Exhaustive at order n <= 4; larger n needs samples > 0.
inline VerificationReport check_recognizer_equivalence(int n, std::uint64_t samples = 0, std::uint64_t seed = 1,
                                                       const RunOptions& opt = {}) {
    auto eval = [](const Digraph& d) {
        bool g = is_chordal(d, Variant::SemiStrict);
        bool o = oracle_is_chordal(d, Variant::SemiStrict);
        bool k = ss_chordal_via_knotting(d);
        bool t = theorem2_oracle(d);
        if (g == o && o == k && k == t) return Outcome::passed();
        return Outcome::failed(d, {{"greedy", g}, {"oracle", o}, {"knotting", k}, {"theorem2", t}});
    };
    VerificationReport rep;
    if (samples == 0) {
        if (n > unfiltered_exhaustive_cap)
            throw DigraphError("recognizers: exhaustive cap is n=4; pass a sample count for larger n");
        rep = run_check("recognizers", digraph_count(n), [&](std::uint64_t id) { return eval(digraph_at(n, id)); }, opt);
        rep.parameters = {{"n", param(n)}, {"mode", "exhaustive"}};
    } else {
        rep = run_check("recognizers", samples, [&](std::uint64_t id) { return eval(sample_digraph(seed, id, n, n)); },
                        opt);
        rep.parameters = {{"n", param(n)}, {"mode", "sampled"}, {"samples", param(samples)}, {"seed", param(seed)}};
    }
    return rep;
}

/// Per-vertex semi-strict di-simpliciality = splitting-group max degree <= 1.
/// Ids cover all digraphs of order <= n_exhaustive, then `samples` random
/// digraphs of order 1..n_random.
inline VerificationReport check_lemma1(int n_exhaustive, std::uint64_t samples, int n_random, std::uint64_t seed,
                                       const RunOptions& opt = {}) {
    OrderRange range(1, n_exhaustive, unfiltered_exhaustive_cap);
    auto rep = run_check(
        "lemma1", range.size() + samples,
        [&](std::uint64_t id) {
            auto d = id < range.size() ? range.at(id) : sample_digraph(seed, id - range.size(), 1, n_random);
            auto k = knotting_graph(d);
            for (Vertex v = 0; v < d.order(); ++v) {
                bool simp = is_di_simplicial(d, v, Variant::SemiStrict);
                bool deg = group_max_degree(k, v) <= 1;
                if (simp != deg) return Outcome::failed(d, {{"di_simplicial", simp}, {"group_degree_le_1", deg}}, v);
            }
            return Outcome::passed();
        },
        opt);
    rep.parameters = {{"n_exhaustive", param(n_exhaustive)},
                      {"samples", param(samples)},
                      {"n_random", param(n_random)},
                      {"seed", param(seed)}};
    return rep;
}

/// Weakly quasi-transitive D: semi-strict chordal <=> S(D) semi-strict chordal
/// and no induced member of the four-template family. All orders 1..n.
inline VerificationReport check_theorem4(int n, const RunOptions& opt = {}) {
    OrderRange range(1, n);
    auto rep = run_check(
        "theorem4", range.size(),
        [&](std::uint64_t id) {
            auto d = range.at(id);
            if (!is_weakly_quasi_transitive(d)) return Outcome::skipped();
            bool lhs = is_chordal(d, Variant::SemiStrict), rhs = theorem4_rhs(d);
            return lhs == rhs ? Outcome::passed() : Outcome::failed(d, {{"lhs", lhs}, {"rhs", rhs}});
        },
        opt);
    rep.parameters = {{"n", param(n)}};
    return rep;
}

/// Locally semicomplete D: semi-strict chordal <=> S(D) semi-strict chordal
/// and no induced non-symmetric dicycle, four-template member or lollipop.
/// Exhaustive over orders 1..n_exhaustive, then `samples` generated instances
/// with order uniform in [n_random_lo, n_random_hi].
inline VerificationReport check_theorem5(int n_exhaustive, int n_random_lo, int n_random_hi, std::uint64_t samples,
                                         std::uint64_t seed, const RunOptions& opt = {}) {
    OrderRange range(1, n_exhaustive);
    auto rep = run_check(
        "theorem5", range.size() + samples,
        [&](std::uint64_t id) {
            Digraph d;
            if (id < range.size()) {
                d = range.at(id);
                if (!is_locally_semicomplete(d)) return Outcome::skipped();
            } else {
                Rng rng(mix_seed(seed) ^ mix_seed(id));
                int n = rng.between(n_random_lo, n_random_hi);
                d = generate_locally_semicomplete(rng.next(), n);
            }
            bool lhs = is_chordal(d, Variant::SemiStrict), rhs = theorem5_rhs(d);
            return lhs == rhs ? Outcome::passed() : Outcome::failed(d, {{"lhs", lhs}, {"rhs", rhs}});
        },
        opt);
    rep.parameters = {{"n_exhaustive", param(n_exhaustive)},
                      {"n_random", param(n_random_lo) + ".." + param(n_random_hi)},
                      {"samples", param(samples)},
                      {"seed", param(seed)}};
    return rep;
}

/// Strict => semi-strict => chordal, and on symmetric digraphs semi-strict
/// chordality <=> chordality of the underlying graph. All orders 1..n.
inline VerificationReport check_nesting(int n, const RunOptions& opt = {}) {
    OrderRange range(1, n, unfiltered_exhaustive_cap);
    auto rep = run_check(
        "nesting", range.size(),
        [&](std::uint64_t id) {
            auto d = range.at(id);
            bool st = is_chordal(d, Variant::Strict), ss = is_chordal(d, Variant::SemiStrict),
                 ch = is_chordal(d, Variant::Chordal);
            bool ok = (!st || ss) && (!ss || ch);
            std::vector<PredicateValue> vals{{"strict", st}, {"semi_strict", ss}, {"chordal", ch}};
            if (is_symmetric(d)) {
                bool und = underlying_SD_is_chordal(d);
                ok = ok && (ss == und);
                vals.push_back({"underlying_chordal", und});
            }
            return ok ? Outcome::passed() : Outcome::failed(d, vals);
        },
        opt);
    rep.parameters = {{"n", param(n)}};
    return rep;
}

/// Structural invariants of K_D: edges biject with arcs, classes partition
/// each E_v, degree sum 2|A|, every nonempty class has an edge, and classes
/// agree with connected components recomputed by plain graph search.
inline VerificationReport check_knotting_invariants(std::uint64_t samples, int n_max, std::uint64_t seed,
                                                    const RunOptions& opt = {}) {
    auto rep = run_check(
        "knotting",
        samples,
        [&](std::uint64_t id) {
            auto d = sample_digraph(seed, id, 1, n_max);
            auto k = knotting_graph(d);
            auto arcs = d.arcs();
            bool bijection = k.edges().size() == arcs.size() && k.arcs() == arcs;
            std::size_t degree_sum = 0;
            bool nonempty_deg = true;
            for (std::size_t c = 0; c < k.classes().size(); ++c) {
                degree_sum += static_cast<std::size_t>(k.degree(static_cast<int>(c)));
                if (!k.classes()[c].members.empty() && k.degree(static_cast<int>(c)) < 1) nonempty_deg = false;
            }
            bool degsum = degree_sum == 2 * arcs.size();
            bool partition = true, closure = true;
            for (Vertex v = 0; v < d.order(); ++v) {
                auto inc = incident_arcs(d, v);
                auto [a, b] = k.group(v);
                std::vector<Arc> all;
                for (int c = a; c < b; ++c)
                    all.insert(all.end(), k.classes()[c].members.begin(), k.classes()[c].members.end());
                std::sort(all.begin(), all.end());
                std::vector<Arc> expect;
                for (const auto& e : inc) expect.push_back(e.arc);
                if (all != expect) partition = false;
                // Independent component labelling by breadth-first search.
                std::vector<int> comp(inc.size(), -1);
                int ncomp = 0;
                for (std::size_t s = 0; s < inc.size(); ++s) {
                    if (comp[s] >= 0) continue;
                    std::vector<std::size_t> queue{s};
                    comp[s] = ncomp;
                    for (std::size_t q = 0; q < queue.size(); ++q)
                        for (std::size_t t = 0; t < inc.size(); ++t)
                            if (comp[t] < 0 && directly_compatible(d, inc[queue[q]], inc[t])) {
                                comp[t] = ncomp;
                                queue.push_back(t);
                            }
                    ++ncomp;
                }
                if (inc.empty()) continue;
                if (ncomp != b - a) closure = false;
                for (int c = a; c < b && closure; ++c) {
                    const auto& m = k.classes()[c].members;
                    auto idx = [&](const Arc& x) {
                        std::size_t i = 0;
                        while (inc[i].arc != x) ++i;
                        return i;
                    };
                    int label = comp[idx(m.front())];
                    for (const auto& x : m) closure = closure && comp[idx(x)] == label;
                }
            }
            if (bijection && degsum && nonempty_deg && partition && closure) return Outcome::passed();
            return Outcome::failed(d, {{"edge_bijection", bijection},
                                       {"degree_sum", degsum},
                                       {"nonempty_class_degree", nonempty_deg},
                                       {"partition", partition},
                                       {"closure", closure}});
        },
        opt);
    rep.parameters = {{"samples", param(samples)}, {"n_max", param(n_max)}, {"seed", param(seed)}};
    return rep;
}

struct FamilyMember {
    std::string family;
    Digraph digraph;
};

/// Every labelled concretization of the Fig1a-d templates and of lollipop(k),
/// 1 <= k <= k_max.
inline std::vector<FamilyMember> forbidden_family_members(int k_max) {
    std::vector<FamilyMember> out;
    for (const auto& t : fig1_templates())
        for (auto& d : concretizations(t)) out.push_back({t.name(), std::move(d)});
    for (int k = 1; k <= k_max; ++k) {
        auto t = lollipop_template(k);
        for (auto& d : concretizations(t)) out.push_back({t.name(), std::move(d)});
    }
    return out;
}

/// Each family member has no semi-strict di-simplicial vertex (hence is not
/// semi-strict chordal); lollipops are also locally semicomplete.
inline VerificationReport check_families(int k_max, const RunOptions& opt = {}) {
    auto members = forbidden_family_members(k_max);
    auto rep = run_check(
        "families", members.size(),
        [&](std::uint64_t id) {
            const auto& m = members[id];
            bool none_simplicial = true;
            for (Vertex v = 0; v < m.digraph.order(); ++v)
                none_simplicial = none_simplicial && !is_di_simplicial(m.digraph, v, Variant::SemiStrict);
            bool rejected = !is_chordal(m.digraph, Variant::SemiStrict);
            bool ls = m.family.rfind("Lollipop", 0) != 0 || is_locally_semicomplete(m.digraph);
            if (none_simplicial && rejected && ls) return Outcome::passed();
            return Outcome::failed(
                m.digraph, {{"no_simplicial_vertex", none_simplicial}, {"rejected", rejected}, {"class_ok", ls}});
        },
        opt);
    rep.parameters = {{"k_max", param(k_max)}, {"members", param(members.size())}};
    return rep;
}

/// Compares K_{D-v}, recomputed, with K_D minus v's group, up to
/// group-respecting isomorphism. Outcomes are recorded, never asserted, and
/// every disagreement is kept unless opt.limit says otherwise.
inline VerificationReport probe_knotting_deletion(int n_max, std::uint64_t samples, std::uint64_t seed,
                                                  RunOptions opt = {1, 0}) {
    auto rep = run_check(
        "deletion", samples,
        [&](std::uint64_t id) {
            auto d = sample_digraph(seed, id, 1, n_max);
            Rng rng(mix_seed(seed + 7) ^ mix_seed(id));
            Vertex v = rng.between(0, d.order() - 1);
            auto derived = delete_group(knotting_graph(d), v);
            auto recomputed = GroupedGraph::of(knotting_graph(induced(d, d.vertices().without(v)).digraph));
            if (group_respecting_isomorphic(derived, recomputed)) return Outcome::passed();
            return Outcome::failed(d, {{"deletion_matches_recomputation", false}}, v);
        },
        opt, /*asserted=*/false);
    rep.parameters = {{"n_max", param(n_max)}, {"samples", param(samples)}, {"seed", param(seed)}};
    return rep;
}

}  // namespace sschordal

#endif
