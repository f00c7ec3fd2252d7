#ifndef SSCHORDAL_PATTERNS_HPP
#define SSCHORDAL_PATTERNS_HPP

// Forbidden induced subdigraph families and detectors.
//
// A PatternTemplate constrains every unordered pair of its k vertices; a host
// matches when some injective vertex map satisfies each constraint against the
// host pair kind. Unconstrained pairs are NonAdjacent, so matches are induced.

#include <sschordal/chordality.hpp>
#include <sschordal/digraph.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sschordal {

enum class EdgeConstraint : std::uint8_t {
    NonAdjacent,
    ArcForward,   // non-symmetric i -> j (i < j in template numbering)
    ArcBackward,  // non-symmetric j -> i
    NonSymEither, // non-symmetric, either direction
    Digon,
    AnyAdjacent,  // any of forward, backward, digon
};

inline bool satisfies(EdgeConstraint c, PairKind k) {
    switch (c) {
        case EdgeConstraint::NonAdjacent: return k == PairKind::None;
        case EdgeConstraint::ArcForward: return k == PairKind::Forward;
        case EdgeConstraint::ArcBackward: return k == PairKind::Backward;
        case EdgeConstraint::NonSymEither: return k == PairKind::Forward || k == PairKind::Backward;
        case EdgeConstraint::Digon: return k == PairKind::Digon;
        case EdgeConstraint::AnyAdjacent: return k != PairKind::None;
    }
    return false;
}

/// Pair kinds allowed by a constraint, in PairKind order.
inline std::vector<PairKind> options(EdgeConstraint c) {
    std::vector<PairKind> out;
    for (auto k : {PairKind::None, PairKind::Forward, PairKind::Backward, PairKind::Digon})
        if (satisfies(c, k)) out.push_back(k);
    return out;
}

class PatternTemplate {
public:
    PatternTemplate(std::string name, int k)
        : name_(std::move(name)), k_(k), pairs_(pair_count(k), EdgeConstraint::NonAdjacent) {}

    const std::string& name() const { return name_; }
    int order() const { return k_; }

    EdgeConstraint constraint(Vertex i, Vertex j) const {
        if (i < j) return pairs_[pair_index(i, j)];
        auto c = pairs_[pair_index(j, i)];
        if (c == EdgeConstraint::ArcForward) return EdgeConstraint::ArcBackward;
        if (c == EdgeConstraint::ArcBackward) return EdgeConstraint::ArcForward;
        return c;
    }

    /// Constrain pair {i,j}; direction-carrying constraints read from i to j.
    PatternTemplate& set(Vertex i, Vertex j, EdgeConstraint c) {
        if (i > j) {
            std::swap(i, j);
            if (c == EdgeConstraint::ArcForward)
                c = EdgeConstraint::ArcBackward;
            else if (c == EdgeConstraint::ArcBackward)
                c = EdgeConstraint::ArcForward;
        }
        pairs_[pair_index(i, j)] = c;
        return *this;
    }
    PatternTemplate& arc(Vertex i, Vertex j) { return set(i, j, EdgeConstraint::ArcForward); }

    /// Minimum adjacency and digon degrees any host image of t must have.
    std::pair<int, int> degree_bounds(Vertex t) const {
        int adj = 0, dig = 0;
        for (Vertex s = 0; s < k_; ++s) {
            if (s == t) continue;
            auto c = constraint(s, t);
            if (c != EdgeConstraint::NonAdjacent) ++adj;
            if (c == EdgeConstraint::Digon) ++dig;
        }
        return {adj, dig};
    }

private:
    std::string name_;
    int k_;
    std::vector<EdgeConstraint> pairs_;
};

/// The four-member family of non-semi-strict-chordal digraphs; template
/// vertices 1..4 of the drawing are 0..3 here.
inline std::vector<PatternTemplate> fig1_templates() {
    using C = EdgeConstraint;
    PatternTemplate a("Fig1a", 4);
    a.set(0, 2, C::Digon).set(1, 3, C::Digon);
    a.set(0, 1, C::NonSymEither).set(2, 3, C::NonSymEither);
    a.set(1, 2, C::AnyAdjacent).set(3, 0, C::AnyAdjacent);

    PatternTemplate b("Fig1b", 4);
    b.set(0, 1, C::NonSymEither).arc(1, 2).arc(3, 2).set(0, 3, C::Digon).set(0, 2, C::Digon).arc(3, 1);

    PatternTemplate c("Fig1c", 4);
    c.set(0, 1, C::NonSymEither).arc(1, 2).set(2, 3, C::Digon).arc(3, 0).arc(0, 2).arc(3, 1);

    PatternTemplate d("Fig1d", 3);
    d.arc(0, 1).arc(1, 2).arc(2, 0);
    return {a, b, c, d};
}

/// Two digon pairs joined by a directed path u1 -> ... -> uk: both v's point
/// into u1, uk points into both w's. Vertex order: v1 v2 u1..uk w1 w2.
inline PatternTemplate lollipop_template(int k) {
    if (k < 1) throw DigraphError("lollipop_template: k must be >= 1");
    PatternTemplate t("Lollipop(" + std::to_string(k) + ")", k + 4);
    const Vertex v1 = 0, v2 = 1, u1 = 2, uk = k + 1, w1 = k + 2, w2 = k + 3;
    t.set(v1, v2, EdgeConstraint::Digon).set(w1, w2, EdgeConstraint::Digon);
    t.arc(v1, u1).arc(v2, u1).arc(uk, w1).arc(uk, w2);
    for (Vertex u = u1; u < uk; ++u) t.arc(u, u + 1);
    return t;
}

/// Every labelled digraph on the template's vertices that satisfies it.
inline std::vector<Digraph> concretizations(const PatternTemplate& t) {
    std::vector<std::vector<PairKind>> choice;
    std::vector<Arc> pairs;
    for (Vertex j = 1; j < t.order(); ++j)
        for (Vertex i = 0; i < j; ++i) {
            pairs.emplace_back(i, j);
            choice.push_back(options(t.constraint(i, j)));
        }
    std::vector<Digraph> out;
    std::vector<std::size_t> digit(pairs.size(), 0);
    while (true) {
        Digraph d(t.order());
        for (std::size_t p = 0; p < pairs.size(); ++p) d.set_pair(pairs[p].first, pairs[p].second, choice[p][digit[p]]);
        out.push_back(std::move(d));
        std::size_t p = 0;
        while (p < pairs.size() && ++digit[p] == choice[p].size()) digit[p++] = 0;
        if (p == pairs.size()) break;
    }
    return out;
}

struct Embedding {
    std::string pattern;
    std::vector<Vertex> host;  // template vertex -> host vertex

    /// "name: t0→h3, t1→h0, ..."
    std::string to_string() const {
        std::ostringstream os;
        os << pattern << ':';
        for (std::size_t t = 0; t < host.size(); ++t) os << (t ? ", t" : " t") << t << "→h" << host[t];
        return os.str();
    }
};

namespace detail {

inline bool extend_match(const Digraph& d, const PatternTemplate& t, const std::vector<std::pair<int, int>>& bounds,
                         std::vector<Vertex>& map, VertexSet used, Vertex next) {
    if (next == t.order()) return true;
    for (Vertex h = 0; h < d.order(); ++h) {
        if (used.contains(h)) continue;
        if (d.neighbours(h).size() < bounds[next].first || d.symmetric_neighbours(h).size() < bounds[next].second)
            continue;
        bool ok = true;
        for (Vertex p = 0; p < next && ok; ++p) ok = satisfies(t.constraint(p, next), d.pair_kind(map[p], h));
        if (!ok) continue;
        map[next] = h;
        used.insert(h);
        if (extend_match(d, t, bounds, map, used, next + 1)) return true;
        used.erase(h);
    }
    return false;
}

}  // namespace detail

/// Lexicographically smallest induced embedding of t into d, if any.
inline std::optional<Embedding> find_induced(const Digraph& d, const PatternTemplate& t) {
    if (t.order() > d.order()) return std::nullopt;
    std::vector<std::pair<int, int>> bounds;
    for (Vertex v = 0; v < t.order(); ++v) bounds.push_back(t.degree_bounds(v));
    std::vector<Vertex> map(t.order(), -1);
    if (!detail::extend_match(d, t, bounds, map, VertexSet{}, 0)) return std::nullopt;
    return Embedding{t.name(), std::move(map)};
}

/// Family order: fixed-direction templates first, then Fig1a.
inline std::vector<PatternTemplate> fig1_search_order() {
    auto f = fig1_templates();
    return {f[3], f[1], f[2], f[0]};
}

inline std::optional<Embedding> find_any_fig1(const Digraph& d) {
    for (const auto& t : fig1_search_order())
        if (auto e = find_induced(d, t)) return e;
    return std::nullopt;
}

/// Lollipops with k = 1..k_max; k_max < 0 means order - 4.
inline std::optional<Embedding> find_lollipop(const Digraph& d, int k_max = -1) {
    if (k_max < 0) k_max = d.order() - 4;
    for (int k = 1; k <= k_max; ++k)
        if (auto e = find_induced(d, lollipop_template(k))) return e;
    return std::nullopt;
}

namespace detail {

inline bool nonsym_arc(const Digraph& d, Vertex a, Vertex b) { return d.pair_kind(a, b) == PairKind::Forward; }

// path[0] is the smallest vertex of the cycle being built.
inline bool extend_cycle(const Digraph& d, int min_len, std::vector<Vertex>& path, VertexSet on_path) {
    Vertex last = path.back(), start = path.front();
    auto interior = on_path.without(start).without(last);
    auto lone_out = d.out_neighbours(last) - d.in_neighbours(last);
    for (Vertex x : lone_out) {
        if (x <= start || on_path.contains(x)) continue;
        if (!(d.neighbours(x) & interior).empty()) continue;
        if (path.size() > 1 && d.adjacent(x, start)) {
            if (nonsym_arc(d, x, start) && static_cast<int>(path.size()) + 1 >= min_len) {
                path.push_back(x);
                return true;
            }
            continue;
        }
        path.push_back(x);
        on_path.insert(x);
        if (extend_cycle(d, min_len, path, on_path)) return true;
        on_path.erase(x);
        path.pop_back();
    }
    return false;
}

}  // namespace detail

/// Induced directed cycle of non-symmetric arcs of length >= min_len:
/// consecutive vertices joined by a non-symmetric arc along the cycle, all
/// other pairs non-adjacent. Returned starting at its smallest vertex.
inline std::optional<std::vector<Vertex>> find_nonsym_induced_dicycle(const Digraph& d, int min_len = 3) {
    if (min_len < 3) throw DigraphError("find_nonsym_induced_dicycle: min_len must be >= 3");
    for (Vertex s = 0; s < d.order(); ++s) {
        std::vector<Vertex> path{s};
        if (detail::extend_cycle(d, min_len, path, VertexSet::single(s))) return path;
    }
    return std::nullopt;
}

/// S(D) semi-strict chordal and no member of the four-template family induced.
inline bool theorem4_rhs(const Digraph& d) {
    return is_chordal(symmetric_subdigraph(d), Variant::SemiStrict) && !find_any_fig1(d);
}

/// Additionally no induced non-symmetric directed cycle and no lollipop.
inline bool theorem5_rhs(const Digraph& d) {
    return is_chordal(symmetric_subdigraph(d), Variant::SemiStrict) && !find_nonsym_induced_dicycle(d, 3) &&
           !find_any_fig1(d) && !find_lollipop(d, d.order() - 4);
}

}  // namespace sschordal

#endif
