#ifndef SSCHORDAL_CLASSES_HPP
#define SSCHORDAL_CLASSES_HPP

// Membership predicates for semicomplete, locally semicomplete, weakly
// quasi-transitive, quasi-transitive, extended semicomplete and related
// classes, plus random generators for weakly quasi-transitive and locally
// semicomplete test instances.
//
// Each predicate has a *_witness form returning the first violating vertex
// tuple in ascending order, or nullopt when the digraph is in the class.

#include <sschordal/digraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sschordal {

using VertexTuple = std::vector<Vertex>;

/// (u, w) non-adjacent.
inline std::optional<VertexTuple> semicomplete_witness(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u) {
        auto missing = d.vertices().without(u) - d.neighbours(u);
        for (Vertex w : missing)
            if (w > u) return VertexTuple{u, w};
    }
    return std::nullopt;
}

/// (v, u, w): u, w both in N-(v) or both in N+(v), non-adjacent.
inline std::optional<VertexTuple> locally_semicomplete_witness(const Digraph& d) {
    for (Vertex v = 0; v < d.order(); ++v)
        for (auto side : {d.in_neighbours(v), d.out_neighbours(v)})
            for (Vertex u : side) {
                auto missing = side.without(u) - d.neighbours(u);
                for (Vertex w : missing)
                    if (w > u) return VertexTuple{v, u, w};
            }
    return std::nullopt;
}

/// (u, v, w): u, w asynchronous neighbours of v and non-adjacent, u < w.
inline std::optional<VertexTuple> weakly_quasi_transitive_witness(const Digraph& d) {
    for (Vertex v = 0; v < d.order(); ++v) {
        auto sym = d.symmetric_neighbours(v);
        VertexSet cells[3] = {d.in_neighbours(v) - sym, d.out_neighbours(v) - sym, sym};
        auto nb = d.neighbours(v);
        for (Vertex u : nb) {
            VertexSet own;
            for (auto c : cells)
                if (c.contains(u)) own = c;
            auto missing = (nb - own) - d.neighbours(u);
            for (Vertex w : missing)
                if (w > u) return VertexTuple{u, v, w};
        }
    }
    return std::nullopt;
}

/// (u, v, w): u -> v -> w, u != w, u and w non-adjacent.
inline std::optional<VertexTuple> quasi_transitive_witness(const Digraph& d) {
    for (Vertex v = 0; v < d.order(); ++v)
        for (Vertex u : d.in_neighbours(v)) {
            auto missing = d.out_neighbours(v).without(u) - d.neighbours(u);
            if (!missing.empty()) return VertexTuple{u, v, missing.first()};
        }
    return std::nullopt;
}

/// Partition of V into classes of non-adjacent vertices with identical in- and
/// out-neighbourhoods; class[i] lists members ascending, classes ordered by
/// their smallest member.
inline std::vector<VertexSet> duplicate_classes(const Digraph& d) {
    std::vector<VertexSet> out;
    VertexSet placed;
    for (Vertex v = 0; v < d.order(); ++v) {
        if (placed.contains(v)) continue;
        VertexSet cls = VertexSet::single(v);
        for (Vertex u = v + 1; u < d.order(); ++u)
            if (!placed.contains(u) && !d.adjacent(u, v) && d.in_neighbours(u) == d.in_neighbours(v) &&
                d.out_neighbours(u) == d.out_neighbours(v))
                cls.insert(u);
        placed = placed | cls;
        out.push_back(cls);
    }
    return out;
}

/// (a, b): representatives of two different duplicate classes that are
/// non-adjacent, so the quotient is not semicomplete.
inline std::optional<VertexTuple> extended_semicomplete_witness(const Digraph& d) {
    auto classes = duplicate_classes(d);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            Vertex a = classes[i].first(), b = classes[j].first();
            if (!d.adjacent(a, b)) return VertexTuple{a, b};
        }
    return std::nullopt;
}

/// (u, v) joined by a digon.
inline std::optional<VertexTuple> oriented_witness(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v : d.symmetric_neighbours(u))
            if (v > u) return VertexTuple{u, v};
    return std::nullopt;
}

/// (u, v): non-symmetric arc u -> v.
inline std::optional<VertexTuple> symmetric_witness(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u) {
        auto lone = d.out_neighbours(u) - d.in_neighbours(u);
        if (!lone.empty()) return VertexTuple{u, lone.first()};
    }
    return std::nullopt;
}

/// (u, v) digon, or (u, v, w) with u -> v -> w and u -/-> w.
inline std::optional<VertexTuple> transitive_oriented_witness(const Digraph& d) {
    if (auto w = oriented_witness(d)) return w;
    for (Vertex v = 0; v < d.order(); ++v)
        for (Vertex u : d.in_neighbours(v)) {
            auto missing = d.out_neighbours(v).without(u) - d.out_neighbours(u);
            if (!missing.empty()) return VertexTuple{u, v, missing.first()};
        }
    return std::nullopt;
}

inline bool is_semicomplete(const Digraph& d) { return !semicomplete_witness(d); }
inline bool is_locally_semicomplete(const Digraph& d) { return !locally_semicomplete_witness(d); }
inline bool is_weakly_quasi_transitive(const Digraph& d) { return !weakly_quasi_transitive_witness(d); }
inline bool is_quasi_transitive(const Digraph& d) { return !quasi_transitive_witness(d); }
inline bool is_extended_semicomplete(const Digraph& d) { return !extended_semicomplete_witness(d); }
inline bool is_oriented(const Digraph& d) { return !oriented_witness(d); }
inline bool is_symmetric(const Digraph& d) { return !symmetric_witness(d); }
inline bool is_transitive_oriented(const Digraph& d) { return !transitive_oriented_witness(d); }

struct ClassFlag {
    std::string name;
    bool value;
    std::optional<VertexTuple> witness;
};

struct ClassReport {
    std::vector<ClassFlag> flags;

    const ClassFlag& operator[](const std::string& name) const {
        for (const auto& f : flags)
            if (f.name == name) return f;
        throw std::out_of_range("no class flag " + name);
    }
};

inline ClassReport classify(const Digraph& d) {
    ClassReport r;
    auto add = [&](std::string name, std::optional<VertexTuple> w) {
        bool value = !w.has_value();
        r.flags.push_back({std::move(name), value, std::move(w)});
    };
    add("semicomplete", semicomplete_witness(d));
    add("locally-semicomplete", locally_semicomplete_witness(d));
    add("weakly-quasi-transitive", weakly_quasi_transitive_witness(d));
    add("quasi-transitive", quasi_transitive_witness(d));
    add("extended-semicomplete", extended_semicomplete_witness(d));
    add("symmetric", symmetric_witness(d));
    add("oriented", oriented_witness(d));
    add("transitive-oriented", transitive_oriented_witness(d));
    return r;
}

// ---- generators --------------------------------------------------------------

enum class BaseClass { TransitiveOriented, Semicomplete, Symmetric };

/// Random transitive oriented graph: a random partial order's comparability
/// arcs, built as the transitive closure of random forward arcs.
inline Digraph random_transitive_oriented(Rng& rng, int n) {
    std::vector<Vertex> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    rng.shuffle(rank);
    std::vector<VertexSet> reach(n);  // indexed by rank position
    double p = rng.uniform();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.chance(p)) reach[i].insert(j);
    for (int i = n - 1; i >= 0; --i)
        for (int j : reach[i]) reach[i] = reach[i] | reach[j];
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j : reach[i]) d.add_arc(rank[i], rank[j]);
    return d;
}

inline Digraph random_semicomplete(Rng& rng, int n) {
    return random_digraph(n, {0, 1, 1, rng.uniform() * 2}, rng.next());
}

inline Digraph random_symmetric(Rng& rng, int n) {
    double p = rng.uniform();
    return random_digraph(n, {1 - p, 0, 0, p}, rng.next());
}

inline Digraph random_base(Rng& rng, BaseClass c, int n) {
    switch (c) {
        case BaseClass::TransitiveOriented: return random_transitive_oriented(rng, n);
        case BaseClass::Semicomplete: return random_semicomplete(rng, n);
        case BaseClass::Symmetric: return random_symmetric(rng, n);
    }
    return Digraph(n);
}

namespace detail {
inline Digraph generate_wqt(Rng& rng, int depth, int width) {
    auto base = static_cast<BaseClass>(rng.between(0, 2));
    auto outer = random_base(rng, base, rng.between(1, width));
    if (depth <= 1) return outer;
    std::vector<Digraph> parts;
    for (int v = 0; v < outer.order(); ++v) parts.push_back(generate_wqt(rng, depth - 1, width));
    return substitute(outer, parts);
}
}  // namespace detail

/// Random member of the class generated from transitive oriented, semicomplete
/// and symmetric digraphs by substitution. Each level has 1..width vertices,
/// so the output has at most width^depth vertices (capped by max_order).
inline Digraph generate_wqt(std::uint64_t seed, int depth, int width) {
    if (depth < 1 || width < 1) throw DigraphError("generate_wqt: depth and width must be >= 1");
    double size = 1;
    for (int i = 0; i < depth; ++i) size *= width;
    if (size > max_order) throw DigraphError("generate_wqt: width^depth exceeds vertex cap");
    Rng rng(seed);
    return detail::generate_wqt(rng, depth, width);
}

/// Random locally semicomplete digraph on n vertices. Vertices sit on a random
/// cyclic order, each reaching a random-length forward interval; some arcs
/// become digons; then non-adjacent pairs inside a common in- or
/// out-neighbourhood are joined until none remain. Each repair joins one
/// non-adjacent pair, so at most n(n-1)/2 repairs happen.
inline Digraph generate_locally_semicomplete(std::uint64_t seed, int n) {
    if (n < 1) throw DigraphError("generate_locally_semicomplete: n must be >= 1");
    Rng rng(seed);
    std::vector<Vertex> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    rng.shuffle(pos);
    Digraph d(n);
    int reach = std::max(1, rng.between(1, std::max(1, n / 2)));
    double digon_p = rng.uniform() * 0.5;
    for (int i = 0; i < n; ++i) {
        int len = rng.between(0, reach);
        for (int s = 1; s <= len && s < n; ++s) {
            Vertex a = pos[i], b = pos[(i + s) % n];
            d.add_arc(a, b);
            if (rng.chance(digon_p)) d.add_arc(b, a);
        }
    }
    while (auto w = locally_semicomplete_witness(d)) {
        Vertex u = (*w)[1], x = (*w)[2];
        int r = rng.between(0, 2);
        d.set_pair(u, x, r == 0 ? PairKind::Forward : r == 1 ? PairKind::Backward : PairKind::Digon);
    }
    return d;
}

}  // namespace sschordal

#endif
