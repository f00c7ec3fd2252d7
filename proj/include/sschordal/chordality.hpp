#ifndef SSCHORDAL_CHORDALITY_HPP
#define SSCHORDAL_CHORDALITY_HPP

// Di-simplicial vertices and elimination orderings for the three chordality
// variants:
//
//   Chordal     u in N-(v), w in N+(v), u != w  =>  u -> w
//   SemiStrict  u in N-(v), w in N+(v), u != w  =>  u <-> w
//   Strict      u, w in N-(v) | N+(v),  u != w  =>  u <-> w

#include <sschordal/digraph.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace sschordal {

enum class Variant { Chordal, Strict, SemiStrict };

inline constexpr std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Chordal: return "chordal";
        case Variant::Strict: return "strict";
        case Variant::SemiStrict: return "semi-strict";
    }
    return "?";
}

inline std::optional<Variant> variant_from_name(std::string_view s) {
    if (s == "chordal") return Variant::Chordal;
    if (s == "strict") return Variant::Strict;
    if (s == "semi-strict" || s == "semistrict") return Variant::SemiStrict;
    return std::nullopt;
}

/// Failing neighbour pair (u, w) of v. For Chordal and SemiStrict u is an
/// in-neighbour and w an out-neighbour; for Strict both are just neighbours.
struct Witness {
    Vertex u, v, w;
    bool operator==(const Witness&) const = default;
};

struct EliminationOrdering {
    std::vector<Vertex> order;
    Variant variant;
};

namespace detail {

// Vertices w that the variant requires u to reach (or be joined to by a digon).
inline VertexSet required_partners(const Digraph& d, Vertex u, Variant var) {
    return var == Variant::Chordal ? d.out_neighbours(u) : d.symmetric_neighbours(u);
}

}  // namespace detail

/// First failing triple for v inside the subdigraph induced by `alive`,
/// smallest (u, w) lexicographically.
inline std::optional<Witness> witness_within(const Digraph& d, VertexSet alive, Vertex v, Variant var) {
    auto in = d.in_neighbours(v) & alive;
    auto out = d.out_neighbours(v) & alive;
    auto sources = var == Variant::Strict ? (in | out) : in;
    auto targets = var == Variant::Strict ? (in | out) : out;
    for (Vertex u : sources) {
        auto missing = targets.without(u) - detail::required_partners(d, u, var);
        if (!missing.empty()) return Witness{u, v, missing.first()};
    }
    return std::nullopt;
}

inline bool is_di_simplicial_within(const Digraph& d, VertexSet alive, Vertex v, Variant var) {
    auto in = d.in_neighbours(v) & alive;
    auto out = d.out_neighbours(v) & alive;
    auto sources = var == Variant::Strict ? (in | out) : in;
    auto targets = var == Variant::Strict ? (in | out) : out;
    for (Vertex u : sources)
        if (!targets.without(u).subset_of(detail::required_partners(d, u, var))) return false;
    return true;
}

inline bool is_di_simplicial(const Digraph& d, Vertex v, Variant var) {
    if (v < 0 || v >= d.order()) throw DigraphError("vertex out of range");
    return is_di_simplicial_within(d, d.vertices(), v, var);
}

inline std::optional<Witness> witness(const Digraph& d, Vertex v, Variant var) {
    if (v < 0 || v >= d.order()) throw DigraphError("vertex out of range");
    return witness_within(d, d.vertices(), v, var);
}

/// Outcome of greedy elimination: the removal sequence and, on failure, the
/// vertex set of the stalled induced subdigraph (empty on success).
struct EliminationRun {
    std::vector<Vertex> removed;
    VertexSet stalled;
    bool complete() const { return stalled.empty(); }
};

/// Repeatedly removes the lowest-indexed di-simplicial vertex of what remains.
inline EliminationRun greedy_eliminate(const Digraph& d, Variant var) {
    EliminationRun run;
    auto alive = d.vertices();
    while (!alive.empty()) {
        std::optional<Vertex> pick;
        for (Vertex v : alive)
            if (is_di_simplicial_within(d, alive, v, var)) {
                pick = v;
                break;
            }
        if (!pick) {
            run.stalled = alive;
            return run;
        }
        run.removed.push_back(*pick);
        alive.erase(*pick);
    }
    return run;
}

inline std::optional<EliminationOrdering> elimination_ordering(const Digraph& d, Variant var) {
    auto run = greedy_eliminate(d, var);
    if (!run.complete()) return std::nullopt;
    return EliminationOrdering{std::move(run.removed), var};
}

inline bool is_chordal(const Digraph& d, Variant var) { return greedy_eliminate(d, var).complete(); }

/// Certificate check. Each vertex is tested on the genuinely induced suffix
/// subdigraph, independent of the masks used by the recogniser.
inline bool verify_ordering(const Digraph& d, const EliminationOrdering& ord) {
    if (static_cast<int>(ord.order.size()) != d.order()) throw DigraphError("ordering is not a permutation");
    VertexSet seen;
    for (Vertex v : ord.order) {
        if (v < 0 || v >= d.order() || seen.contains(v)) throw DigraphError("ordering is not a permutation");
        seen.insert(v);
    }
    VertexSet suffix = d.vertices();
    for (Vertex v : ord.order) {
        auto sub = induced(d, suffix);
        Vertex local = 0;
        while (sub.original[local] != v) ++local;
        if (!is_di_simplicial(sub.digraph, local, ord.variant)) return false;
        suffix.erase(v);
    }
    return true;
}

inline constexpr int oracle_cap = 12;

/// Definition taken literally: every nonempty vertex subset induces a
/// subdigraph with a di-simplicial vertex.
inline bool oracle_is_chordal(const Digraph& d, Variant var) {
    if (d.order() > oracle_cap) throw DigraphError("oracle size cap exceeded");
    const std::uint64_t subsets = std::uint64_t{1} << d.order();
    for (std::uint64_t s = 1; s < subsets; ++s) {
        auto sub = induced(d, VertexSet(s)).digraph;
        bool found = false;
        for (Vertex v = 0; v < sub.order() && !found; ++v) found = is_di_simplicial(sub, v, var);
        if (!found) return false;
    }
    return true;
}

/// Chordality of an undirected graph given as symmetric neighbour masks, by
/// repeated simplicial-vertex deletion.
inline bool undirected_chordal(std::span<const VertexSet> adjacency) {
    auto alive = VertexSet::range(static_cast<int>(adjacency.size()));
    while (!alive.empty()) {
        std::optional<Vertex> pick;
        for (Vertex v : alive) {
            auto nb = adjacency[v] & alive;
            bool clique = true;
            for (Vertex u : nb)
                if (!nb.without(u).subset_of(adjacency[u])) {
                    clique = false;
                    break;
                }
            if (clique) {
                pick = v;
                break;
            }
        }
        if (!pick) return false;
        alive.erase(*pick);
    }
    return true;
}

/// Is the underlying graph of S(D) chordal?
inline bool underlying_SD_is_chordal(const Digraph& d) {
    std::vector<VertexSet> adj(d.order());
    for (Vertex v = 0; v < d.order(); ++v) adj[v] = d.symmetric_neighbours(v);
    return undirected_chordal(adj);
}

}  // namespace sschordal

#endif
