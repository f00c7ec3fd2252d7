#ifndef SSCHORDAL_TESTS_FIXTURES_HPP
#define SSCHORDAL_TESTS_FIXTURES_HPP

#include <sschordal/sschordal.hpp>

#include <set>
#include <vector>

namespace fixtures {

using namespace sschordal;

inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4;

// Four vertices, one digon c<->d; not semi-strict chordal.
inline Digraph example1() { return Digraph::build(4, {{a, b}, {b, c}, {d, a}, {d, b}, {d, c}, {c, d}}); }

// Five vertices, digons b<->e, d<->c, e<->c; semi-strict chordal.
inline Digraph example2() {
    return Digraph::build(5, {{a, b}, {e, a}, {c, b}, {b, e}, {e, b}, {d, c}, {c, d}, {e, c}, {c, e}, {e, d}});
}

inline Labels letters(int n) {
    Labels l;
    for (int i = 0; i < n; ++i) l.names.push_back(std::string(1, static_cast<char>('a' + i)));
    return l;
}

// In-star: 1 -> 0 <- 2.
inline Digraph in_star() { return Digraph::build(3, {{1, 0}, {2, 0}}); }

inline std::vector<Digraph> all_digraphs_up_to(int n) {
    std::vector<Digraph> out;
    for (int k = 0; k <= n; ++k)
        for (auto g : enumerate_digraphs(k)) out.push_back(g);
    return out;
}

// Arc-set view used by naive test oracles, independent of the bitmask code.
struct ArcSet {
    int n;
    std::set<Arc> arcs;
    explicit ArcSet(const Digraph& g) : n(g.order()) {
        for (auto x : g.arcs()) arcs.insert(x);
    }
    bool has(Vertex u, Vertex v) const { return arcs.count({u, v}) > 0; }
    bool digon(Vertex u, Vertex v) const { return has(u, v) && has(v, u); }
    bool adjacent(Vertex u, Vertex v) const { return has(u, v) || has(v, u); }
};

// Semi-strict di-simpliciality of v within `alive`, straight from the definition.
inline bool naive_ss_simplicial(const ArcSet& g, const std::vector<bool>& alive, Vertex v) {
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex w = 0; w < g.n; ++w) {
            if (!alive[u] || !alive[w] || u == w || u == v || w == v) continue;
            if (g.has(u, v) && g.has(v, w) && !g.digon(u, w)) return false;
        }
    return true;
}

// Weak quasi-transitivity straight from the cell definition.
inline bool naive_wqt(const Digraph& dg) {
    ArcSet g(dg);
    auto cell = [&](Vertex v, Vertex u) { return (g.has(u, v) ? 1 : 0) + (g.has(v, u) ? 2 : 0); };
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex u = 0; u < g.n; ++u)
            for (Vertex w = u + 1; w < g.n; ++w) {
                if (u == v || w == v || !g.adjacent(u, v) || !g.adjacent(w, v)) continue;
                if (cell(v, u) != cell(v, w) && !g.adjacent(u, w)) return false;
            }
    return true;
}

// Canonical indices (per order) of every digraph reachable by nesting
// substitutions into transitive oriented, semicomplete or symmetric digraphs,
// up to `depth` levels, restricted to at most `n_max` vertices.
inline std::set<std::pair<int, std::uint64_t>> substitution_closure(int n_max, int depth) {
    using Key = std::pair<int, std::uint64_t>;
    std::set<Key> base_keys;
    for (int n = 1; n <= n_max; ++n)
        for (auto g : enumerate_digraphs(n))
            if (is_transitive_oriented(g) || is_semicomplete(g) || is_symmetric(g))
                base_keys.insert({n, canonical_index(g)});
    auto rep = [](const Key& k) {
        auto g = digraph_at(k.first, k.second);
        return g;
    };
    std::set<Key> level = base_keys;
    for (int round = 1; round < depth; ++round) {
        std::vector<Digraph> parts_pool;
        for (const auto& k : level) parts_pool.push_back(rep(k));
        std::set<Key> next = level;
        for (const auto& bk : base_keys) {
            int m = bk.first;
            if (m < 2) continue;
            auto outer = rep(bk);
            std::vector<Digraph> parts(m);
            // Odometer over part choices whose orders sum to at most n_max.
            auto rec = [&](auto&& self, int i, int used) -> void {
                if (i == m) {
                    auto g = substitute(outer, parts);
                    next.insert({g.order(), canonical_index(g)});
                    return;
                }
                for (const auto& p : parts_pool) {
                    if (used + p.order() + (m - i - 1) > n_max) continue;
                    parts[i] = p;
                    self(self, i + 1, used + p.order());
                }
            };
            rec(rec, 0, 0);
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace fixtures

#endif
