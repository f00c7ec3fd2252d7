#ifndef SSCHORDAL_DIGRAPH_HPP
#define SSCHORDAL_DIGRAPH_HPP

// Loop-free digraphs over dense vertex indices.
//
// Every unordered pair {i,j}, i<j, carries one 2-bit PairKind code; the codes
// live in an upper-triangular array enumerated (0,1),(0,2),(1,2),(0,3),...
// In/out neighbourhoods are mirrored as 64-bit masks so every predicate in the
// library is a handful of word operations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sschordal {

using Vertex = int;

inline constexpr int max_order = 64;

class DigraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class PairKind : std::uint8_t { None = 0, Forward = 1, Backward = 2, Digon = 3 };

/// Subset of 0..63, iterated in ascending order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet of(std::initializer_list<Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr Vertex first() const { return std::countr_zero(bits_); }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t b) : b_(b) {}
        constexpr Vertex operator*() const { return std::countr_zero(b_); }
        constexpr iterator& operator++() {
            b_ &= b_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t b_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

using Arc = std::pair<Vertex, Vertex>;

/// Position of the unordered pair {i,j} (i<j) in the pair-code array.
constexpr std::size_t pair_index(Vertex i, Vertex j) {
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

constexpr std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

class Digraph {
public:
    Digraph() = default;

    /// Arcless digraph on n vertices.
    explicit Digraph(int n) : n_(n), codes_(pair_count(check_order(n)), 0), in_(n), out_(n) {}

    static Digraph build(int n, std::span<const Arc> arcs) {
        Digraph d(n);
        for (auto [u, v] : arcs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw DigraphError("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v) throw DigraphError("loop arc at vertex " + std::to_string(u));
            d.add_arc(u, v);
        }
        return d;
    }
    static Digraph build(int n, std::initializer_list<Arc> arcs) {
        return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    /// Digraph from a full pair-code array in pair_index order.
    static Digraph from_codes(int n, std::span<const std::uint8_t> codes) {
        if (codes.size() != pair_count(n)) throw DigraphError("pair-code array has wrong length");
        Digraph d(n);
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) d.set_pair(i, j, static_cast<PairKind>(codes[pair_index(i, j)] & 3U));
        return d;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }

    PairKind pair_kind(Vertex u, Vertex v) const {
        if (u == v) return PairKind::None;
        if (u < v) return static_cast<PairKind>(codes_[pair_index(u, v)]);
        auto k = static_cast<PairKind>(codes_[pair_index(v, u)]);
        if (k == PairKind::Forward) return PairKind::Backward;
        if (k == PairKind::Backward) return PairKind::Forward;
        return k;
    }

    bool adjacent(Vertex u, Vertex v) const { return neighbours(u).contains(v); }
    bool digon(Vertex u, Vertex v) const { return symmetric_neighbours(u).contains(v); }

    VertexSet in_neighbours(Vertex v) const { return in_[v]; }
    VertexSet out_neighbours(Vertex v) const { return out_[v]; }
    VertexSet neighbours(Vertex v) const { return in_[v] | out_[v]; }
    VertexSet symmetric_neighbours(Vertex v) const { return in_[v] & out_[v]; }

    std::size_t arc_count() const {
        std::size_t m = 0;
        for (const auto& s : out_) m += static_cast<std::size_t>(s.size());
        return m;
    }

    /// All arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : out_[u]) out.emplace_back(u, v);
        return out;
    }

    std::span<const std::uint8_t> codes() const { return codes_; }

    void add_arc(Vertex u, Vertex v) {
        out_[u].insert(v);
        in_[v].insert(u);
        refresh_code(u, v);
    }

    void set_pair(Vertex u, Vertex v, PairKind k) {
        out_[u].erase(v);
        in_[v].erase(u);
        out_[v].erase(u);
        in_[u].erase(v);
        if (k == PairKind::Forward || k == PairKind::Digon) {
            out_[u].insert(v);
            in_[v].insert(u);
        }
        if (k == PairKind::Backward || k == PairKind::Digon) {
            out_[v].insert(u);
            in_[u].insert(v);
        }
        refresh_code(u, v);
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && codes_ == o.codes_; }

private:
    static int check_order(int n) {
        if (n < 0 || n > max_order) throw DigraphError("vertex count out of range: " + std::to_string(n));
        return n;
    }

    void refresh_code(Vertex u, Vertex v) {
        auto i = std::min(u, v), j = std::max(u, v);
        std::uint8_t c = (out_[i].contains(j) ? 1U : 0U) | (out_[j].contains(i) ? 2U : 0U);
        codes_[pair_index(i, j)] = c;
    }

    int n_ = 0;
    std::vector<std::uint8_t> codes_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> out_;
};

// ---- neighbourhoods --------------------------------------------------------

inline VertexSet in_neighbours(const Digraph& d, Vertex v) {
    if (v < 0 || v >= d.order()) throw DigraphError("vertex out of range");
    return d.in_neighbours(v);
}

inline VertexSet out_neighbours(const Digraph& d, Vertex v) {
    if (v < 0 || v >= d.order()) throw DigraphError("vertex out of range");
    return d.out_neighbours(v);
}

/// Cell of u in the partition {in-only, out-only, both} of v's neighbourhood.
/// Returns -1 when u is not a neighbour of v.
inline int neighbour_cell(const Digraph& d, Vertex v, Vertex u) {
    bool in = d.in_neighbours(v).contains(u), out = d.out_neighbours(v).contains(u);
    if (in && out) return 2;
    if (in) return 0;
    if (out) return 1;
    return -1;
}

/// True iff u and w lie in different cells of v's neighbourhood partition.
inline bool asynchronous(const Digraph& d, Vertex v, Vertex u, Vertex w) {
    if (u == w) throw DigraphError("asynchronous: u and w must differ");
    int cu = neighbour_cell(d, v, u), cw = neighbour_cell(d, v, w);
    if (cu < 0 || cw < 0) throw DigraphError("asynchronous: not a neighbour of v");
    return cu != cw;
}

// ---- derived digraphs ------------------------------------------------------

/// Spanning subdigraph keeping exactly the symmetric arcs.
inline Digraph symmetric_subdigraph(const Digraph& d) {
    Digraph s(d.order());
    for (Vertex j = 1; j < d.order(); ++j)
        for (Vertex i = 0; i < j; ++i)
            if (d.pair_kind(i, j) == PairKind::Digon) s.set_pair(i, j, PairKind::Digon);
    return s;
}

struct InducedSubdigraph {
    Digraph digraph;
    std::vector<Vertex> original;  // new index -> host vertex
};

/// Subdigraph induced by S, relabelled 0..|S|-1 in ascending host order.
inline InducedSubdigraph induced(const Digraph& d, VertexSet s) {
    if (!s.subset_of(d.vertices())) throw DigraphError("induced: vertex set exceeds host");
    InducedSubdigraph r{Digraph(s.size()), s.to_vector()};
    const auto& vs = r.original;
    for (std::size_t j = 1; j < vs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            r.digraph.set_pair(static_cast<Vertex>(i), static_cast<Vertex>(j), d.pair_kind(vs[i], vs[j]));
    return r;
}

/// Replace each vertex v of the quotient by parts[v]. Vertices of part v are
/// numbered consecutively after those of parts 0..v-1.
inline Digraph substitute(const Digraph& quotient, std::span<const Digraph> parts) {
    if (static_cast<int>(parts.size()) != quotient.order())
        throw DigraphError("substitute: need one part per vertex");
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t v = 0; v < parts.size(); ++v) {
        if (parts[v].order() == 0) throw DigraphError("substitute: empty part");
        offset[v + 1] = offset[v] + parts[v].order();
    }
    Digraph out(offset.back());
    for (std::size_t v = 0; v < parts.size(); ++v)
        for (auto [x, y] : parts[v].arcs()) out.add_arc(offset[v] + x, offset[v] + y);
    for (auto [a, b] : quotient.arcs())
        for (int x = offset[a]; x < offset[a + 1]; ++x)
            for (int y = offset[b]; y < offset[b + 1]; ++y) out.add_arc(x, y);
    return out;
}

/// Relabel: vertex v of d becomes perm[v].
inline Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
    Digraph out(d.order());
    for (auto [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
    return out;
}

// ---- isomorphism -----------------------------------------------------------

namespace detail {

struct DegreeTriple {
    int in_only, out_only, digon;
    bool operator==(const DegreeTriple&) const = default;
    auto operator<=>(const DegreeTriple&) const = default;
};

inline DegreeTriple degree_triple(const Digraph& d, Vertex v) {
    auto sym = d.symmetric_neighbours(v);
    return {(d.in_neighbours(v) - sym).size(), (d.out_neighbours(v) - sym).size(), sym.size()};
}

inline bool extend_iso(const Digraph& a, const Digraph& b, const std::vector<DegreeTriple>& da,
                       const std::vector<DegreeTriple>& db, std::vector<Vertex>& map, VertexSet used, Vertex next) {
    if (next == a.order()) return true;
    for (Vertex cand = 0; cand < b.order(); ++cand) {
        if (used.contains(cand) || da[next] != db[cand]) continue;
        bool ok = true;
        for (Vertex p = 0; p < next && ok; ++p) ok = a.pair_kind(p, next) == b.pair_kind(map[p], cand);
        if (!ok) continue;
        map[next] = cand;
        used.insert(cand);
        if (extend_iso(a, b, da, db, map, used, next + 1)) return true;
        used.erase(cand);
    }
    return false;
}

}  // namespace detail

/// Pair-kind preserving bijection a -> b, if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
    std::vector<detail::DegreeTriple> da, db;
    for (Vertex v = 0; v < a.order(); ++v) da.push_back(detail::degree_triple(a, v));
    for (Vertex v = 0; v < b.order(); ++v) db.push_back(detail::degree_triple(b, v));
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    std::vector<Vertex> map(a.order(), -1);
    if (!detail::extend_iso(a, b, da, db, map, VertexSet{}, 0)) return std::nullopt;
    return map;
}

inline bool are_isomorphic(const Digraph& a, const Digraph& b) { return find_isomorphism(a, b).has_value(); }

// ---- enumeration -----------------------------------------------------------

/// Default cap for exhaustive enumeration (4^10 digraphs at n=5).
inline constexpr int default_enumeration_cap = 5;

/// Number of labelled digraphs on n vertices, 4^(n(n-1)/2).
inline std::uint64_t digraph_count(int n) {
    auto p = pair_count(n);
    if (2 * p >= 64) throw DigraphError("digraph count overflows for n=" + std::to_string(n));
    return std::uint64_t{1} << (2 * p);
}

/// Digraph number `index` in enumeration order: lexicographic on the pair-code
/// string, pair (0,1) most significant.
inline Digraph digraph_at(int n, std::uint64_t index) {
    auto p = pair_count(n);
    std::vector<std::uint8_t> codes(p);
    for (std::size_t k = p; k-- > 0;) {
        codes[k] = static_cast<std::uint8_t>(index & 3U);
        index >>= 2;
    }
    return Digraph::from_codes(n, codes);
}

/// Inverse of digraph_at.
inline std::uint64_t enumeration_index(const Digraph& d) {
    std::uint64_t x = 0;
    for (auto c : d.codes()) x = (x << 2) | c;
    return x;
}

/// Forward range over all labelled digraphs on n vertices, or over a
/// contiguous index shard of them.
class DigraphEnumeration {
public:
    DigraphEnumeration(int n, int cap = default_enumeration_cap) : n_(n) {
        if (n < 0) throw DigraphError("negative vertex count");
        if (n > cap) throw DigraphError("enumeration cap exceeded: n=" + std::to_string(n) + " > " + std::to_string(cap));
        last_ = digraph_count(n);
    }

    DigraphEnumeration shard(std::uint64_t first, std::uint64_t last) const {
        auto s = *this;
        s.first_ = std::min(first, last_);
        s.last_ = std::clamp(last, s.first_, last_);
        return s;
    }

    std::uint64_t size() const { return last_ - first_; }

    class iterator {
    public:
        using value_type = Digraph;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(int n, std::uint64_t i) : n_(n), i_(i) {}
        Digraph operator*() const { return digraph_at(n_, i_); }
        std::uint64_t index() const { return i_; }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        bool operator==(const iterator& o) const { return i_ == o.i_; }

    private:
        int n_ = 0;
        std::uint64_t i_ = 0;
    };

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }

private:
    int n_;
    std::uint64_t first_ = 0;
    std::uint64_t last_ = 0;
};

inline DigraphEnumeration enumerate_digraphs(int n, int cap = default_enumeration_cap) {
    return DigraphEnumeration(n, cap);
}

/// Lexicographically smallest enumeration index over all relabellings.
/// Brute force over n! permutations; intended for n <= 8.
inline std::uint64_t canonical_index(const Digraph& d) {
    std::vector<Vertex> perm(d.order());
    std::iota(perm.begin(), perm.end(), 0);
    auto best = enumeration_index(d);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, enumeration_index(relabel(d, perm)));
    return best;
}

// ---- random digraphs -------------------------------------------------------

/// splitmix64 step; used to derive independent per-sample seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Small deterministic generator; output is identical across standard
/// libraries because no std distribution is involved.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix_seed(seed)) {}

    std::uint64_t next() {
        state_ = mix_seed(state_);
        return state_;
    }
    /// Uniform double in [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [lo, hi].
    int between(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(next() % span);
    }
    bool chance(double p) { return uniform() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[next() % i]);
    }

private:
    std::uint64_t state_;
};

/// Probabilities of {None, Forward, Backward, Digon} per unordered pair.
struct KindWeights {
    double none = 1, forward = 1, backward = 1, digon = 1;
};

inline PairKind draw_kind(Rng& rng, const KindWeights& w) {
    double total = w.none + w.forward + w.backward + w.digon;
    double x = rng.uniform() * total;
    if ((x -= w.none) < 0) return PairKind::None;
    if ((x -= w.forward) < 0) return PairKind::Forward;
    if ((x -= w.backward) < 0) return PairKind::Backward;
    return w.digon > 0 ? PairKind::Digon : (w.backward > 0 ? PairKind::Backward : PairKind::Forward);
}

inline Digraph random_digraph(int n, const KindWeights& w, std::uint64_t seed) {
    if (w.none < 0 || w.forward < 0 || w.backward < 0 || w.digon < 0) throw DigraphError("negative kind weight");
    if (!(w.none + w.forward + w.backward + w.digon > 0)) throw DigraphError("kind weights must have positive sum");
    Rng rng(seed);
    Digraph d(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) d.set_pair(i, j, draw_kind(rng, w));
    return d;
}

// ---- small named digraphs used throughout ----------------------------------

inline Digraph complete_symmetric(int n) {
    Digraph d(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) d.set_pair(i, j, PairKind::Digon);
    return d;
}

/// 0 -> 1 -> ... -> n-1 -> 0 with non-symmetric arcs.
inline Digraph directed_cycle(int n) {
    Digraph d(n);
    for (Vertex i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
    return d;
}

inline Digraph directed_path(int n) {
    Digraph d(n);
    for (Vertex i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
    return d;
}

/// Transitive tournament: i -> j for all i < j.
inline Digraph transitive_tournament(int n) {
    Digraph d(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) d.add_arc(i, j);
    return d;
}

}  // namespace sschordal

#endif
