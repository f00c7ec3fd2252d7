#ifndef SSCHORDAL_KNOTTING_HPP
#define SSCHORDAL_KNOTTING_HPP

// Knotting graphs of digraphs.
//
// At a vertex v, two incident arcs e, f are directly compatible when their far
// endpoints differ, one is in-coming and the other out-going at v, and the far
// endpoints are not joined by a digon. The splitting classes of v are the
// connected components of this relation on E_v. K_D has one node per class and
// one edge per arc of D, joining the two classes that contain it.

#include <sschordal/chordality.hpp>
#include <sschordal/digraph.hpp>
#include <sschordal/io.hpp>

#include <map>
#include <numeric>
#include <sstream>
#include <vector>

namespace sschordal {

enum class Direction { InComing, OutGoing };

struct IncidentArc {
    Arc arc;
    Direction direction;
    Vertex other;
};

struct SplittingClass {
    Vertex owner;
    int index;                 // 1-based within the owner's group
    std::vector<Arc> members;  // sorted; empty only for an isolated owner
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Arcs incident with v, in lexicographic arc order.
inline std::vector<IncidentArc> incident_arcs(const Digraph& d, Vertex v) {
    std::vector<IncidentArc> out;
    for (auto [a, b] : d.arcs())
        if (a == v)
            out.push_back({{a, b}, Direction::OutGoing, b});
        else if (b == v)
            out.push_back({{a, b}, Direction::InComing, a});
    return out;
}

inline bool directly_compatible(const Digraph& d, const IncidentArc& e, const IncidentArc& f) {
    return e.other != f.other && e.direction != f.direction && !d.digon(e.other, f.other);
}

/// Splitting classes of v, ordered by smallest member arc.
inline std::vector<SplittingClass> knot_classes(const Digraph& d, Vertex v) {
    if (v < 0 || v >= d.order()) throw DigraphError("vertex out of range");
    auto arcs = incident_arcs(d, v);
    if (arcs.empty()) return {SplittingClass{v, 1, {}}};
    DisjointSets dsu(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (directly_compatible(d, arcs[i], arcs[j])) dsu.unite(i, j);
    // Roots are minimal indices, and arcs are sorted, so classes come out in
    // order of their smallest member.
    std::map<std::size_t, std::vector<Arc>> by_root;
    for (std::size_t i = 0; i < arcs.size(); ++i) by_root[dsu.find(i)].push_back(arcs[i].arc);
    std::vector<SplittingClass> out;
    for (auto& [root, members] : by_root)
        out.push_back({v, static_cast<int>(out.size()) + 1, std::move(members)});
    return out;
}

class KnottingGraph {
public:
    KnottingGraph() = default;

    explicit KnottingGraph(const Digraph& d) : arcs_(d.arcs()), group_begin_(d.order() + 1, 0) {
        std::map<Arc, std::pair<int, int>> ends;  // arc -> (class at tail, class at head)
        for (Vertex v = 0; v < d.order(); ++v) {
            group_begin_[v] = static_cast<int>(classes_.size());
            for (auto& c : knot_classes(d, v)) {
                int id = static_cast<int>(classes_.size());
                for (const auto& a : c.members) (a.first == v ? ends[a].first : ends[a].second) = id;
                classes_.push_back(std::move(c));
            }
        }
        group_begin_[d.order()] = static_cast<int>(classes_.size());
        degree_.assign(classes_.size(), 0);
        for (const auto& a : arcs_) {
            auto [x, y] = ends.at(a);
            edges_.emplace_back(x, y);
            ++degree_[x];
            ++degree_[y];
        }
    }

    int order() const { return static_cast<int>(group_begin_.size()) - 1; }
    const std::vector<SplittingClass>& classes() const { return classes_; }

    /// Edge i corresponds to arc i of arcs(); endpoints are class ids.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    int edge_of(const Arc& a) const {
        auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
        if (it == arcs_.end() || *it != a) throw DigraphError("arc not in digraph");
        return static_cast<int>(it - arcs_.begin());
    }

    /// Class ids owned by v, as [first, last).
    std::pair<int, int> group(Vertex v) const {
        if (v < 0 || v >= order()) throw DigraphError("unknown vertex");
        return {group_begin_[v], group_begin_[v + 1]};
    }
    int group_size(Vertex v) const {
        auto [a, b] = group(v);
        return b - a;
    }

    int degree(int class_id) const { return degree_[class_id]; }

    /// "v^j" style name of a class.
    std::string class_name(int class_id, const Labels& labels = {}) const {
        const auto& c = classes_[class_id];
        return labels(c.owner) + "^" + std::to_string(c.index);
    }

private:
    std::vector<Arc> arcs_;
    std::vector<SplittingClass> classes_;
    std::vector<int> group_begin_;
    std::vector<int> degree_;
    std::vector<std::pair<int, int>> edges_;
};

inline KnottingGraph knotting_graph(const Digraph& d) { return KnottingGraph(d); }

/// Largest K-degree among v's splitting classes.
inline int group_max_degree(const KnottingGraph& k, Vertex v) {
    auto [a, b] = k.group(v);
    int best = 0;
    for (int c = a; c < b; ++c) best = std::max(best, k.degree(c));
    return best;
}

/// Splitting-group test for a single vertex: all of v's classes have degree <= 1.
inline bool lemma1_check(const Digraph& d, Vertex v) { return group_max_degree(knotting_graph(d), v) <= 1; }

/// Iterated elimination through freshly computed knotting graphs: delete the
/// lowest vertex whose splitting group has maximum degree <= 1.
inline bool ss_chordal_via_knotting(const Digraph& d) {
    auto alive = d.vertices();
    while (!alive.empty()) {
        auto sub = induced(d, alive);
        auto k = knotting_graph(sub.digraph);
        std::optional<Vertex> pick;
        for (Vertex v = 0; v < sub.digraph.order(); ++v)
            if (group_max_degree(k, v) <= 1) {
                pick = sub.original[v];
                break;
            }
        if (!pick) return false;
        alive.erase(*pick);
    }
    return true;
}

/// Every nonempty induced subdigraph H has a vertex whose splitting group in
/// K_H has maximum degree <= 1.
inline bool theorem2_oracle(const Digraph& d) {
    if (d.order() > oracle_cap) throw DigraphError("oracle size cap exceeded");
    const std::uint64_t subsets = std::uint64_t{1} << d.order();
    for (std::uint64_t s = 1; s < subsets; ++s) {
        auto sub = induced(d, VertexSet(s)).digraph;
        auto k = knotting_graph(sub);
        bool found = false;
        for (Vertex v = 0; v < sub.order() && !found; ++v) found = group_max_degree(k, v) <= 1;
        if (!found) return false;
    }
    return true;
}

// ---- group-respecting comparison -------------------------------------------

/// Bare structure of a knotting-like graph: class nodes tagged with a group,
/// undirected edges between nodes. Used to compare knotting graphs without
/// depending on class labels.
struct GroupedGraph {
    std::vector<int> group_of;  // node -> group
    int groups = 0;
    std::vector<std::pair<int, int>> edges;

    static GroupedGraph of(const KnottingGraph& k) {
        GroupedGraph g;
        g.groups = k.order();
        for (const auto& c : k.classes()) g.group_of.push_back(c.owner);
        g.edges = k.edges();
        return g;
    }
};

namespace detail {

struct GroupedSearch {
    const GroupedGraph& a;
    const GroupedGraph& b;
    std::vector<std::vector<int>> adj_a, adj_b;  // edge multiplicities
    std::vector<int> node_map, group_map, group_inv;
    std::vector<bool> used;

    GroupedSearch(const GroupedGraph& x, const GroupedGraph& y) : a(x), b(y) {
        auto fill = [](const GroupedGraph& g) {
            std::vector<std::vector<int>> m(g.group_of.size(), std::vector<int>(g.group_of.size(), 0));
            for (auto [p, q] : g.edges) {
                ++m[p][q];
                if (p != q) ++m[q][p];
            }
            return m;
        };
        adj_a = fill(a);
        adj_b = fill(b);
        node_map.assign(a.group_of.size(), -1);
        group_map.assign(a.groups, -1);
        group_inv.assign(b.groups, -1);
        used.assign(b.group_of.size(), false);
    }

    bool extend(std::size_t next) {
        if (next == node_map.size()) return true;
        int ga = a.group_of[next];
        for (std::size_t cand = 0; cand < b.group_of.size(); ++cand) {
            if (used[cand]) continue;
            int gb = b.group_of[cand];
            bool fresh = group_map[ga] < 0;
            if (fresh ? group_inv[gb] >= 0 : group_map[ga] != gb) continue;
            if (adj_a[next][next] != adj_b[cand][cand]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < next && ok; ++p) ok = adj_a[p][next] == adj_b[node_map[p]][cand];
            if (!ok) continue;
            node_map[next] = static_cast<int>(cand);
            used[cand] = true;
            if (fresh) group_map[ga] = gb, group_inv[gb] = ga;
            if (extend(next + 1)) return true;
            used[cand] = false;
            if (fresh) group_map[ga] = -1, group_inv[gb] = -1;
        }
        return false;
    }
};

}  // namespace detail

/// True iff some node bijection maps groups onto groups and preserves edges.
/// Groups that own no node are ignored.
inline bool group_respecting_isomorphic(const GroupedGraph& a, const GroupedGraph& b) {
    if (a.group_of.size() != b.group_of.size() || a.edges.size() != b.edges.size()) return false;
    auto sizes = [](const GroupedGraph& g) {
        std::vector<int> s(g.groups, 0);
        for (int x : g.group_of) ++s[x];
        std::vector<int> nz;
        for (int x : s)
            if (x) nz.push_back(x);
        std::sort(nz.begin(), nz.end());
        return nz;
    };
    if (sizes(a) != sizes(b)) return false;
    detail::GroupedSearch search(a, b);
    return search.extend(0);
}

inline bool group_respecting_isomorphic(const KnottingGraph& a, const KnottingGraph& b) {
    return group_respecting_isomorphic(GroupedGraph::of(a), GroupedGraph::of(b));
}

/// K_D with v's group removed. A surviving class that loses all its arcs is
/// dropped, except that a vertex left with no arcs keeps one empty class.
inline GroupedGraph delete_group(const KnottingGraph& k, Vertex v) {
    GroupedGraph g;
    g.groups = k.order();
    std::vector<int> remaining(k.classes().size(), 0);
    for (std::size_t e = 0; e < k.edges().size(); ++e) {
        auto [x, y] = k.edges()[e];
        if (k.classes()[x].owner == v || k.classes()[y].owner == v) continue;
        ++remaining[x];
        ++remaining[y];
    }
    std::vector<int> new_id(k.classes().size(), -1);
    for (Vertex u = 0; u < k.order(); ++u) {
        if (u == v) continue;
        auto [a, b] = k.group(u);
        bool any = false;
        for (int c = a; c < b; ++c)
            if (remaining[c] > 0) {
                new_id[c] = static_cast<int>(g.group_of.size());
                g.group_of.push_back(u);
                any = true;
            }
        if (!any) g.group_of.push_back(u);
    }
    for (std::size_t e = 0; e < k.edges().size(); ++e) {
        auto [x, y] = k.edges()[e];
        if (new_id[x] >= 0 && new_id[y] >= 0) g.edges.emplace_back(new_id[x], new_id[y]);
    }
    // Groups must be dense for comparison against K_{D-v}: renumber u > v down.
    for (auto& x : g.group_of)
        if (x > v) --x;
    g.groups = k.order() - 1;
    return g;
}

// ---- rendering -------------------------------------------------------------

inline std::string arc_name(const Arc& a, const Labels& labels) { return labels(a.first) + labels(a.second); }

/// One line per class ("v^j: {arcs}") followed by one line per edge.
inline std::string knotting_listing(const KnottingGraph& k, const Labels& labels = {}) {
    std::ostringstream os;
    // Single-character labels concatenate unambiguously; otherwise separate.
    bool short_names = true;
    for (Vertex v = 0; v < k.order(); ++v) short_names = short_names && labels(v).size() == 1;
    auto name = [&](const Arc& a) {
        return short_names ? arc_name(a, labels) : labels(a.first) + "->" + labels(a.second);
    };
    os << "classes " << k.classes().size() << '\n';
    for (std::size_t c = 0; c < k.classes().size(); ++c) {
        os << k.class_name(static_cast<int>(c), labels) << ": {";
        const auto& m = k.classes()[c].members;
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << name(m[i]);
        os << "}\n";
    }
    os << "edges " << k.edges().size() << '\n';
    for (std::size_t e = 0; e < k.edges().size(); ++e) {
        auto [x, y] = k.edges()[e];
        os << k.class_name(x, labels) << " -- " << k.class_name(y, labels) << "  (" << name(k.arcs()[e]) << ")\n";
    }
    return os.str();
}

inline std::string knotting_dot(const KnottingGraph& k, const Labels& labels = {}) {
    std::ostringstream os;
    os << "graph K {\n";
    for (Vertex v = 0; v < k.order(); ++v) {
        os << "  subgraph cluster_" << v << " {\n    label=" << dot_quote(labels(v)) << ";\n";
        auto [a, b] = k.group(v);
        for (int c = a; c < b; ++c) os << "    " << dot_quote(k.class_name(c, labels)) << ";\n";
        os << "  }\n";
    }
    for (auto [x, y] : k.edges())
        os << "  " << dot_quote(k.class_name(x, labels)) << " -- " << dot_quote(k.class_name(y, labels)) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace sschordal

#endif
