#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace sschordal;
using namespace fixtures;

namespace {

bool naive_semicomplete(const ArcSet& g) {
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex w = u + 1; w < g.n; ++w)
            if (!g.adjacent(u, w)) return false;
    return true;
}

bool naive_locally_semicomplete(const ArcSet& g) {
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex u = 0; u < g.n; ++u)
            for (Vertex w = u + 1; w < g.n; ++w) {
                if (u == v || w == v || g.adjacent(u, w)) continue;
                if ((g.has(u, v) && g.has(w, v)) || (g.has(v, u) && g.has(v, w))) return false;
            }
    return true;
}

bool naive_quasi_transitive(const ArcSet& g) {
    for (auto [u, v] : g.arcs)
        for (Vertex w = 0; w < g.n; ++w)
            if (w != u && g.has(v, w) && !g.adjacent(u, w)) return false;
    return true;
}

// Non-adjacent distinct vertices must be twins.
bool naive_extended_semicomplete(const ArcSet& g) {
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex w = u + 1; w < g.n; ++w) {
            if (g.adjacent(u, w)) continue;
            for (Vertex x = 0; x < g.n; ++x)
                if (g.has(x, u) != g.has(x, w) || g.has(u, x) != g.has(w, x)) return false;
        }
    return true;
}

bool naive_transitive_oriented(const ArcSet& g) {
    for (auto [u, v] : g.arcs) {
        if (g.has(v, u)) return false;
        for (Vertex w = 0; w < g.n; ++w)
            if (w != u && g.has(v, w) && !g.has(u, w)) return false;
    }
    return true;
}

}  // namespace

TEST(Classes, Examples) {
    auto tt = transitive_tournament(4);
    auto ks = complete_symmetric(4);
    auto path = directed_path(3);
    auto c3 = directed_cycle(3);
    EXPECT_TRUE(is_semicomplete(tt));
    EXPECT_TRUE(is_semicomplete(ks));
    EXPECT_FALSE(is_semicomplete(path));
    EXPECT_TRUE(is_locally_semicomplete(directed_cycle(4)));
    EXPECT_FALSE(is_locally_semicomplete(in_star()));
    EXPECT_TRUE(is_weakly_quasi_transitive(ks));
    EXPECT_FALSE(is_weakly_quasi_transitive(example1()));
    EXPECT_EQ(*weakly_quasi_transitive_witness(example1()), (VertexTuple{a, b, c}));
    EXPECT_TRUE(is_quasi_transitive(tt));
    EXPECT_FALSE(is_quasi_transitive(path));
    EXPECT_TRUE(is_quasi_transitive(ks));
    EXPECT_TRUE(is_extended_semicomplete(Digraph(3)));
    EXPECT_FALSE(is_extended_semicomplete(path));
    std::vector<Digraph> parts{Digraph(2), Digraph(1), Digraph(1)};
    EXPECT_TRUE(is_extended_semicomplete(substitute(c3, parts)));
    EXPECT_TRUE(is_transitive_oriented(tt));
    EXPECT_FALSE(is_transitive_oriented(c3));
    EXPECT_TRUE(is_transitive_oriented(Digraph(4)));
    EXPECT_TRUE(is_symmetric(ks));
    EXPECT_FALSE(is_oriented(ks));
    EXPECT_TRUE(is_oriented(c3));
}

TEST(Classes, Witnesses) {
    EXPECT_EQ(*semicomplete_witness(directed_path(3)), (VertexTuple{0, 2}));
    EXPECT_EQ(*locally_semicomplete_witness(in_star()), (VertexTuple{0, 1, 2}));
    EXPECT_EQ(*quasi_transitive_witness(directed_path(3)), (VertexTuple{0, 1, 2}));
    EXPECT_EQ(*oriented_witness(example1()), (VertexTuple{c, d}));
    EXPECT_EQ(*symmetric_witness(example1()), (VertexTuple{a, b}));
    EXPECT_EQ(*transitive_oriented_witness(directed_path(3)), (VertexTuple{0, 1, 2}));
    EXPECT_FALSE(semicomplete_witness(Digraph(1)));
}

TEST(Classes, PredicatesMatchDefinitions) {
    for (const auto& g : all_digraphs_up_to(4)) {
        ArcSet s(g);
        ASSERT_EQ(is_semicomplete(g), naive_semicomplete(s));
        ASSERT_EQ(is_locally_semicomplete(g), naive_locally_semicomplete(s));
        ASSERT_EQ(is_weakly_quasi_transitive(g), naive_wqt(g));
        ASSERT_EQ(is_quasi_transitive(g), naive_quasi_transitive(s));
        ASSERT_EQ(is_extended_semicomplete(g), naive_extended_semicomplete(s)) << serialize(g);
        ASSERT_EQ(is_transitive_oriented(g), naive_transitive_oriented(s));
    }
}

TEST(Classes, ImplicationLattice) {
    for (const auto& g : all_digraphs_up_to(4)) {
        auto r = classify(g);
        bool sc = r["semicomplete"].value, wqt = r["weakly-quasi-transitive"].value;
        if (sc) {
            ASSERT_TRUE(r["locally-semicomplete"].value);
            ASSERT_TRUE(r["quasi-transitive"].value);
            ASSERT_TRUE(r["extended-semicomplete"].value);
            ASSERT_TRUE(wqt);
        }
        if (r["extended-semicomplete"].value || r["quasi-transitive"].value || r["symmetric"].value) {
            ASSERT_TRUE(wqt);
        }
        if (r["transitive-oriented"].value) {
            ASSERT_TRUE(r["oriented"].value);
            ASSERT_TRUE(r["quasi-transitive"].value);
        }
        if (r["symmetric"].value && r["oriented"].value) {
            ASSERT_EQ(g.arc_count(), 0u);
        }
    }
}

TEST(Classes, ReportFlagsAndWitnessesAgree) {
    auto r = classify(example1());
    EXPECT_EQ(r.flags.size(), 8u);
    for (const auto& f : r.flags) EXPECT_EQ(f.value, !f.witness.has_value()) << f.name;
    EXPECT_THROW(r["nonsense"], std::out_of_range);
}

TEST(Classes, ExtendedSemicompleteBySubstitution) {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        int m = rng.between(1, 5);
        auto sc = random_semicomplete(rng, m);
        std::vector<Digraph> parts;
        for (int j = 0; j < m; ++j) parts.emplace_back(rng.between(1, 3));
        auto g = substitute(sc, parts);
        ASSERT_TRUE(is_extended_semicomplete(g)) << serialize(g);
        ASSERT_TRUE(is_weakly_quasi_transitive(g));
    }
}

TEST(Classes, BaseGenerators) {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        int n = rng.between(1, 8);
        ASSERT_TRUE(is_transitive_oriented(random_transitive_oriented(rng, n)));
        ASSERT_TRUE(is_semicomplete(random_semicomplete(rng, n)));
        ASSERT_TRUE(is_symmetric(random_symmetric(rng, n)));
    }
}

TEST(Classes, GenerateWqtIsSound) {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        int depth = 1 + static_cast<int>(seed % 3);
        int width = 1 + static_cast<int>((seed / 3) % 3);
        auto g = generate_wqt(seed, depth, width);
        ASSERT_TRUE(is_weakly_quasi_transitive(g)) << seed;
        ASSERT_TRUE(naive_wqt(g)) << seed;
        ASSERT_EQ(parse(serialize(g)), g);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = generate_wqt(seed, 1, 3);
        ASSERT_TRUE(is_transitive_oriented(g) || is_semicomplete(g) || is_symmetric(g));
    }
}

TEST(Classes, GenerateWqtDeterminismAndErrors) {
    EXPECT_EQ(generate_wqt(77, 2, 2), generate_wqt(77, 2, 2));
    EXPECT_THROW(generate_wqt(1, 0, 2), DigraphError);
    EXPECT_THROW(generate_wqt(1, 2, 0), DigraphError);
    EXPECT_THROW(generate_wqt(1, 4, 3), DigraphError);
}

TEST(Classes, SubstitutionClosureReachesEveryWqtUpToFour) {
    auto closure = substitution_closure(4, 3);
    for (const auto& g : all_digraphs_up_to(4)) {
        if (g.order() == 0) continue;
        bool wqt = is_weakly_quasi_transitive(g);
        bool reached = closure.count({g.order(), canonical_index(g)}) > 0;
        // Soundness and completeness together.
        ASSERT_EQ(reached, wqt) << serialize(g);
    }
}

TEST(Classes, GenerateLocallySemicomplete) {
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        int n = 1 + static_cast<int>(seed % 10);
        auto g = generate_locally_semicomplete(seed, n);
        ASSERT_EQ(g.order(), n);
        ASSERT_TRUE(is_locally_semicomplete(g)) << seed;
        ASSERT_TRUE(naive_locally_semicomplete(ArcSet(g)));
        ASSERT_EQ(parse(serialize(g)), g);
    }
    EXPECT_EQ(generate_locally_semicomplete(5, 1), Digraph(1));
    EXPECT_EQ(generate_locally_semicomplete(9, 7), generate_locally_semicomplete(9, 7));
    EXPECT_THROW(generate_locally_semicomplete(1, 0), DigraphError);
}

TEST(Classes, LocallySemicompleteGeneratorIsNotTrivial) {
    // An instance supplier that only produced complete digraphs would be useless.
    int non_complete = 0, with_oriented_arc = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto g = generate_locally_semicomplete(seed, 7);
        non_complete += !is_semicomplete(g);
        with_oriented_arc += !is_symmetric(g);
    }
    EXPECT_GT(non_complete, 50);
    EXPECT_GT(with_oriented_arc, 50);
}
