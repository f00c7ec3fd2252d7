#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace sschordal;
using namespace fixtures;

namespace {

void expect_bookkeeping(const VerificationReport& r) {
    EXPECT_LE(r.filtered, r.total);
    EXPECT_EQ(r.passed + r.counterexamples.size(), r.filtered) << r.to_text();
}

// Fails every 7th id, skips every 3rd.
Outcome synthetic(std::uint64_t id) {
    if (id % 3 == 0) return Outcome::skipped();
    if (id % 7 == 0) return Outcome::failed(Digraph(static_cast<int>(id % 5)), {{"probe", false}});
    return Outcome::passed();
}

}  // namespace

TEST(Harness, RecognizerEquivalenceSmall) {
    auto r1 = check_recognizer_equivalence(1);
    EXPECT_EQ(r1.total, 1u);
    EXPECT_TRUE(r1.ok());
    auto r3 = check_recognizer_equivalence(3);
    EXPECT_EQ(r3.total, 64u);
    EXPECT_EQ(r3.filtered, 64u);
    EXPECT_TRUE(r3.counterexamples.empty());
    expect_bookkeeping(r3);
    EXPECT_THROW(check_recognizer_equivalence(5), DigraphError);
    auto sampled = check_recognizer_equivalence(6, 300, 4);
    EXPECT_EQ(sampled.total, 300u);
    EXPECT_TRUE(sampled.ok());
}

TEST(Harness, SplittingDegreeCheck) {
    auto r = check_lemma1(3, 2000, 6, 9);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.total, 1u + 4u + 64u + 2000u);
    expect_bookkeeping(r);
}

TEST(Harness, WqtCharacterizationSmallOrders) {
    auto r = check_theorem4(4);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.total, 1u + 4u + 64u + 4096u);
    std::uint64_t wqt = 0;
    for (const auto& g : all_digraphs_up_to(4))
        if (g.order() > 0 && naive_wqt(g)) ++wqt;
    EXPECT_EQ(r.filtered, wqt);
    expect_bookkeeping(r);
}

TEST(Harness, LocallySemicompleteCharacterizationSmall) {
    auto r = check_theorem5(4, 6, 8, 3000, 1);
    EXPECT_TRUE(r.ok()) << r.to_text();
    expect_bookkeeping(r);
}

TEST(Harness, LocallySemicompleteSamplesCoverBothAnswers) {
    // A supplier whose instances were all chordal, or all not, would test nothing.
    int yes = 0, no = 0;
    for (std::uint64_t id = 0; id < 400; ++id) {
        Rng rng(mix_seed(1) ^ mix_seed(id));
        int n = rng.between(6, 8);
        auto g = generate_locally_semicomplete(rng.next(), n);
        (is_chordal(g, Variant::SemiStrict) ? yes : no)++;
    }
    EXPECT_GT(yes, 10);
    EXPECT_GT(no, 10);
}

TEST(Harness, NestingAndFamilies) {
    auto n = check_nesting(4);
    EXPECT_TRUE(n.ok()) << n.to_text();
    auto f = check_families(4);
    EXPECT_TRUE(f.ok()) << f.to_text();
    EXPECT_EQ(f.total, 36u + 2u + 2u + 1u + 4u);
    EXPECT_EQ(f.passed, f.total);
}

TEST(Harness, KnottingInvariants) {
    auto r = check_knotting_invariants(2000, 8, 3);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.passed, 2000u);
}

TEST(Harness, DeletionProbeRecordsWithoutAsserting) {
    auto r = probe_knotting_deletion(6, 2000, 1);
    EXPECT_FALSE(r.asserted);
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.aborted);
    EXPECT_GT(r.counterexamples.size(), 0u);
    expect_bookkeeping(r);
    EXPECT_NE(r.to_text().find("status: RECORDED"), std::string::npos);
    for (const auto& c : r.counterexamples) ASSERT_TRUE(c.vertex.has_value());
}

TEST(Harness, LimitAbortsDeterministically) {
    RunOptions one{1, 5};
    auto base = run_check("synthetic", 1000, synthetic, one);
    EXPECT_TRUE(base.aborted);
    EXPECT_EQ(base.counterexamples.size(), 5u);
    // Fifth failing id: 7, 14, 28, 35, 49 (multiples of 21 are skipped).
    EXPECT_EQ(base.counterexamples.back().id, 49u);
    EXPECT_EQ(base.total, 50u);
    expect_bookkeeping(base);
    for (int shards : {2, 3, 8, 64}) {
        auto r = run_check("synthetic", 1000, synthetic, {shards, 5});
        EXPECT_EQ(r.to_text(), base.to_text()) << shards;
    }
    auto unlimited = run_check("synthetic", 1000, synthetic, {4, 0});
    EXPECT_FALSE(unlimited.aborted);
    expect_bookkeeping(unlimited);
    std::uint64_t expect_fail = 0;
    for (std::uint64_t id = 0; id < 1000; ++id) expect_fail += synthetic(id).kind == Outcome::Kind::Failed;
    EXPECT_EQ(unlimited.counterexamples.size(), expect_fail);
    EXPECT_FALSE(unlimited.ok());
    EXPECT_NE(unlimited.to_text(100).find("status: FAIL"), std::string::npos);
}

TEST(Harness, ShardCountDoesNotChangeReports) {
    auto t1 = check_theorem4(4, {1, 10}).to_text();
    EXPECT_EQ(check_theorem4(4, {3, 10}).to_text(), t1);
    EXPECT_EQ(check_theorem4(4, {8, 10}).to_text(), t1);
    auto l1 = check_lemma1(3, 500, 7, 2, {1, 10}).to_text();
    EXPECT_EQ(check_lemma1(3, 500, 7, 2, {5, 10}).to_text(), l1);
    auto p1 = probe_knotting_deletion(6, 500, 3, {1, 0}).to_text(1000);
    EXPECT_EQ(probe_knotting_deletion(6, 500, 3, {7, 0}).to_text(1000), p1);
}

TEST(Harness, RepeatedRunsAreIdentical) {
    EXPECT_EQ(check_theorem5(3, 6, 7, 500, 42).to_text(), check_theorem5(3, 6, 7, 500, 42).to_text());
    EXPECT_NE(check_theorem5(3, 6, 7, 500, 42).to_text(), check_theorem5(3, 6, 7, 500, 43).to_text());
}

TEST(Harness, CounterexampleDigraphsRoundTrip) {
    auto r = probe_knotting_deletion(7, 500, 5);
    ASSERT_FALSE(r.counterexamples.empty());
    for (const auto& c : r.counterexamples) {
        auto g = parse(c.digraph);
        EXPECT_EQ(serialize(g), c.digraph);
        // The recorded instance reproduces the disagreement.
        auto derived = delete_group(knotting_graph(g), *c.vertex);
        auto recomputed = GroupedGraph::of(knotting_graph(induced(g, g.vertices().without(*c.vertex)).digraph));
        EXPECT_FALSE(group_respecting_isomorphic(derived, recomputed));
    }
}

TEST(Harness, ReportText) {
    VerificationReport r;
    r.check = "x";
    r.parameters = {{"n", "3"}};
    r.total = 4;
    r.filtered = 2;
    r.passed = 1;
    r.counterexamples.push_back({3, "2 1\n0 1\n", {{"lhs", true}, {"rhs", false}}, {}});
    r.wall_seconds = 12.5;
    EXPECT_EQ(r.to_text(),
              "check: x\n  n = 3\ntotal: 4\nfiltered: 2\npassed: 1\ncounterexamples: 1\n"
              "- instance 3: lhs=true rhs=false\n    2 1\n    0 1\nstatus: FAIL\n");
}
