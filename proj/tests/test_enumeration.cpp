#include "support.hpp"

#include <set>

using namespace weightsys;
using namespace wtest;

TEST(Matchings, Counts) {
    EXPECT_EQ(enumerate_matchings(0).size(), 1u);
    EXPECT_EQ(enumerate_matchings(2).size(), 1u);
    EXPECT_EQ(enumerate_matchings(4).size(), 3u);
    EXPECT_EQ(enumerate_matchings(6).size(), 15u);
    EXPECT_EQ(enumerate_matchings(10).size(), 945u);
    EXPECT_ERROR_KIND(enumerate_matchings(5), ErrorKind::BadIndex);
    EXPECT_ERROR_KIND(enumerate_matchings(16), ErrorKind::TooLarge);
}

TEST(Matchings, LexicographicAndDistinct) {
    const auto ms = enumerate_matchings(8);
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
    EXPECT_EQ(std::set<Matching>(ms.begin(), ms.end()).size(), ms.size());
    const Matching first = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    EXPECT_EQ(ms.front(), first);
    for (const auto& m : ms) {
        std::vector<int> seen(9, 0);
        for (auto [a, b] : m) {
            EXPECT_LT(a, b);
            ++seen[a];
            ++seen[b];
        }
        for (int i = 1; i <= 8; ++i) EXPECT_EQ(seen[i], 1);
    }
}

TEST(Enumerate, SmallCases) {
    const auto c0 = enumerate_fixed_diagrams(0, 2);
    std::set<std::string> codes(c0.codes().begin(), c0.codes().end());
    EXPECT_TRUE(codes.count(canonical_form(theta())));
    EXPECT_TRUE(codes.count(canonical_form(flip_vertex(theta(), 0))));
    DiagramBuilder b(2, 0);
    b.join(0, 1).join(2, 5).join(3, 4);
    EXPECT_TRUE(codes.count(canonical_form(b.build())));
    EXPECT_TRUE(codes.count(canonical_form(empty_diagram())));
    EXPECT_EQ(c0.size(), 4u);

    const auto c2 = enumerate_fixed_diagrams(2, 0);
    ASSERT_EQ(c2.size(), 1u);
    EXPECT_TRUE(are_isomorphic(c2[0], identity_permutation_diagram(1)));
    EXPECT_TRUE(enumerate_fixed_diagrams(1, 0).empty());
}

TEST(Enumerate, CountsMatchExhaustiveDedupe) {
    // Dedupe all matchings with the exhaustive isomorphism test instead of codes.
    for (auto [k, v] : std::vector<std::pair<int, int>>{{0, 2}, {2, 2}, {1, 3}, {4, 2}, {3, 1}}) {
        std::vector<FixedDiagram> reps;
        for (int w = 0; w <= v; ++w) {
            if ((3 * w + k) % 2) continue;
            for_each_matching(3 * w + k, [&](const std::vector<int>& p) {
                FixedDiagram d(w, k, p, 0);
                for (const auto& r : reps)
                    if (brute_isomorphic(r, d)) return;
                reps.push_back(d);
            });
        }
        EXPECT_EQ(enumerate_fixed_diagrams(k, v).size(), reps.size()) << k << " " << v;
    }
}

TEST(Enumerate, DeterministicSortedDuplicateFree) {
    const auto a = enumerate_fixed_diagrams(2, 4);
    const auto b = enumerate_fixed_diagrams(2, 4);
    EXPECT_EQ(a.codes(), b.codes());
    EXPECT_TRUE(std::is_sorted(a.codes().begin(), a.codes().end()));
    EXPECT_EQ(std::set<std::string>(a.codes().begin(), a.codes().end()).size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(canonical_form(a[i]), a.codes()[i]);
        EXPECT_EQ(a[i].num_legs(), 2);
        EXPECT_EQ(a[i].loop_count(), 0);
    }
}

TEST(Enumerate, LeggedComponentsOption) {
    const auto all = enumerate_fixed_diagrams(2, 4);
    const auto legged = enumerate_fixed_diagrams(2, 4, {true});
    EXPECT_LT(legged.size(), all.size());
    for (const auto& d : legged.items())
        for (const auto& comp : components(d)) EXPECT_FALSE(comp.leg_labels.empty());
}

TEST(Enumerate, Guards) {
    EXPECT_ERROR_KIND(enumerate_fixed_diagrams(0, 8), ErrorKind::TooLarge);
    EXPECT_ERROR_KIND(enumerate_fixed_diagrams(-1, 2), ErrorKind::BadIndex);
}

TEST(Corpus, DedupesAndRejectsMixedLegs) {
    const DiagramCorpus c(0, {theta(), glue(tripod({1, 2, 3}), tripod({1, 3, 2})), k4()});
    EXPECT_EQ(c.size(), 2u);
    EXPECT_ERROR_KIND(DiagramCorpus(0, {theta(), tripod()}), ErrorKind::LegCountMismatch);
}

TEST(MatchingGlue, Examples) {
    // {14,25,36} joins u slot i to v slot i: both vertices share one cyclic order.
    const auto same = matching_glue({{1, 4}, {2, 5}, {3, 6}}, 2);
    EXPECT_TRUE(are_isomorphic(same, flip_vertex(theta(), 1)));
    EXPECT_FALSE(are_isomorphic(same, theta()));
    EXPECT_TRUE(are_isomorphic(matching_glue({{1, 4}, {2, 6}, {3, 5}}, 2), theta()));

    const auto loops = matching_glue({{1, 2}, {3, 4}, {5, 6}}, 2);
    EXPECT_EQ(loops.num_vertices(), 2);
    bool has_loop_edge = false;
    for (auto [a, b] : loops.edges()) has_loop_edge = has_loop_edge || loops.vertex_of(a) == loops.vertex_of(b);
    EXPECT_TRUE(has_loop_edge);
}

TEST(MatchingGlue, SurjectiveOntoVertexCount) {
    for (int k : {2, 4}) {
        std::set<std::string> glued;
        for (const auto& m : enumerate_matchings(3 * k)) glued.insert(canonical_form(matching_glue(m, k)));
        std::size_t checked = 0;
        for (const auto& d : enumerate_fixed_diagrams(0, k).items()) {
            if (d.num_vertices() != k) continue;
            ++checked;
            EXPECT_TRUE(glued.count(canonical_form(d))) << canonical_form(d);
        }
        EXPECT_GT(checked, 0u);
    }
}

TEST(RandomDiagrams, SeededAndValid) {
    const auto a = random_diagrams(9, 50, 3, 5);
    const auto b = random_diagrams(9, 50, 3, 5);
    const auto c = random_diagrams(10, 50, 3, 5);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (const auto& d : a) {
        EXPECT_EQ(d.num_legs(), 3);
        EXPECT_LE(d.num_vertices(), 5);
        EXPECT_EQ(d.num_vertices() % 2, 1);
    }
    EXPECT_ERROR_KIND(random_diagrams(1, 1, 1, 0), ErrorKind::BadIndex);
}
