#include "brute.hpp"

#include <smalllarge/generators.hpp>
#include <smalllarge/graph.hpp>
#include <smalllarge/sets.hpp>

#include <gtest/gtest.h>

using namespace smalllarge;

namespace
{
    Graph sequence_122333_graph() { return build_graph(6, {{3, 4}, {3, 5}, {4, 5}, {1, 3}, {2, 4}, {0, 5}, {1, 2}}); }
}

TEST(Graph, CycleHasAllDegreesTwo)
{
    auto g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(g.size(), 5);
    EXPECT_EQ(g.edge_count(), 5);
    for (int v = 0; v < 5; ++v)
        EXPECT_EQ(g.degree(v), 2);
    EXPECT_EQ(g.regular_degree(), 2);
}

TEST(Graph, EmptyGraph)
{
    auto g = build_graph(4, {});
    EXPECT_EQ(g.edge_count(), 0);
    EXPECT_EQ(g.max_degree(), 0);
}

TEST(Graph, StarDegrees)
{
    auto g = star_graph(9);
    EXPECT_EQ(g.degree(0), 9);
    for (int v = 1; v <= 9; ++v)
        EXPECT_EQ(g.degree(v), 1);
    EXPECT_FALSE(g.regular_degree());
}

TEST(Graph, RejectsLoopsAndRange)
{
    EXPECT_THROW(build_graph(3, {{1, 1}}), InvalidInput);
    EXPECT_THROW(build_graph(3, {{0, 3}}), InvalidInput);
    EXPECT_THROW(build_graph(3, {{-1, 2}}), InvalidInput);
}

TEST(Graph, DuplicateEdgesCollapse)
{
    auto g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_EQ(g.degree(0), 1);
}

TEST(Graph, ComplementExamples)
{
    EXPECT_EQ(complement(complete_graph(4)).edge_count(), 0);
    auto c5 = cycle_graph(5);
    auto co = complement(c5);
    EXPECT_EQ(co.regular_degree(), 2);
    // C_5 is self-complementary: i -> 2i mod 5 maps edges of C_5 onto edges of its complement
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) {
                EXPECT_EQ(c5.adjacent(u, v), co.adjacent(2 * u % 5, 2 * v % 5));
            }
    auto star_co = complement(star_graph(9));
    EXPECT_EQ(star_co.degree(0), 0);
    for (int v = 1; v <= 9; ++v)
        EXPECT_EQ(star_co.degree(v), 8);
}

TEST(Graph, ComplementIsInvolutionAcrossWordBoundary)
{
    auto g = gnp(70, 0.3, 5);
    auto back = complement(complement(g));
    for (int u = 0; u < 70; ++u) {
        EXPECT_EQ(complement(g).degree(u), 69 - g.degree(u));
        for (int v = 0; v < 70; ++v)
            EXPECT_EQ(back.adjacent(u, v), g.adjacent(u, v));
    }
}

TEST(DegreeSequence, Examples)
{
    EXPECT_EQ(degree_sequence(cycle_graph(5)).values, (std::vector<int>{2, 2, 2, 2, 2}));
    EXPECT_EQ(degree_sequence(star_graph(9)).values, (std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 9}));
    EXPECT_EQ(degree_sequence(sequence_122333_graph()).values, (std::vector<int>{1, 2, 2, 3, 3, 3}));
}

TEST(DegreeSequence, OrderBreaksTiesByVertexId)
{
    auto s = degree_sequence(star_graph(3));
    EXPECT_EQ(*s.order, (std::vector<int>{1, 2, 3, 0}));
}

TEST(DegreeSequence, ValidatingConstructor)
{
    EXPECT_NO_THROW(make_sequence({0, 1, 1}, 3));
    EXPECT_THROW(make_sequence({1, 0}, 3), InvalidInput);
    EXPECT_THROW(make_sequence({3}, 3), InvalidInput);
}

TEST(Masks, RoundTrip)
{
    std::vector<int> a{0, 3, 5, 63};
    EXPECT_EQ(vertices_of(mask_of(a)), a);
}

TEST(Classify, Examples)
{
    auto c5 = cycle_graph(5);
    std::vector<int> three{0, 2, 4};
    EXPECT_TRUE(classify_set(c5, three, SetClass::small(0)));

    auto star = star_graph(9);
    std::vector<int> leaves{1, 2, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_TRUE(classify_set(star, leaves, SetClass::alpha_small()));
    auto all = leaves;
    all.push_back(0);
    EXPECT_FALSE(classify_set(star, all, SetClass::alpha_small()));

    for (int v = 0; v < 10; ++v) {
        std::vector<int> single{v};
        EXPECT_TRUE(classify_set(star, single, SetClass::large(0)));
    }
}

TEST(Classify, RejectsBadSets)
{
    auto g = cycle_graph(5);
    std::vector<int> repeated{1, 1};
    std::vector<int> outside{7};
    EXPECT_THROW(classify_set(g, repeated, SetClass::small(0)), InvalidInput);
    EXPECT_THROW(classify_set(g, outside, SetClass::small(0)), InvalidInput);
}

TEST(Classify, AgreesWithLiteralDefinitionsOnAllFiveVertexGraphs)
{
    using brute::Kind;
    const std::vector<std::pair<Kind, SetKind>> kinds{{Kind::Small, SetKind::KSmall}, {Kind::Large, SetKind::KLarge},
        {Kind::Independent, SetKind::KIndependent}, {Kind::NearClique, SetKind::KNearClique},
        {Kind::AlphaSmall, SetKind::AlphaSmall}, {Kind::BetaSmall, SetKind::BetaSmall},
        {Kind::AlphaLarge, SetKind::AlphaLarge}, {Kind::BetaLarge, SetKind::BetaLarge}};
    for (const auto & g : brute::all_graphs(5)) {
        auto m = brute::matrix(g);
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            auto a = brute::subset(mask, 5);
            for (auto [bk, sk] : kinds)
                for (int k = 0; k <= 2; ++k)
                    ASSERT_EQ(classify_set(g, a, SetClass{sk, k}), brute::member(m, a, bk, k));
        }
    }
}

TEST(Classify, ComplementDualityOfClasses)
{
    for (const auto & g : brute::all_graphs(5)) {
        auto co = complement(g);
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            auto a = vertices_of(mask);
            for (int k = 0; k <= 3; ++k) {
                ASSERT_EQ(classify_set(g, a, SetClass::small(k)), classify_set(co, a, SetClass::large(k)));
                if (classify_set(g, a, SetClass::independent(k))) {
                    ASSERT_TRUE(classify_set(g, a, SetClass::small(k)));
                }
                if (classify_set(g, a, SetClass::near_clique(k))) {
                    ASSERT_TRUE(classify_set(g, a, SetClass::large(k)));
                }
            }
        }
    }
}

TEST(Partition, ValidateExamples)
{
    auto c5 = cycle_graph(5);
    VertexPartition good{{{{0, 1, 2}, SetClass::small(0)}, {{3, 4}, SetClass::small(0)}}, "test"};
    EXPECT_TRUE(validate_partition(c5, good));

    VertexPartition k4{{{{0, 1, 2, 3}, SetClass::small(0)}}, "test"};
    EXPECT_FALSE(validate_partition(complete_graph(4), k4));

    VertexPartition missing{{{{0, 1, 2}, SetClass::small(0)}}, "test"};
    auto verdict = validate_partition(c5, missing);
    EXPECT_FALSE(verdict);
    EXPECT_EQ(verdict.reason, "not a cover");

    VertexPartition overlap{{{{0, 1, 2}, SetClass::small(0)}, {{2, 3, 4}, SetClass::small(0)}}, "test"};
    EXPECT_EQ(validate_partition(c5, overlap).reason, "blocks overlap");
}

TEST(SetClass, Names)
{
    EXPECT_EQ(SetClass::small(0).name(), "KSmall(0)");
    EXPECT_EQ(SetClass::near_clique(2).name(), "KNearClique(2)");
    EXPECT_EQ(SetClass::beta_large().name(), "BetaLarge");
}
