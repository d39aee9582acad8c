#include "brute.hpp"

#include <smalllarge/generators.hpp>
#include <smalllarge/oracles.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace smalllarge;

namespace
{
    Graph sequence_122333_graph() { return build_graph(6, {{3, 4}, {3, 5}, {4, 5}, {1, 3}, {2, 4}, {0, 5}, {1, 2}}); }
}

TEST(ExactInvariant, Examples)
{
    EXPECT_EQ(exact_invariant(star_graph(9), Invariant::AlphaK, 2), 9);
    EXPECT_EQ(exact_invariant(cycle_graph(5), Invariant::Chi), 3);
    EXPECT_EQ(exact_invariant(petersen_graph(), Invariant::Alpha), 4);
    EXPECT_EQ(exact_invariant(petersen_graph(), Invariant::Omega), 2);
    EXPECT_EQ(exact_invariant(petersen_graph(), Invariant::Chi), 3);
    EXPECT_EQ(exact_invariant(complete_graph(6), Invariant::Theta), 1);
    EXPECT_EQ(exact_invariant(empty_graph(0), Invariant::Alpha), 0);
}

TEST(ExactInvariant, AgreesWithBruteForce)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : brute::all_graphs(n)) {
            ASSERT_EQ(exact_invariant(g, Invariant::Alpha), brute::max_set(g, brute::Kind::Independent, 0));
            ASSERT_EQ(exact_invariant(g, Invariant::Omega), brute::max_set(g, brute::Kind::NearClique, 0));
            ASSERT_EQ(exact_invariant(g, Invariant::Chi), brute::chromatic(g));
            ASSERT_EQ(exact_invariant(g, Invariant::Theta), brute::chromatic(complement(g)));
            for (int k = 0; k <= 2; ++k) {
                ASSERT_EQ(exact_invariant(g, Invariant::AlphaK, k), brute::max_set(g, brute::Kind::Independent, k));
                ASSERT_EQ(exact_invariant(g, Invariant::OmegaK, k), brute::max_set(g, brute::Kind::NearClique, k));
            }
        }
}

TEST(ExactInvariant, RandomMediumGraphs)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gnp(9, 0.5, seed);
        EXPECT_EQ(exact_invariant(g, Invariant::Alpha), brute::max_set(g, brute::Kind::Independent, 0));
        EXPECT_EQ(exact_invariant(g, Invariant::Chi), brute::chromatic(g));
    }
}

TEST(ExactMaxSet, Examples)
{
    auto c5 = exact_max_set(cycle_graph(5), SetClass::small(0));
    EXPECT_EQ(c5.size, 3);
    EXPECT_EQ(c5.witness, (VertexSet{0, 1, 2}));
    EXPECT_EQ(exact_max_set(star_graph(9), SetClass::beta_large()).size, 4);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gnp(8, 0.4, seed);
        int k = g.size() - g.min_degree() - 1;
        EXPECT_EQ(exact_max_set(g, SetClass::large(k)).size, g.size());
    }
}

TEST(ExactMaxSet, WitnessPassesClass)
{
    for (const auto & g : brute::all_graphs(5))
        for (auto kind : {SetKind::KSmall, SetKind::KLarge, SetKind::AlphaSmall, SetKind::BetaLarge}) {
            auto r = exact_max_set(g, SetClass{kind, 1});
            ASSERT_TRUE(classify_set(g, r.witness, SetClass{kind, 1}));
            ASSERT_EQ(static_cast<int>(r.witness.size()), r.size);
        }
}

TEST(ExactMinPartition, Examples)
{
    EXPECT_EQ(exact_min_partition(cycle_graph(5), SetClass::small(0)).count, 2);
    EXPECT_EQ(exact_min_partition(sequence_122333_graph(), SetClass::large(0)).count, 3);
    EXPECT_EQ(exact_min_partition(two_cliques_cone(4), SetClass::beta_small()).count, 2);
    EXPECT_EQ(exact_min_partition(complete_graph(4), SetClass::small(0)).count, 4);
}

TEST(ExactMinPartition, AgreesWithSetPartitionEnumeration)
{
    const std::vector<std::pair<SetKind, brute::Kind>> kinds{{SetKind::KSmall, brute::Kind::Small},
        {SetKind::KLarge, brute::Kind::Large}, {SetKind::AlphaSmall, brute::Kind::AlphaSmall},
        {SetKind::BetaSmall, brute::Kind::BetaSmall}, {SetKind::AlphaLarge, brute::Kind::AlphaLarge},
        {SetKind::BetaLarge, brute::Kind::BetaLarge}};
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : brute::all_graphs(n))
            for (auto [kind, bk] : kinds) {
                auto p = exact_min_partition(g, SetClass{kind, 1});
                ASSERT_EQ(p.count, brute::min_partition(g, bk, 1));
                ASSERT_TRUE(validate_partition(g, p.partition));
            }
}

TEST(Limits, ExceededRaisesOracleLimitError)
{
    OracleLimits tight;
    tight.max_n_subset = 5;
    tight.max_n_partition = 5;
    tight.max_n_chromatic = 5;
    auto g = cycle_graph(6);
    EXPECT_THROW(exact_invariant(g, Invariant::Alpha, 0, tight), OracleLimitError);
    EXPECT_THROW(exact_invariant(g, Invariant::Chi, 0, tight), OracleLimitError);
    EXPECT_THROW(exact_min_partition(g, SetClass::small(0), tight), OracleLimitError);
    try {
        exact_max_set(g, SetClass::small(0), tight);
        FAIL();
    }
    catch (const OracleLimitError & e) {
        EXPECT_EQ(e.n(), 6);
        EXPECT_EQ(e.limit(), 5);
    }
}

TEST(Limits, Validation)
{
    OracleLimits bad;
    bad.max_n_subset = 0;
    EXPECT_THROW(bad.validate(), InvalidInput);
    OracleLimits huge;
    huge.max_n_enumerate = 12;
    EXPECT_THROW(huge.validate(), InvalidInput);
}

TEST(LabeledGraphs, Counts)
{
    EXPECT_EQ(LabeledGraphs(3).count(), 8u);
    EXPECT_EQ(LabeledGraphs(4).count(), 64u);
    EXPECT_EQ(LabeledGraphs(6).count(), 32768u);
    EXPECT_THROW(LabeledGraphs(8), OracleLimitError);
}

TEST(LabeledGraphs, EveryGraphOnceInBitOrder)
{
    LabeledGraphs all(4);
    EXPECT_TRUE(all.at(1).adjacent(0, 1));
    EXPECT_TRUE(all.at(2).adjacent(0, 2));
    EXPECT_TRUE(all.at(8).adjacent(1, 2));
    std::set<std::vector<bool>> seen;
    all.for_each([&](std::uint64_t, const Graph & g) {
        std::vector<bool> key;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                key.push_back(g.adjacent(u, v));
        seen.insert(key);
    });
    EXPECT_EQ(seen.size(), 64u);
}
