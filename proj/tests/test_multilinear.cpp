#include "oracles.hpp"
#include "tideal/multilinear.hpp"

#include <gtest/gtest.h>

using namespace tideal;

namespace {

std::set<std::string> names(const std::vector<OrderedPartition>& os) {
    std::set<std::string> s;
    for (const auto& o : os) s.insert(o.str());
    return s;
}

oracle::Elem to_oracle(const AlgebraElement<Rational>& f) {
    oracle::Elem e;
    for (const auto& [p, c] : f.sorted_terms()) e[p.images()] = c;
    return e;
}

}  // namespace

TEST(OrderedPartitions, TwoThreeListed) {
    auto all = enumerate_ordered_partitions(2, 3);
    EXPECT_EQ(names(all), (std::set<std::string>{"{[1 2],[3]}", "{[1 3],[2]}", "{[1],[2 3]}", "{[2 1],[3]}",
                                                  "{[3 1],[2]}", "{[1],[3 2]}"}));
    EXPECT_EQ(count_ordered_partitions(2, 3), 6);
}

TEST(OrderedPartitions, CountsMatchBruteForce) {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n) {
            auto got = enumerate_ordered_partitions(n, m);
            EXPECT_EQ(names(got).size(), got.size());
            auto want = oracle::ordered_partitions(n, m);
            EXPECT_EQ(got.size(), want.size()) << n << "," << m;
            EXPECT_EQ(count_ordered_partitions(n, m), Integer(static_cast<unsigned long>(want.size())));
        }
    EXPECT_EQ(count_ordered_partitions(3, 6), 1200);
    EXPECT_EQ(enumerate_ordered_partitions(4, 4).size(), 1u);
}

TEST(OrderedPartitions, ShapeFilter) {
    auto two_two = enumerate_ordered_partitions(2, 4, Partition{2, 2});
    EXPECT_EQ(two_two.size(), 12u);
    for (const auto& o : two_two) EXPECT_EQ(o.type(), (Partition{2, 2}));
}

TEST(OrderedPartitions, ParseAndValidate) {
    auto o = OrderedPartition::parse("{[3],[1 2]}");
    EXPECT_EQ(o.str(), "{[1 2],[3]}");
    EXPECT_EQ(o.n(), 2);
    EXPECT_EQ(o.m(), 3);
    EXPECT_THROW(OrderedPartition::parse("{[1 1],[2]}"), parse_error);
    EXPECT_THROW(OrderedPartition::parse("{[1],[3]}"), parse_error);
}

TEST(SymmetricPoly, Examples) {
    EXPECT_EQ(symmetric_poly({{1}, {2}}).str(), "x1x2 + x2x1");
    EXPECT_EQ(symmetric_poly({{1, 2, 3}}).str(), "x1x2x3");
    EXPECT_EQ(symmetric_poly({{1, 2}, {3}}).str(), "x1x2x3 + x3x1x2");
    EXPECT_EQ(build_PO(OrderedPartition::parse("{[1 2],[3]}")).str(), "x1x2x3 + x3x1x2");
    EXPECT_EQ(build_PO(OrderedPartition::parse("{[1],[2],[3]}")).size(), 6u);
}

TEST(SymmetricPoly, MatchesOracle) {
    for (const auto& o : enumerate_ordered_partitions(3, 5))
        EXPECT_EQ(to_oracle(build_PO(o)), oracle::symmetrized(o.parts())) << o.str();
}

TEST(SymmetricPoly, LeftActionRelabelsBlocks) {
    std::mt19937_64 rng(2);
    for (const auto& o : enumerate_ordered_partitions(2, 4)) {
        auto s = Permutation::random(4, rng);
        EXPECT_EQ(act_left(s, build_PO(o)), build_PO(act_on_ordered_partition(s, o)));
    }
}

TEST(ExtendOrderedPartition, AppendsSingletons) {
    auto o = OrderedPartition::parse("{[1 2],[3]}");
    EXPECT_EQ(extend_ordered_partition(o, 2).str(), "{[1 2],[3],[4],[5]}");
    EXPECT_EQ(extend_ordered_partition(o, 0), o);
    EXPECT_EQ(extend_ordered_partition(OrderedPartition::parse("{[1]}"), 1).str(), "{[1],[2]}");
}

TEST(SpanningDimension, KnownValues) {
    EXPECT_EQ(spanning_dimension(2, 2).rank, 1u);
    EXPECT_EQ(spanning_dimension(2, 3).rank, 6u);
    auto r = spanning_dimension(3, 4);
    EXPECT_EQ(r.rank, 12u);
    EXPECT_TRUE(r.certified);
}

TEST(SpanningDimension, MatchesOracleRank) {
    RankPolicy exact;
    exact.force_exact = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            auto want = oracle::dim_W(n, m);
            EXPECT_EQ(spanning_dimension(n, m).rank, want) << n << "," << m;
            EXPECT_EQ(spanning_dimension(n, m, exact).rank, want);
        }
}

TEST(SpanningDimension, Guards) {
    EXPECT_THROW(spanning_dimension(3, 2), std::invalid_argument);
    EXPECT_THROW(spanning_dimension(5, 9), cap_exceeded);
    EXPECT_EQ(rank_of_word({1, 2, 3}), 0u);
    EXPECT_EQ(rank_of_word({3, 2, 1}), 5u);
}
