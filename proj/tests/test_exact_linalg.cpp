#include "oracles.hpp"
#include "tideal/multilinear.hpp"

#include <gtest/gtest.h>

using namespace tideal;

namespace {

SparseMatrix<Rational> from_dense(const std::vector<std::vector<Rational>>& A, std::size_t ncols) {
    SparseMatrix<Rational> M(ncols);
    for (const auto& r : A) {
        SparseMatrix<Rational>::Row row;
        for (std::size_t j = 0; j < r.size(); ++j) row.emplace_back(static_cast<std::uint32_t>(j), r[j]);
        M.add_row(std::move(row));
    }
    return M;
}

std::vector<std::vector<Rational>> random_dense(std::size_t rows, std::size_t cols, int zero_percent,
                                                std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pct(0, 99), num(-4, 4), den(1, 3);
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols, 0));
    for (auto& r : A)
        for (auto& x : r)
            if (pct(rng) >= zero_percent) x = Rational(num(rng), den(rng));
    return A;
}

}  // namespace

TEST(SparseMatrix, NormalizesRowsAndDumps) {
    SparseMatrix<Rational> M(3);
    M.add_row({{2, Rational(1, 2)}, {0, 1}, {2, Rational(1, 2)}, {1, 0}});
    ASSERT_EQ(M.rows()[0].size(), 2u);
    EXPECT_EQ(M.rows()[0][0].first, 0u);
    EXPECT_EQ(M.rows()[0][1].second, 1);
    EXPECT_EQ(M.dump(), "1 3 2\n1 1 1/1\n1 3 1/1\n");
    EXPECT_THROW(M.add_row({{3, 1}}), std::out_of_range);
}

TEST(RankExact, SmallExamples) {
    SparseMatrix<Rational> id(3);
    for (std::uint32_t i = 0; i < 3; ++i) id.add_row({{i, 1}});
    EXPECT_EQ(rank_exact(id), 3u);
    EXPECT_EQ(rank_exact(build_spanning_matrix(2, 2)), 1u);
    EXPECT_EQ(rank_exact(SparseMatrix<Rational>(4)), 0u);
}

TEST(RankExact, MatchesDenseOracle) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 9, c = 1 + (trial * 7) % 11;
        auto A = random_dense(r, c, trial % 3 == 0 ? 80 : 40, rng);
        // Add a dependent row so that rank deficiency is exercised.
        if (r >= 2) {
            std::vector<Rational> dep(c);
            for (std::size_t j = 0; j < c; ++j) dep[j] = A[0][j] * 2 - A[1][j];
            A.push_back(dep);
        }
        EXPECT_EQ(rank_exact(from_dense(A, c)), oracle::rank(A)) << "trial " << trial;
    }
}

TEST(RankExact, InvariantUnderRowPermutationScalingAndDuplication) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_dense(7, 9, 60, rng);
        auto base = rank_exact(from_dense(A, 9));
        auto B = A;
        std::shuffle(B.begin(), B.end(), rng);
        for (auto& row : B)
            for (auto& x : row) x *= Rational(-3, 2);
        EXPECT_EQ(rank_exact(from_dense(B, 9)), base);
        B.insert(B.end(), A.begin(), A.end());
        EXPECT_EQ(rank_exact(from_dense(B, 9)), base);
    }
}

TEST(RankModular, UnimodularAgreesEverywhere) {
    SparseMatrix<long> M(3);
    M.add_row({{0, 1}, {1, 2}});
    M.add_row({{1, 1}, {2, 5}});
    M.add_row({{2, 1}});
    auto r = rank_modular(M, 4, 99);
    EXPECT_EQ(r.lower_bound, 3u);
    EXPECT_TRUE(r.agreed);
    EXPECT_EQ(r.per_prime.size(), 4u);
}

TEST(RankModular, SmallPrimeCanUnderestimate) {
    SparseMatrix<long> M(1);
    M.add_row({{0, 7}});
    EXPECT_EQ(rank_mod_prime(M, 7), 0u);
    EXPECT_EQ(rank_mod_prime(M, 11), 1u);
    EXPECT_EQ(rank_exact(M), 1u);
}

TEST(RankModular, NeverExceedsExactRank) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        auto A = random_dense(6, 8, 50, rng);
        auto M = from_dense(A, 8);
        auto mr = rank_modular(M, 2, static_cast<std::uint64_t>(trial));
        auto exact = rank_exact(M);
        EXPECT_LE(mr.lower_bound, exact);
        if (mr.agreed) EXPECT_EQ(mr.lower_bound, exact);
    }
}

TEST(RankModular, SpanningMatrixThreeSix) {
    auto M = build_spanning_matrix(3, 6);
    EXPECT_EQ(M.nrows(), 1200u);
    EXPECT_EQ(M.ncols(), 720u);
    auto mr = rank_modular(M, 2);
    EXPECT_EQ(mr.lower_bound, 720u);
    EXPECT_TRUE(mr.agreed);
    EXPECT_EQ(rank_exact(M), 720u);
}

TEST(RankModular, DenseGramAndSparsePathsAgree) {
    // Wide, tall and very sparse shapes route through different eliminations.
    std::mt19937_64 rng(13);
    for (auto [r, c, z] : std::vector<std::tuple<int, int, int>>{{5, 40, 30}, {40, 5, 30}, {200, 300, 99}}) {
        auto A = random_dense(r, c, z, rng);
        auto M = from_dense(A, c);
        EXPECT_EQ(rank_modular(M, 2).lower_bound, oracle::rank(A)) << r << "x" << c;
    }
}

TEST(RowBases, IncrementalRanksMatchBatch) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t dim = 6;
        ModRowBasis mod(dim, 1000003);
        IntRowBasis ints(dim);
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < 9; ++i) {
            std::vector<Integer> v(dim);
            std::vector<std::uint64_t> w(dim);
            std::vector<Rational> q(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                int x = (j + static_cast<std::size_t>(trial)) % 3 == 0 ? 0 : d(rng);
                v[j] = x;
                q[j] = x;
                w[j] = static_cast<std::uint64_t>((x + 1000003) % 1000003);
            }
            rows.push_back(q);
            bool a = mod.insert(w), b = ints.insert(v);
            EXPECT_EQ(a, b);
        }
        EXPECT_EQ(ints.rank(), oracle::rank(rows));
        EXPECT_EQ(mod.rank(), ints.rank());
    }
}
