#include "oracles.hpp"
#include "tideal/bounds.hpp"
#include "tideal/decomposition.hpp"

#include <gtest/gtest.h>

using namespace tideal;

TEST(OmegaUpperBound, ClosedFormEqualsCount) {
    EXPECT_EQ(omega_upper_bound(2, 3), 6);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(omega_upper_bound(n, n), 1);
        EXPECT_EQ(omega_upper_bound(n, n + 1), n * (n + 1));
    }
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= m; ++n) EXPECT_EQ(omega_upper_bound(n, m), count_ordered_partitions(n, m));
    EXPECT_THROW(omega_upper_bound(3, 2), std::invalid_argument);
}

TEST(LatyshevLowerBound, Examples) {
    EXPECT_EQ(latyshev_lower_bound(2, 3), 5);
    for (int m = 1; m <= 7; ++m) {
        EXPECT_EQ(latyshev_lower_bound(1, m), factorial_z(m));
        EXPECT_EQ(latyshev_lower_bound(m + 1, m), 0);
    }
}

TEST(CoprimeLowerBound, Examples) {
    EXPECT_EQ(coprime_lower_bound(2, 3), 6);
    EXPECT_EQ(coprime_lower_bound(3, 4), 12);
    EXPECT_FALSE(coprime_lower_bound(2, 4).has_value());
}

TEST(Bounds, SandwichTheDimension) {
    auto check = [](int n, int m) {
        Integer dim = dim_W(n, m).value;
        EXPECT_LE(latyshev_lower_bound(n, m), dim) << n << "," << m;
        EXPECT_LE(dim, omega_upper_bound(n, m)) << n << "," << m;
        if (auto c = coprime_lower_bound(n, m)) EXPECT_LE(*c, dim) << n << "," << m;
    };
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= m; ++n) check(n, m);
    check(3, 6);
    check(6, 8);
}

TEST(Zeta, Examples) {
    EXPECT_FALSE(zeta_invertible(4, 1));
    EXPECT_TRUE(zeta_invertible(5, 1));
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(zeta_invertible(n, 0));
    EXPECT_THROW(zeta_invertible(3, 3), std::invalid_argument);
}

TEST(Zeta, CriterionMatchesCirculantRank) {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k < n; ++k) {
            std::vector<std::vector<oracle::Q>> C(n, std::vector<oracle::Q>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= k; ++j) C[i][(i + j) % n] = 1;
            bool full = oracle::rank(C) == static_cast<std::size_t>(n);
            EXPECT_EQ(zeta_invertible(n, k), full) << n << "," << k;
            EXPECT_EQ(zeta_circulant_rank(n, k) == static_cast<std::size_t>(n), full);
        }
}

TEST(DerivedDimPolynomial, MatchesTableauCount) {
    EXPECT_EQ(derived_dim_polynomial(Partition{1}).str(), "1");
    EXPECT_EQ(derived_dim_polynomial(Partition{1, 1}).str(), "d + 1");
    for (int N = 1; N <= 6; ++N)
        for (const auto& la : partitions_of(N)) {
            auto q = derived_dim_polynomial(la);
            for (int d = 0; d <= 8; ++d)
                EXPECT_EQ(q(d), Rational(oracle::syt_count(derive_partition(la, d).parts()))) << la.str() << " d=" << d;
        }
}

TEST(PolynomialFits, KZeroOneTwo) {
    std::map<int, Integer> k0{{1, 1}, {2, 1}, {3, 1}};
    EXPECT_EQ(fit_pK(0, k0).polynomial.str(), "1");
    std::map<int, Integer> k1;
    for (int n = 3; n <= 6; ++n) k1[n] = dim_W(n, n + 1).value;
    auto p1 = fit_pK(1, k1);
    EXPECT_TRUE(p1.validated);
    EXPECT_EQ(p1.polynomial.str(), "n^2 + n");
    std::map<int, Integer> k2;
    for (int n = 6; n <= 8; ++n) k2[n] = dim_W(n, n + 2).value;
    EXPECT_THROW(fit_pK(2, k2), std::invalid_argument);
    auto p2 = fit_pK(2, k2, std::pair{6, decompose_W(6, 8)});
    EXPECT_TRUE(p2.validated);
    // n(n+2)(n^2+2n-1)/2
    RationalPolynomial n({0, 1}, "n");
    auto want = (n * RationalPolynomial::linear_factor(2, "n") * RationalPolynomial({-1, 2, 1}, "n")).scaled(Rational(1, 2));
    EXPECT_EQ(p2.polynomial, want);
    EXPECT_EQ(p2.polynomial.str(), "1/2*n^4 + 2*n^3 + 3/2*n^2 - n");
}

TEST(PolynomialFits, ValidationCatchesUnstableRange) {
    std::map<int, Integer> k2;
    for (int n = 2; n <= 7; ++n) k2[n] = dim_W(n, n + 2).value;
    EXPECT_EQ(k2[2], 24);
    EXPECT_FALSE(fit_pK(2, k2).validated);
    auto p = interpolate_dim(1, {{1, 2}, {2, 6}, {3, 12}, {4, 20}, {5, 30}});
    EXPECT_TRUE(p.validated);
    EXPECT_EQ(p.validated_on, (std::vector<int>{4, 5}));
}

TEST(RationalPolynomial, ArithmeticAndInterpolation) {
    RationalPolynomial p({1, 2, 3}, "x");
    EXPECT_EQ(p(2), 17);
    EXPECT_EQ(p.shifted(1)(1), p(2));
    EXPECT_EQ(p.str(), "3*x^2 + 2*x + 1");
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = -2; x <= 2; ++x) pts.emplace_back(x, p(x));
    EXPECT_EQ(RationalPolynomial::interpolate(pts, "x"), p);
    EXPECT_TRUE(RationalPolynomial({0, 0}).is_zero());
}

TEST(GrowthBand, Ratios) {
    auto b = growth_band(1, {{2, 6}, {4, 20}});
    EXPECT_EQ(b.low, Rational(5, 4));
    EXPECT_EQ(b.high, Rational(3, 2));
}
