#pragma once

// Rank helpers and random inputs for property checks.

#include "multilinear.hpp"
#include "substitution.hpp"

#include <random>

namespace tideal {

inline std::size_t element_rank(const std::vector<AlgebraElement<Rational>>& fs, int m) {
    SparseMatrix<Rational> M(factorial(m));
    for (const auto& f : fs) {
        SparseMatrix<Rational>::Row row;
        for (const auto& [k, c] : f.terms())
            row.emplace_back(static_cast<std::uint32_t>(Permutation::unpack(m, k).rank()), c);
        M.add_row(std::move(row));
    }
    return rank_exact(M);
}

inline std::size_t ypoly_rank(const std::vector<YPolynomial<Rational>>& gs) {
    std::map<Word, std::uint32_t> cols;
    for (const auto& g : gs)
        for (const auto& [w, c] : g.terms()) cols.try_emplace(w, static_cast<std::uint32_t>(cols.size()));
    SparseMatrix<Rational> M(std::max<std::size_t>(cols.size(), 1));
    for (const auto& g : gs) {
        SparseMatrix<Rational>::Row row;
        for (const auto& [w, c] : g.terms()) row.emplace_back(cols.at(w), c);
        M.add_row(std::move(row));
    }
    return rank_exact(M);
}

// dim span { a sigma b : sigma in S_m }
inline std::size_t sandwich_rank(const AlgebraElement<Rational>& a, const AlgebraElement<Rational>& b) {
    int m = a.degree();
    std::vector<AlgebraElement<Rational>> rows;
    for (std::uint64_t r = 0; r < factorial(m); ++r) rows.push_back(multiply(act_right(a, Permutation::unrank(m, r)), b));
    return element_rank(rows, m);
}

// A few permutations with small nonzero integer coefficients.
inline AlgebraElement<Rational> random_element(int m, int terms, std::mt19937_64& rng) {
    AlgebraElement<Rational> f(m);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < terms; ++i) {
        int c = coef(rng);
        f.add(Permutation::random(m, rng), Rational(c == 0 ? 1 : c));
    }
    return f;
}

inline Partition random_partition(int m, std::mt19937_64& rng) {
    auto all = partitions_of(m);
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

inline Word random_word(int len, int letters, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, letters);
    std::vector<int> l(len);
    for (auto& x : l) x = d(rng);
    return Word(std::move(l));
}

} // namespace tideal
