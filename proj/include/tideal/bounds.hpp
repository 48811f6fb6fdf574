#pragma once

// Closed-form bounds on dim W_{n,m}, invertibility of e + g + ... + g^k in a
// cyclic group algebra, and polynomial dimension formulas.

#include "multilinear.hpp"
#include "polynomial.hpp"
#include "representation.hpp"

namespace tideal {

inline Integer omega_upper_bound(int n, int m) {
    if (n < 1 || n > m) throw std::invalid_argument("omega_upper_bound requires 1 <= n <= m");
    return binomial_z(m, n) * factorial_z(m - 1) / factorial_z(n - 1);
}

// Sum of d_lambda^2 over lambda |- m with at least n rows.
inline Integer latyshev_lower_bound(int n, int m) {
    Integer s = 0;
    for (const auto& la : partitions_of(m))
        if (la.length() >= n) {
            Integer d = irrep_dim_z(la);
            s += d * d;
        }
    return s;
}

// m!/(n-1)! when gcd(n, m) = 1.
inline std::optional<Integer> coprime_lower_bound(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("coprime_lower_bound requires positive n and m");
    if (std::gcd(n, m) != 1) return std::nullopt;
    return factorial_z(m) / factorial_z(n - 1);
}

inline bool zeta_invertible(int order, int k) {
    if (order < 1 || k < 0 || k >= order) throw std::invalid_argument("zeta_invertible requires 0 <= k < order");
    return std::gcd(k + 1, order) == 1;
}

// Rank over Q of multiplication by e + g + ... + g^k on Q[Z/order].
inline std::size_t zeta_circulant_rank(int order, int k) {
    if (order < 1 || k < 0 || k >= order) throw std::invalid_argument("zeta_circulant_rank requires 0 <= k < order");
    SparseMatrix<Rational> M(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        SparseMatrix<Rational>::Row row;
        for (int j = 0; j <= k; ++j) row.emplace_back(static_cast<std::uint32_t>((i + j) % order), Rational(1));
        M.add_row(std::move(row));
    }
    return rank_exact(M);
}

// q(d) = dim S^{lambda^(d)}. With N = |lambda|, the hook formula gives
// (N+d)! / (d! prod_j (h_{1j}+d) H) where H is the product of the hooks
// outside the first row; the first-row hooks are distinct values in 1..N, so
// q(d) = prod_{i in 1..N, i not a first-row hook} (d+i) / H.
inline RationalPolynomial derived_dim_polynomial(const Partition& la) {
    if (la.size() == 0) throw std::invalid_argument("derived_dim_polynomial requires a nonempty partition");
    auto h = hook_table(la);
    int N = la.size();
    std::vector<bool> first_row(N + 1, false);
    for (int v : h[0]) first_row[v] = true;
    Integer rest = 1;
    for (std::size_t i = 1; i < h.size(); ++i)
        for (int v : h[i]) rest *= v;
    RationalPolynomial q({Rational(1)}, "d");
    for (int i = 1; i <= N; ++i)
        if (!first_row[i]) q = q * RationalPolynomial::linear_factor(i, "d");
    return q.scaled(Rational(1) / Rational(rest));
}

struct DimFit {
    RationalPolynomial polynomial;
    bool validated = false;
    std::vector<int> fitted_on;
    std::vector<int> validated_on;
    std::string note;
};

// p(n) = sum mult * q_lambda(n - n0) for a decomposition of W_{n0,n0+K} taken in
// the stable range; checked against every sample.
inline DimFit dim_polynomial_from_decomposition(const Decomposition& w, int n0,
                                                const std::map<int, Integer>& samples) {
    DimFit f;
    RationalPolynomial p({}, "n");
    for (const auto& [la, mult] : w.terms())
        p = p + derived_dim_polynomial(la).shifted(-n0).scaled(Rational(static_cast<unsigned long>(mult)));
    p.set_variable("n");
    f.polynomial = p;
    f.validated = true;
    for (const auto& [n, v] : samples) {
        f.validated_on.push_back(n);
        if (p(n) != Rational(v)) f.validated = false;
    }
    f.note = "from the decomposition at n = " + std::to_string(n0);
    return f;
}

// Degree-2K interpolation on the first 2K+1 samples, checked on the rest.
inline DimFit interpolate_dim(int K, const std::map<int, Integer>& samples) {
    DimFit f;
    std::size_t need = static_cast<std::size_t>(2 * K + 1);
    if (samples.size() < need + 1)
        throw std::invalid_argument("fitting p_" + std::to_string(K) + " needs at least " + std::to_string(need + 1) +
                                    " samples");
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& [n, v] : samples) {
        if (pts.size() < need) {
            pts.emplace_back(n, Rational(v));
            f.fitted_on.push_back(n);
        }
    }
    f.polynomial = RationalPolynomial::interpolate(pts, "n");
    f.validated = true;
    for (auto it = std::next(samples.begin(), static_cast<long>(need)); it != samples.end(); ++it) {
        f.validated_on.push_back(it->first);
        if (f.polynomial(it->first) != Rational(it->second)) f.validated = false;
    }
    f.note = "interpolation";
    return f;
}

// p_K(n) = dim W_{n,n+K}. Uses interpolation when enough samples are given,
// otherwise the stable decomposition (required then).
inline DimFit fit_pK(int K, const std::map<int, Integer>& samples,
                     const std::optional<std::pair<int, Decomposition>>& stable = std::nullopt) {
    if (K < 0) throw std::invalid_argument("fit_pK requires K >= 0");
    if (samples.empty()) throw std::invalid_argument("fit_pK needs samples");
    if (samples.size() >= static_cast<std::size_t>(2 * K + 2)) return interpolate_dim(K, samples);
    if (!stable)
        throw std::invalid_argument("fit_pK: " + std::to_string(samples.size()) + " samples are too few for degree " +
                                    std::to_string(2 * K) + " without a stable decomposition");
    return dim_polynomial_from_decomposition(stable->second, stable->first, samples);
}

// Observed range of dim / n^{2K}.
struct RatioBand {
    Rational low, high;
};

inline RatioBand growth_band(int K, const std::map<int, Integer>& samples) {
    RatioBand b;
    bool first = true;
    for (const auto& [n, v] : samples) {
        Integer p = 1;
        for (int i = 0; i < 2 * K; ++i) p *= n;
        Rational r(v, p);
        r.canonicalize();
        if (first || r < b.low) b.low = r;
        if (first || r > b.high) b.high = r;
        first = false;
    }
    return b;
}

} // namespace tideal
