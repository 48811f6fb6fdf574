#pragma once

// Rank of sparse rational matrices: fraction-free exact elimination and a
// multi-prime modular path that yields a certified lower bound.

#include "common.hpp"

#include <algorithm>
#include <optional>
#include <type_traits>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace tideal {

template <class T = Rational>
class SparseMatrix {
public:
    using Entry = std::pair<std::uint32_t, T>;
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t ncols) : ncols_(ncols) {}

    // Entries may arrive in any order; duplicates are summed and zeros dropped.
    void add_row(Row r) {
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Row out;
        for (auto& e : r) {
            if (e.first >= ncols_) throw std::out_of_range("column index out of range");
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const Entry& e) { return e.second == 0; });
        rows_.push_back(std::move(out));
    }

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t nnz() const {
        std::size_t s = 0;
        for (const auto& r : rows_) s += r.size();
        return s;
    }

    // Triplet lines "row col num/den", 1-based.
    std::string dump() const {
        std::ostringstream os;
        os << nrows() << " " << ncols() << " " << nnz() << "\n";
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i]) {
                Rational q(v);
                os << i + 1 << " " << c + 1 << " " << q.get_num() << "/" << q.get_den() << "\n";
            }
        return os.str();
    }

private:
    std::size_t ncols_ = 0;
    std::vector<Row> rows_;
};

namespace detail {

using IntRow = std::vector<std::pair<std::uint32_t, Integer>>;

inline void divide_content(IntRow& r) {
    Integer g = 0;
    for (const auto& e : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

template <class T>
IntRow to_integer_row(const std::vector<std::pair<std::uint32_t, T>>& row) {
    Integer l = 1;
    for (const auto& [c, v] : row) {
        Rational q(v);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        Rational q(v);
        out.emplace_back(c, Integer(q.get_num() * (l / q.get_den())));
    }
    divide_content(out);
    return out;
}

// r := a*r - b*s, both sorted by column.
inline IntRow combine(const Integer& a, const IntRow& r, const Integer& b, const IntRow& s) {
    IntRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    Integer t;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, -b * s[j].second);
            ++j;
        } else {
            t = a * r[i].second - b * s[j].second;
            if (t != 0) out.emplace_back(r[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

inline const Integer* find_col(const IntRow& r, std::uint32_t c) {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

} // namespace detail

// Fraction-free elimination over the integers (rows scaled to primitive
// integer vectors). Pivot: column with fewest active entries, then the
// shortest row in it; ties go to the lowest index.
template <class T>
std::size_t rank_exact(const SparseMatrix<T>& M) {
    std::vector<detail::IntRow> rows;
    for (const auto& r : M.rows())
        if (!r.empty()) rows.push_back(detail::to_integer_row(r));
    std::vector<std::size_t> colcount(M.ncols(), 0);
    for (const auto& r : rows)
        for (const auto& e : r) ++colcount[e.first];
    std::vector<bool> active(rows.size(), true);
    std::size_t rank = 0;
    while (true) {
        std::size_t best = 0;
        std::uint32_t col = 0;
        for (std::uint32_t c = 0; c < colcount.size(); ++c)
            if (colcount[c] && (best == 0 || colcount[c] < best)) {
                best = colcount[c];
                col = c;
            }
        if (best == 0) break;
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (active[i] && detail::find_col(rows[i], col) && (piv == rows.size() || rows[i].size() < rows[piv].size()))
                piv = i;
        active[piv] = false;
        ++rank;
        for (const auto& e : rows[piv]) --colcount[e.first];
        Integer a = *detail::find_col(rows[piv], col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            const Integer* b = detail::find_col(rows[i], col);
            if (!b) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b->get_mpz_t());
            Integer aa = a / g, bb = *b / g;
            for (const auto& e : rows[i]) --colcount[e.first];
            rows[i] = detail::combine(aa, rows[i], bb, rows[piv]);
            detail::divide_content(rows[i]);
            for (const auto& e : rows[i]) ++colcount[e.first];
            if (rows[i].empty()) active[i] = false;
        }
        rows[piv].clear();
    }
    return rank;
}

// Arithmetic modulo a prime below 2^31 with Barrett reduction.
class ModP {
public:
    explicit ModP(std::uint64_t p) : p_(p), m_(~std::uint64_t(0) / p) {}
    std::uint64_t p() const { return p_; }
    // x < 2^63
    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
        std::uint64_t r = x - q * p_;
        return r >= p_ ? r - p_ : r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
    std::uint64_t from(const Integer& z) const {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p_));
        return r.get_ui();
    }
    std::uint64_t from(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p_) : r);
    }
    // Returns false when the denominator vanishes mod p.
    bool from(const Rational& q, std::uint64_t& out) const {
        std::uint64_t d = from(Integer(q.get_den()));
        if (d == 0) return false;
        out = mul(from(Integer(q.get_num())), inv(d));
        return true;
    }

private:
    std::uint64_t p_, m_;
};

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    ModP f(n);
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        std::uint64_t x = f.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = f.mul(x, x);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

inline std::uint64_t random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t(1) << 30, (std::uint64_t(1) << 31) - 1);
    while (true) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u32(c)) return c;
    }
}

// Dense Gaussian elimination mod p; rows are consumed.
inline std::size_t dense_rank_mod(std::vector<std::vector<std::uint32_t>>& A, const ModP& f) {
    if (A.empty()) return 0;
    std::size_t nr = A.size(), nc = A[0].size(), rank = 0;
    const std::uint64_t p = f.p();
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t piv = rank;
        while (piv < nr && A[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(A[rank], A[piv]);
        auto& P = A[rank];
        std::uint64_t inv = f.inv(P[c]);
        for (std::size_t j = c; j < nc; ++j) P[j] = static_cast<std::uint32_t>(f.mul(P[j], inv));
        for (std::size_t i = rank + 1; i < nr; ++i) {
            auto& R = A[i];
            std::uint64_t x = R[c];
            if (!x) continue;
            std::uint64_t neg = p - x;
            for (std::size_t j = c; j < nc; ++j) R[j] = static_cast<std::uint32_t>(f.reduce(R[j] + neg * P[j]));
        }
        ++rank;
    }
    return rank;
}

namespace detail {

using ModRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Left-looking sparse elimination: each incoming row is reduced against the
// pivot rows through a dense accumulator. Suited to very sparse inputs.
inline std::size_t sparse_rank_mod(const std::vector<ModRow>& rows, std::size_t ncols, const ModP& f) {
    const std::uint64_t p = f.p();
    std::vector<std::int64_t> pivot_of(ncols, -1);
    std::vector<ModRow> pivots;
    std::vector<std::uint64_t> acc(ncols, 0);
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(ncols, 0);
    for (const auto& r : rows) {
        touched.clear();
        for (const auto& [c, v] : r) {
            acc[c] = v;
            mark[c] = 1;
            touched.push_back(c);
        }
        std::make_heap(touched.begin(), touched.end(), std::greater<>());
        std::uint32_t lead = 0;
        bool found = false;
        while (!touched.empty()) {
            std::pop_heap(touched.begin(), touched.end(), std::greater<>());
            std::uint32_t c = touched.back();
            touched.pop_back();
            mark[c] = 0;
            std::uint64_t x = acc[c];
            if (!x) continue;
            if (pivot_of[c] < 0) {
                lead = c;
                found = true;
                break;
            }
            const auto& P = pivots[pivot_of[c]];
            std::uint64_t neg = p - x;
            for (const auto& [cc, vv] : P) {
                acc[cc] = f.reduce(acc[cc] + neg * vv);
                if (!mark[cc]) {
                    mark[cc] = 1;
                    touched.push_back(cc);
                    std::push_heap(touched.begin(), touched.end(), std::greater<>());
                }
            }
        }
        if (found) {
            ModRow nr;
            std::uint64_t inv = f.inv(acc[lead]);
            nr.emplace_back(lead, 1);
            acc[lead] = 0;
            std::sort(touched.begin(), touched.end());
            for (std::uint32_t c : touched) {
                if (acc[c]) nr.emplace_back(c, static_cast<std::uint32_t>(f.mul(acc[c], inv)));
                acc[c] = 0;
                mark[c] = 0;
            }
            pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
            pivots.push_back(std::move(nr));
            if (pivots.size() == ncols) break;
        } else {
            for (std::uint32_t c : touched) {
                acc[c] = 0;
                mark[c] = 0;
            }
        }
    }
    return pivots.size();
}

} // namespace detail

// Rank of the matrix mod p. The result never exceeds the rational rank.
// Strategy: very sparse input uses sparse elimination; a wide matrix is
// replaced by its Gram matrix A*A^T (same rational rank, computed mod p);
// everything else is eliminated densely in the smaller orientation.
template <class T>
std::optional<std::size_t> rank_mod_prime(const SparseMatrix<T>& M, std::uint64_t prime) {
    ModP f(prime);
    std::vector<detail::ModRow> rows;
    rows.reserve(M.nrows());
    for (const auto& r : M.rows()) {
        if (r.empty()) continue;
        detail::ModRow mr;
        mr.reserve(r.size());
        for (const auto& [c, v] : r) {
            std::uint64_t x;
            if constexpr (std::is_same_v<T, Rational>) {
                if (!f.from(v, x)) return std::nullopt;
            } else {
                x = f.from(v);
            }
            if (x) mr.emplace_back(c, static_cast<std::uint32_t>(x));
        }
        rows.push_back(std::move(mr));
    }
    std::size_t nr = rows.size(), nc = M.ncols();
    if (nr == 0 || nc == 0) return 0;
    std::size_t nnz = 0;
    for (const auto& r : rows) nnz += r.size();
    double density = static_cast<double>(nnz) / static_cast<double>(nr) / static_cast<double>(nc);
    if (density < 0.01 && nnz / nr <= 64) return detail::sparse_rank_mod(rows, nc, f);
    if (nc > 2 * nr) {
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> bycol(nc);
        for (std::uint32_t i = 0; i < nr; ++i)
            for (const auto& [c, v] : rows[i]) bycol[c].emplace_back(i, v);
        std::vector<std::vector<std::uint64_t>> G(nr, std::vector<std::uint64_t>(nr, 0));
        for (const auto& col : bycol)
            for (const auto& [i, a] : col)
                for (const auto& [j, b] : col) G[i][j] = f.reduce(G[i][j] + std::uint64_t(a) * b);
        std::vector<std::vector<std::uint32_t>> A(nr, std::vector<std::uint32_t>(nr));
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nr; ++j) A[i][j] = static_cast<std::uint32_t>(G[i][j]);
        return dense_rank_mod(A, f);
    }
    bool transpose = nr > nc;
    std::vector<std::vector<std::uint32_t>> A(transpose ? nc : nr, std::vector<std::uint32_t>(transpose ? nr : nc, 0));
    for (std::uint32_t i = 0; i < nr; ++i)
        for (const auto& [c, v] : rows[i]) (transpose ? A[c][i] : A[i][c]) = v;
    return dense_rank_mod(A, f);
}

struct ModularRank {
    std::size_t lower_bound = 0;
    bool agreed = true;
    std::vector<std::pair<std::uint64_t, std::size_t>> per_prime;
};

template <class T>
ModularRank rank_modular(const SparseMatrix<T>& M, int prime_count = 2, std::uint64_t seed = 0x5eed) {
    if (prime_count < 1) throw std::invalid_argument("rank_modular: prime_count must be positive");
    std::mt19937_64 rng(seed);
    ModularRank out;
    while (static_cast<int>(out.per_prime.size()) < prime_count) {
        std::uint64_t p = random_prime(rng);
        auto r = rank_mod_prime(M, p);
        if (!r) continue;
        out.per_prime.emplace_back(p, *r);
        if (*r != out.per_prime.front().second) out.agreed = false;
        out.lower_bound = std::max(out.lower_bound, *r);
    }
    return out;
}

// Incrementally maintained echelon basis of dense vectors mod p.
class ModRowBasis {
public:
    ModRowBasis(std::size_t dim, std::uint64_t prime) : dim_(dim), f_(prime) {}
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    // Returns true when v is independent of the current basis (and adds it).
    bool insert(std::vector<std::uint64_t> v) {
        const std::uint64_t p = f_.p();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::uint64_t x = v[pivots_[k]];
            if (!x) continue;
            std::uint64_t neg = p - x;
            const auto& R = rows_[k];
            for (std::size_t j = 0; j < dim_; ++j)
                if (R[j]) v[j] = f_.reduce(v[j] + neg * R[j]);
        }
        std::size_t piv = 0;
        while (piv < dim_ && v[piv] == 0) ++piv;
        if (piv == dim_) return false;
        std::uint64_t inv = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }
    const ModP& field() const { return f_; }

private:
    std::size_t dim_;
    ModP f_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// Incremental fraction-free echelon basis of integer vectors.
class IntRowBasis {
public:
    explicit IntRowBasis(std::size_t dim) : dim_(dim) {}
    std::size_t rank() const { return rows_.size(); }

    bool insert(std::vector<Integer> v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Integer& x = v[pivots_[k]];
            if (x == 0) continue;
            const auto& R = rows_[k];
            Integer a = R[pivots_[k]], b = x, g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            a /= g;
            b /= g;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = a * v[j] - b * R[j];
        }
        Integer g = 0;
        for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 0) return false;
        std::size_t piv = 0;
        while (v[piv] == 0) ++piv;
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace tideal
