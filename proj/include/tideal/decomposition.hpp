#pragma once

// Multiplicities m^lambda_{n,m} of S^lambda in W_{n,m}, computed as the rank
// of the highest-weight images b_T(y) P_O over all O in Omega_{n,m}.
//
// Two reductions keep this small:
//  * b_T(y) P_O lies in the d_lambda-dimensional space spanned by the
//    u_T b_T s (u_T the tableau substitution word). Its coefficients on the
//    d_lambda lattice words (row-index readings of standard tableaux) already
//    determine it; this is certified per shape by a nonsingular d x d minor.
//  * In the coefficient of a fixed word, the singleton blocks of O can be
//    summed out: the column alternation cancels unless every column keeps at
//    most one singleton variable, and then the singletons only contribute a
//    product of factorials. Only the blocks of size >= 2 are placed.

#include "multilinear.hpp"
#include "parallel.hpp"
#include "representation.hpp"
#include "substitution.hpp"

#include <array>
#include <bit>
#include <functional>
#include <memory>

namespace tideal {

class HighestWeightSpace {
public:
    explicit HighestWeightSpace(const Partition& la) : la_(la), t_(canonical_tableau(la)), m_(la.size()) {
        if (m_ > 16) throw cap_exceeded("highest-weight engine supports m <= 16");
        row_.assign(m_ + 1, 0);
        col_.assign(m_ + 1, 0);
        for (int x = 1; x <= m_; ++x) {
            row_[x] = t_.row_of(x);
            col_[x] = t_.col_of(x);
        }
        Partition c = la.conjugate();
        for (int j = 0; j < c.length(); ++j) col_len_.push_back(c[j]);
        for (int r = 0; r <= m_; ++r) fact_[r] = static_cast<std::int64_t>(factorial(r));
    }

    const Partition& shape() const { return la_; }
    const Tableau& tableau() const { return t_; }
    std::size_t dim() const { return words_.size(); }
    const std::vector<std::vector<std::uint8_t>>& coordinates() const { return words_; }

    // Builds the lattice-word coordinates and checks that restriction to them
    // is injective on the highest-weight space. Idempotent.
    void prepare() {
        if (prepared_) return;
        std::vector<std::vector<int>> sigmas;
        for_each_standard_tableau(la_, [&](const Tableau& s) {
            std::vector<std::uint8_t> w(m_);
            std::vector<int> sigma(m_);
            for (int p = 1; p <= m_; ++p) {
                w[p - 1] = static_cast<std::uint8_t>(s.row_of(p));
                sigma[p - 1] = t_.at(s.row_of(p), s.col_of(p));
            }
            words_.push_back(std::move(w));
            sigmas.push_back(std::move(sigma));
        });
        std::size_t d = words_.size();
        // G[a][b] = coefficient of word b in u_T b_T sigma_a; G[a][a] = 1.
        std::vector<std::vector<int>> G(d, std::vector<int>(d));
        bool lower = true, upper = true;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                G[a][b] = basis_coefficient(sigmas[a], words_[b]);
                if (a == b && G[a][b] != 1) throw consistency_error("lattice-word minor has a non-unit diagonal");
                if (b > a && G[a][b]) lower = false;
                if (b < a && G[a][b]) upper = false;
            }
        if (!lower && !upper) {
            std::mt19937_64 rng(0xc0ffee);
            bool ok = false;
            for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
                ModRowBasis basis(d, random_prime(rng));
                for (std::size_t a = 0; a < d; ++a) {
                    std::vector<std::uint64_t> v(d);
                    for (std::size_t b = 0; b < d; ++b) v[b] = basis.field().from(static_cast<long long>(G[a][b]));
                    basis.insert(std::move(v));
                }
                ok = basis.rank() == d;
            }
            if (!ok) throw consistency_error("lattice-word coordinates are not injective for " + la_.str());
        }
        prepared_ = true;
    }

    // Coefficients of b_T(y) P_O on the coordinate words. Returns false (and
    // leaves out untouched) when the image is zero for structural reasons.
    bool row(const OrderedPartition& o, std::vector<std::int64_t>& out) const {
        Placement pl;
        if (!structurally_nonzero(o, pl)) return false;
        out.assign(words_.size(), 0);
        bool any = false;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            out[i] = word_coefficient(pl, words_[i]);
            any = any || out[i] != 0;
        }
        return any;
    }

    // The structural test alone: false means b_T(y) P_O = 0.
    bool may_be_nonzero(const OrderedPartition& o) const {
        Placement pl;
        return structurally_nonzero(o, pl);
    }

    // Coefficient of an arbitrary word (letters 0-based) in b_T(y) P_O.
    std::int64_t coefficient(const OrderedPartition& o, const std::vector<std::uint8_t>& w) const {
        Placement pl;
        if (!structurally_nonzero(o, pl)) return 0;
        std::array<int, 17> cnt{};
        for (auto x : w) {
            if (x >= la_.length()) return 0;
            ++cnt[x];
        }
        for (int r = 0; r < la_.length(); ++r)
            if (cnt[r] != la_[r]) return 0;
        return word_coefficient(pl, w);
    }

private:
    struct Placement {
        std::vector<std::vector<int>> big;  // blocks of size >= 2
        std::array<bool, 17> is_big{};
    };

    bool structurally_nonzero(const OrderedPartition& o, Placement& pl) const {
        if (o.m() != m_) throw degree_mismatch("ordered partition degree differs from shape size");
        std::array<int, 17> ns{};
        for (const auto& b : o.parts()) {
            if (b.size() < 2) continue;
            pl.big.push_back(b);
            for (int x : b) {
                pl.is_big[x] = true;
                ++ns[col_[x]];
            }
        }
        for (std::size_t c = 0; c < col_len_.size(); ++c)
            if (col_len_[c] - ns[c] >= 2) return false;
        return true;
    }

    // Coefficient of word w in u_T b_T sigma; sigma in one-line form.
    int basis_coefficient(const std::vector<int>& sigma, const std::vector<std::uint8_t>& w) const {
        std::array<std::uint32_t, 17> used{};
        std::array<int, 17> letter{};
        for (int p = 0; p < m_; ++p) {
            int j = sigma[p], c = col_[j], r = w[p];
            if (r >= col_len_[c] || (used[c] >> r & 1u)) return 0;
            used[c] |= 1u << r;
            letter[j] = r;
        }
        return column_sign(letter);
    }

    int column_sign(const std::array<int, 17>& letter) const {
        int parity = 0;
        for (std::size_t c = 0; c < col_len_.size() && col_len_[c] >= 2; ++c)
            for (int i = 0; i < col_len_[c]; ++i)
                for (int k = i + 1; k < col_len_[c]; ++k)
                    if (letter[t_.at(i, c)] > letter[t_.at(k, c)]) parity ^= 1;
        return parity ? -1 : 1;
    }

    std::int64_t word_coefficient(const Placement& pl, const std::vector<std::uint8_t>& w) const {
        std::array<std::uint32_t, 17> used{};
        std::array<int, 17> letter{};
        std::int64_t total = 0;
        auto leaf = [&] {
            std::array<int, 17> full = letter;
            std::array<int, 17> cnt{};
            for (int x = 1; x <= m_; ++x)
                if (pl.is_big[x]) ++cnt[letter[x]];
            for (std::size_t c = 0; c < col_len_.size(); ++c) {
                std::uint32_t missing = ((1u << col_len_[c]) - 1u) & ~used[c];
                if (!missing) continue;
                int r = std::countr_zero(missing);
                for (int i = 0; i < col_len_[c]; ++i) {
                    int x = t_.at(i, c);
                    if (!pl.is_big[x]) full[x] = r;
                }
            }
            std::int64_t weight = 1;
            for (int r = 0; r < la_.length(); ++r) weight *= fact_[la_[r] - cnt[r]];
            total += column_sign(full) * weight;
        };
        auto rec = [&](auto&& self, std::size_t bi, std::uint32_t occupied) -> void {
            if (bi == pl.big.size()) {
                leaf();
                return;
            }
            const auto& b = pl.big[bi];
            int len = static_cast<int>(b.size());
            std::uint32_t span = (1u << len) - 1u;
            for (int s = 0; s + len <= m_; ++s) {
                if (occupied & (span << s)) continue;
                int q = 0;
                for (; q < len; ++q) {
                    int x = b[q], c = col_[x], r = w[s + q];
                    if (r >= col_len_[c] || (used[c] >> r & 1u)) break;
                    used[c] |= 1u << r;
                    letter[x] = r;
                }
                if (q == len) self(self, bi + 1, occupied | (span << s));
                for (int u = 0; u < q; ++u) used[col_[b[u]]] &= ~(1u << w[s + u]);
            }
        };
        rec(rec, 0, 0);
        return total;
    }

    Partition la_;
    Tableau t_;
    int m_;
    std::vector<int> row_, col_, col_len_;
    std::array<std::int64_t, 17> fact_{};
    std::vector<std::vector<std::uint8_t>> words_;
    bool prepared_ = false;
};

struct MultiplicityOptions {
    // Certify ranks below d_lambda by exact integer elimination.
    bool exact = true;
    int primes = 2;
    int workers = default_workers();
    std::uint64_t seed = 0x5eed;
    std::size_t batch = 256;
    std::function<void(const std::string&)> progress;
};

struct MultiplicityResult {
    Partition shape;
    std::uint64_t value = 0;
    std::uint64_t irrep_dim = 0;
    std::size_t rows_visited = 0;
    std::size_t rows_nonzero = 0;
    bool certified = true;
    bool pruned = false;
    std::string method;
};

inline MultiplicityResult multiplicity_detailed(int n, int m, const Partition& la, const MultiplicityOptions& opt = {}) {
    if (n < 1 || n > m) throw std::invalid_argument("multiplicity requires 1 <= n <= m");
    if (la.size() != m) throw std::invalid_argument("multiplicity: " + la.str() + " is not a partition of m");
    MultiplicityResult res;
    res.shape = la;
    res.irrep_dim = irrep_dim(la);
    HighestWeightSpace hw(la);
    const std::size_t d = res.irrep_dim;

    std::mt19937_64 rng(opt.seed);
    std::vector<std::uint64_t> primes;
    for (int i = 0; i < std::max(1, opt.primes); ++i) primes.push_back(random_prime(rng));
    std::vector<ModRowBasis> mod;
    for (auto p : primes) mod.emplace_back(d, p);
    std::vector<std::vector<std::int64_t>> kept;

    std::vector<OrderedPartition> batch;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<char> nonzero;
    bool full = false;
    auto flush = [&] {
        if (batch.empty()) return;
        rows.assign(batch.size(), {});
        nonzero.assign(batch.size(), 0);
        parallel_for(batch.size(), opt.workers, [&](std::size_t i) { nonzero[i] = hw.row(batch[i], rows[i]); });
        for (std::size_t i = 0; i < batch.size() && !full; ++i) {
            if (!nonzero[i]) continue;
            ++res.rows_nonzero;
            for (auto& b : mod) {
                std::vector<std::uint64_t> v(d);
                for (std::size_t j = 0; j < d; ++j) v[j] = b.field().from(static_cast<long long>(rows[i][j]));
                b.insert(std::move(v));
            }
            if (mod[0].rank() == d) full = true;
            else kept.push_back(std::move(rows[i]));
        }
        batch.clear();
    };
    bool prepared = false;
    for_each_ordered_partition_until(n, m, [&](const OrderedPartition& o) {
        ++res.rows_visited;
        if (!hw.may_be_nonzero(o)) return true;
        if (!prepared) {
            hw.prepare();
            prepared = true;
        }
        batch.push_back(o);
        if (batch.size() >= opt.batch) flush();
        return !full;
    });
    flush();

    std::size_t modrank = 0;
    bool agreed = true;
    for (const auto& b : mod) {
        if (b.rank() != mod[0].rank()) agreed = false;
        modrank = std::max(modrank, b.rank());
    }
    if (modrank == d) {
        res.value = d;
        res.method = res.rows_nonzero ? "modular, full" : "structural zero";
    } else if (res.rows_nonzero == 0) {
        res.value = 0;
        res.method = "structural zero";
    } else if (opt.exact) {
        IntRowBasis ib(d);
        for (const auto& r : kept) {
            std::vector<Integer> v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = Integer(static_cast<long>(r[j]));
            ib.insert(std::move(v));
            if (ib.rank() == d) break;
        }
        if (ib.rank() < modrank) throw consistency_error("exact rank below modular rank");
        res.value = ib.rank();
        res.method = "exact";
    } else {
        res.value = modrank;
        res.certified = false;
        res.method = agreed ? "modular, primes agree" : "modular, primes disagree";
    }
    if (opt.progress)
        opt.progress("m^" + la.str() + "_{" + std::to_string(n) + "," + std::to_string(m) + "} = " +
                     std::to_string(res.value) + " (" + res.method + ", " + std::to_string(res.rows_nonzero) + "/" +
                     std::to_string(res.rows_visited) + " rows)");
    return res;
}

inline std::uint64_t multiplicity(int n, int m, const Partition& la, const MultiplicityOptions& opt = {}) {
    return multiplicity_detailed(n, m, la, opt).value;
}

// Reference implementation: full expansion of every b_T(y) P_O as a
// polynomial in the y's, exact rank over all words that appear.
inline std::uint64_t multiplicity_by_expansion(int n, int m, const Partition& la) {
    Tableau t = canonical_tableau(la);
    std::map<Word, std::uint32_t> index;
    std::vector<SparseMatrix<Rational>::Row> rows;
    for_each_ordered_partition(n, m, [&](const OrderedPartition& o) {
        auto img = highest_weight_image(t, build_PO(o));
        SparseMatrix<Rational>::Row r;
        for (const auto& [w, c] : img.terms()) {
            auto it = index.try_emplace(w, static_cast<std::uint32_t>(index.size())).first;
            r.emplace_back(it->second, c);
        }
        rows.push_back(std::move(r));
    });
    SparseMatrix<Rational> M(index.size());
    for (auto& r : rows) M.add_row(std::move(r));
    return rank_exact(M);
}

// Reference implementation in the group algebra: dim e_T W = rank{e_T P_O}.
inline std::uint64_t multiplicity_in_group_algebra(int n, int m, const Partition& la) {
    auto e = young_symmetrizer(canonical_tableau(la));
    SparseMatrix<Rational> M(factorial(m));
    for_each_ordered_partition(n, m, [&](const OrderedPartition& o) {
        SparseMatrix<Rational>::Row r;
        auto prod = multiply(e, build_PO(o));
        for (const auto& [k, c] : prod.terms())
            r.emplace_back(static_cast<std::uint32_t>(Permutation::unpack(m, k).rank()), c);
        M.add_row(std::move(r));
    });
    return rank_exact(M);
}

inline Decomposition decompose_W(int n, int m, bool prune = true, const MultiplicityOptions& opt = {},
                                 std::vector<MultiplicityResult>* details = nullptr) {
    if (n < 1 || n > m) throw std::invalid_argument("decompose_W requires 1 <= n <= m");
    const int K = m - n;
    Decomposition d(m);
    for (const auto& la : partitions_of(m)) {
        MultiplicityResult r;
        if (prune && la.length() > 2 * K + 1) {
            r.shape = la;
            r.irrep_dim = irrep_dim(la);
            r.pruned = true;
            r.method = "pruned";
        } else {
            r = multiplicity_detailed(n, m, la, opt);
        }
        d.add(la, r.value);
        if (details) details->push_back(r);
    }
    return d;
}

enum class DimMethod { direct, via_multiplicities, both };

struct DimResult {
    Integer value = 0;
    bool certified = true;
    std::optional<RankResult> direct;
    std::optional<Decomposition> decomposition;
};

inline DimResult dim_W(int n, int m, DimMethod method = DimMethod::via_multiplicities,
                       const MultiplicityOptions& opt = {}, const RankPolicy& policy = {}) {
    if (n < 1 || n > m) throw std::invalid_argument("dim_W requires 1 <= n <= m");
    DimResult out;
    if (method != DimMethod::direct) {
        std::vector<MultiplicityResult> details;
        out.decomposition = decompose_W(n, m, true, opt, &details);
        out.value = out.decomposition->dimension();
        for (const auto& r : details) out.certified = out.certified && r.certified;
    }
    if (method != DimMethod::via_multiplicities) {
        RankPolicy p = policy;
        if (method == DimMethod::both) p.primes = 1;
        out.direct = spanning_dimension(n, m, p);
        if (method == DimMethod::direct) {
            out.value = static_cast<unsigned long>(out.direct->rank);
            out.certified = out.direct->certified;
        } else if (Integer(static_cast<unsigned long>(out.direct->rank)) != out.value) {
            // A modular value can only fall short at an unlucky prime: retry with more primes.
            p.primes = std::max(3, policy.primes);
            p.seed = policy.seed + 1;
            out.direct = spanning_dimension(n, m, p);
            if (Integer(static_cast<unsigned long>(out.direct->rank)) != out.value)
                throw consistency_error("dim_W(" + std::to_string(n) + "," + std::to_string(m) +
                                        "): direct rank " + std::to_string(out.direct->rank) +
                                        " differs from multiplicity sum " + out.value.get_str());
        }
    }
    return out;
}

struct ProbeResult {
    std::optional<int> degree;
    std::vector<std::pair<int, Integer>> dims;  // (m, dim W_{n,m}) for the scanned m
};

// Smallest m <= m_max with dim W_{n,m} = m!. Uses the direct spanning rank up
// to its cap and the highest-weight decomposition beyond it.
inline ProbeResult nilpotency_probe(int n, std::optional<int> m_max = std::nullopt, const MultiplicityOptions& opt = {},
                                    const RankPolicy& policy = {}) {
    if (n < 1) throw std::invalid_argument("nilpotency_probe requires n >= 1");
    ProbeResult out;
    int top = m_max.value_or(n * n);
    for (int m = 1; m <= top; ++m) {
        Integer dim = 0;
        if (m >= n) {
            if (m <= default_direct_cap) {
                auto r = spanning_dimension(n, m, policy);
                dim = static_cast<unsigned long>(r.rank);
                if (!r.certified && dim != factorial_z(m)) dim = dim_W(n, m, DimMethod::via_multiplicities, opt).value;
            } else {
                dim = dim_W(n, m, DimMethod::via_multiplicities, opt).value;
            }
        }
        out.dims.emplace_back(m, dim);
        if (opt.progress) opt.progress("dim W_{" + std::to_string(n) + "," + std::to_string(m) + "} = " + dim.get_str());
        if (dim == factorial_z(m)) {
            out.degree = m;
            return out;
        }
    }
    return out;
}

} // namespace tideal
