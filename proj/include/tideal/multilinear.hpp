#pragma once

// Ordered partitions of [m] into n blocks and the spanning polynomials
// P_O = P_n(x_{A_1}, ..., x_{A_n}) of the multilinear consequences of x^n.

#include "exact_linalg.hpp"
#include "perm_algebra.hpp"

#include <functional>

namespace tideal {

class OrderedPartition {
public:
    OrderedPartition() = default;
    explicit OrderedPartition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
        std::vector<bool> seen;
        for (const auto& b : parts_) {
            if (b.empty()) throw std::invalid_argument("ordered partition blocks must be nonempty");
            m_ += static_cast<int>(b.size());
        }
        seen.assign(m_ + 1, false);
        for (const auto& b : parts_)
            for (int x : b) {
                if (x < 1 || x > m_ || seen[x]) throw std::invalid_argument("ordered partition must cover 1..m once");
                seen[x] = true;
            }
        std::sort(parts_.begin(), parts_.end(), [](const auto& a, const auto& b) {
            return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
        });
    }

    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int n() const { return static_cast<int>(parts_.size()); }
    int m() const { return m_; }
    Partition type() const {
        std::vector<int> s;
        for (const auto& b : parts_) s.push_back(static_cast<int>(b.size()));
        return Partition::from_unsorted(std::move(s));
    }

    bool operator==(const OrderedPartition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const OrderedPartition& o) const { return parts_ <=> o.parts_; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < parts_[i].size(); ++j) s += (j ? " " : "") + std::to_string(parts_[i][j]);
            s += "]";
        }
        return s + "}";
    }

    // "{[1 2],[3]}"
    static OrderedPartition parse(std::string_view text) {
        std::vector<std::vector<int>> parts;
        std::size_t pos = 0;
        std::string t(text);
        while ((pos = t.find('[', pos)) != std::string::npos) {
            auto close = t.find(']', pos);
            if (close == std::string::npos) throw parse_error("unterminated block: " + t);
            std::stringstream ss(t.substr(pos + 1, close - pos - 1));
            std::vector<int> b;
            int x;
            while (ss >> x) b.push_back(x);
            if (!ss.eof()) throw parse_error("bad block entry: " + t);
            parts.push_back(std::move(b));
            pos = close + 1;
        }
        try {
            return OrderedPartition(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }

private:
    std::vector<std::vector<int>> parts_;
    int m_ = 0;
};

// Visits every element of Omega_{n,m} once: set partitions in restricted
// growth order, then every ordering inside each block. Stops early when fn
// returns false; returns false in that case.
inline bool for_each_ordered_partition_until(int n, int m, const std::function<bool(const OrderedPartition&)>& fn,
                                             const std::optional<Partition>& shape = std::nullopt) {
    if (n < 1 || n > m) return true;
    if (shape && (shape->size() != m || shape->length() != n))
        throw std::invalid_argument("ordered partition shape must be a partition of m with n parts");
    std::vector<std::vector<int>> blocks;
    bool go = true;
    auto emit_orderings = [&] {
        if (shape) {
            std::vector<int> sz;
            for (const auto& b : blocks) sz.push_back(static_cast<int>(b.size()));
            if (Partition::from_unsorted(sz) != *shape) return;
        }
        std::vector<std::vector<int>> cur = blocks;
        auto rec = [&](auto&& self, std::size_t bi) -> void {
            if (bi == cur.size()) {
                if (go) go = fn(OrderedPartition(cur));
                return;
            }
            std::sort(cur[bi].begin(), cur[bi].end());
            do {
                self(self, bi + 1);
            } while (go && std::next_permutation(cur[bi].begin(), cur[bi].end()));
        };
        rec(rec, 0);
    };
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (!go || m - i < n - used) return;
        if (i == m) {
            if (used == n) emit_orderings();
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            if (b == used) blocks.emplace_back();
            blocks[b].push_back(i + 1);
            self(self, i + 1, std::max(used, b + 1));
            blocks[b].pop_back();
            if (b == used) blocks.pop_back();
        }
    };
    rec(rec, 0, 0);
    return go;
}

inline void for_each_ordered_partition(int n, int m, const std::function<void(const OrderedPartition&)>& fn,
                                       const std::optional<Partition>& shape = std::nullopt) {
    for_each_ordered_partition_until(n, m, [&](const OrderedPartition& o) {
        fn(o);
        return true;
    }, shape);
}

inline std::vector<OrderedPartition> enumerate_ordered_partitions(int n, int m,
                                                                  const std::optional<Partition>& shape = std::nullopt) {
    std::vector<OrderedPartition> out;
    for_each_ordered_partition(n, m, [&](const OrderedPartition& o) { out.push_back(o); }, shape);
    return out;
}

// C(m,n) (m-1)! / (n-1)!
inline Integer count_ordered_partitions(int n, int m) {
    if (n < 1 || n > m) return 0;
    return binomial_z(m, n) * factorial_z(m - 1) / factorial_z(n - 1);
}

inline OrderedPartition extend_ordered_partition(const OrderedPartition& o, int s) {
    auto parts = o.parts();
    for (int i = 1; i <= s; ++i) parts.push_back({o.m() + i});
    return OrderedPartition(std::move(parts));
}

// Calls fn(word) for each of the n! concatenations of the blocks.
template <class Fn>
void for_each_block_ordering(const std::vector<std::vector<int>>& blocks, Fn&& fn) {
    std::vector<int> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> word;
    do {
        word.clear();
        for (int b : order) word.insert(word.end(), blocks[b].begin(), blocks[b].end());
        fn(word);
    } while (std::next_permutation(order.begin(), order.end()));
}

// P_n over the given blocks of variables, which must use x_1..x_m exactly once.
template <class C = Rational>
AlgebraElement<C> symmetric_poly(const std::vector<std::vector<int>>& blocks) {
    int m = 0;
    for (const auto& b : blocks) m += static_cast<int>(b.size());
    std::vector<bool> seen(m + 1, false);
    for (const auto& b : blocks)
        for (int x : b) {
            if (x < 1 || x > m) throw std::invalid_argument("symmetric_poly: missing variable index");
            if (seen[x]) throw std::invalid_argument("symmetric_poly: repeated variable index");
            seen[x] = true;
        }
    AlgebraElement<C> r(m);
    for_each_block_ordering(blocks, [&](const std::vector<int>& w) { r.add(Permutation(w), C(1)); });
    return r;
}

template <class C = Rational>
AlgebraElement<C> build_PO(const OrderedPartition& o) {
    return symmetric_poly<C>(o.parts());
}

inline OrderedPartition act_on_ordered_partition(const Permutation& s, const OrderedPartition& o) {
    auto parts = o.parts();
    for (auto& b : parts)
        for (auto& x : b) x = s(x);
    return OrderedPartition(std::move(parts));
}

inline std::uint32_t rank_of_word(const std::vector<int>& w) {
    std::uint32_t r = 0;
    int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i) {
        int c = 0;
        for (int j = i + 1; j < m; ++j)
            if (w[j] < w[i]) ++c;
        r = r * static_cast<std::uint32_t>(m - i) + static_cast<std::uint32_t>(c);
    }
    return r;
}

using SpanningMatrix = SparseMatrix<long>;

// Row per O in enumeration order; columns are permutation ranks.
inline SpanningMatrix build_spanning_matrix(int n, int m) {
    if (m > 12) throw cap_exceeded("spanning matrix columns exceed 12!");
    SpanningMatrix M(factorial(m));
    for_each_ordered_partition(n, m, [&](const OrderedPartition& o) {
        SpanningMatrix::Row row;
        for_each_block_ordering(o.parts(), [&](const std::vector<int>& w) { row.emplace_back(rank_of_word(w), 1L); });
        M.add_row(std::move(row));
    });
    return M;
}

struct RankPolicy {
    int primes = 2;
    bool force_exact = false;
    // Exact elimination is attempted automatically up to this many matrix cells.
    std::size_t exact_cell_limit = 400000;
    std::uint64_t seed = 0x5eed;
};

struct RankResult {
    std::size_t rank = 0;
    bool certified = false;
    std::string method;
};

// Modular lower bound, certified by the trivial upper bound min(rows, cols)
// or, when that does not match, by an exact run within the size limit.
template <class T>
RankResult certified_rank(const SparseMatrix<T>& M, const RankPolicy& policy) {
    std::size_t upper = std::min(M.nrows(), M.ncols());
    if (!policy.force_exact) {
        auto mr = rank_modular(M, policy.primes, policy.seed);
        if (mr.lower_bound == upper) return {mr.lower_bound, true, "modular, full rank"};
        if (M.nrows() * M.ncols() > policy.exact_cell_limit)
            return {mr.lower_bound, false, mr.agreed ? "modular, primes agree" : "modular, primes disagree"};
    }
    return {rank_exact(M), true, "exact"};
}

inline constexpr int default_direct_cap = 8;

inline RankResult spanning_dimension(int n, int m, const RankPolicy& policy = {}, int cap = default_direct_cap) {
    if (n < 1 || n > m) throw std::invalid_argument("spanning_dimension requires 1 <= n <= m");
    if (m > cap)
        throw cap_exceeded("direct spanning rank is capped at m = " + std::to_string(cap) +
                           "; use the highest-weight decomposition instead");
    return certified_rank(build_spanning_matrix(n, m), policy);
}

} // namespace tideal
