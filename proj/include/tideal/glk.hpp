#pragma once

// Characters of polynomial GL_k representations, kept as symmetric
// polynomials in the monomial basis, and the multiplicity upper bounds
// obtained from symmetric powers of the free algebra.

#include "parallel.hpp"
#include "representation.hpp"

#include <map>
#include <mutex>

namespace tideal {

class SymmetricFunction {
public:
    using Map = std::map<Partition, Rational, CanonicalOrder>;

    SymmetricFunction() = default;
    explicit SymmetricFunction(int k) : k_(k) {}
    static SymmetricFunction constant(int k, const Rational& c) {
        SymmetricFunction f(k);
        f.add(Partition(), c);
        return f;
    }

    int nvars() const { return k_; }
    const Map& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational operator[](const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(const Partition& p, const Rational& c) {
        if (p.length() > k_) throw std::invalid_argument("monomial " + p.str() + " needs more than k variables");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SymmetricFunction& operator+=(const SymmetricFunction& o) {
        check(o);
        for (const auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }
    SymmetricFunction& operator-=(const SymmetricFunction& o) {
        check(o);
        for (const auto& [p, c] : o.coeffs_) add(p, -c);
        return *this;
    }
    SymmetricFunction operator+(const SymmetricFunction& o) const { return SymmetricFunction(*this) += o; }
    SymmetricFunction operator-(const SymmetricFunction& o) const { return SymmetricFunction(*this) -= o; }
    SymmetricFunction scaled(const Rational& s) const {
        SymmetricFunction r(k_);
        for (const auto& [p, c] : coeffs_) r.add(p, c * s);
        return r;
    }
    bool operator==(const SymmetricFunction& o) const { return k_ == o.k_ && coeffs_ == o.coeffs_; }

    // Coefficient of x^lambda in f g is the sum over exponent vectors a <= lambda
    // of f[sort a] g[sort(lambda - a)].
    SymmetricFunction operator*(const SymmetricFunction& o) const {
        check(o);
        std::map<int, std::vector<const std::pair<const Partition, Rational>*>> fdeg, gdeg;
        for (const auto& e : coeffs_) fdeg[e.first.size()].push_back(&e);
        for (const auto& e : o.coeffs_) gdeg[e.first.size()].push_back(&e);
        SymmetricFunction r(k_);
        for (const auto& [a, fl] : fdeg)
            for (const auto& [b, gl] : gdeg) {
                for (const auto& la : partitions_of(a + b, k_)) {
                    std::vector<int> lam(k_, 0), alpha(k_, 0);
                    for (int i = 0; i < la.length(); ++i) lam[i] = la[i];
                    Rational sum = 0;
                    auto rec = [&](auto&& self, int i, int left) -> void {
                        if (i == k_) {
                            if (left) return;
                            std::vector<int> beta(k_);
                            for (int j = 0; j < k_; ++j) beta[j] = lam[j] - alpha[j];
                            Rational x = (*this)[Partition::from_unsorted(alpha)];
                            if (x == 0) return;
                            Rational y = o[Partition::from_unsorted(beta)];
                            if (y != 0) sum += x * y;
                            return;
                        }
                        for (int v = 0; v <= std::min(lam[i], left); ++v) {
                            alpha[i] = v;
                            self(self, i + 1, left - v);
                        }
                        alpha[i] = 0;
                    };
                    rec(rec, 0, a);
                    r.add(la, sum);
                }
            }
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : coeffs_) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += c.get_str() + "*";
            s += "m" + p.str();
        }
        return s;
    }

    void check(const SymmetricFunction& o) const {
        if (k_ != o.k_) throw std::invalid_argument("symmetric functions in different numbers of variables");
    }

private:
    int k_ = 1;
    Map coeffs_;
};

// Number of semistandard tableaux of shape lambda and content mu (any order),
// by peeling off the largest letter as a horizontal strip.
inline Integer kostka(const Partition& la, const std::vector<int>& content) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
    std::vector<int> c = content;
    while (!c.empty() && c.back() == 0) c.pop_back();
    int total = 0;
    for (int x : c) total += x;
    if (total != la.size()) return 0;
    if (la.size() == 0) return 1;
    if (la.length() > static_cast<int>(c.size())) return 0;
    auto key = std::make_pair(la.parts(), c);
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int strip = c.back();
    std::vector<int> rest(c.begin(), c.end() - 1);
    Integer sum = 0;
    std::vector<int> nu(la.length());
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == la.length()) {
            if (left == 0) sum += kostka(Partition::from_unsorted(nu), rest);
            return;
        }
        int lo = i + 1 < la.length() ? la[i + 1] : 0;
        for (int v = la[i]; v >= lo && la[i] - v <= left; --v) {
            nu[i] = v;
            self(self, i + 1, left - (la[i] - v));
        }
    };
    rec(rec, 0, strip);
    std::lock_guard lock(mu);
    memo.emplace(key, sum);
    return sum;
}

inline SymmetricFunction schur_function(const Partition& la, int k) {
    SymmetricFunction f(k);
    if (la.length() > k) return f;
    for (const auto& mu : partitions_of(la.size(), k)) f.add(mu, Rational(kostka(la, mu.parts())));
    return f;
}

inline SymmetricFunction complete_homogeneous(int d, int k) {
    SymmetricFunction f(k);
    for (const auto& mu : partitions_of(d, k)) f.add(mu, 1);
    return f;
}

// Expansion in Schur functions by repeatedly removing the leading term.
inline Decomposition schur_expand(const SymmetricFunction& f) {
    int deg = -1;
    for (const auto& [p, c] : f.coefficients()) {
        if (deg >= 0 && p.size() != deg) throw std::invalid_argument("schur_expand: input is not homogeneous");
        deg = p.size();
    }
    Decomposition out(std::max(deg, 0));
    SymmetricFunction rest = f;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.coefficients().begin();
        if (c < 0 || c.get_den() != 1)
            throw consistency_error("schur_expand: coefficient " + c.get_str() + " at " + lead.str() +
                                    " is not a nonnegative integer");
        Partition la = lead;
        Integer mult = c.get_num();
        out.add(la, mult.get_ui());
        rest -= schur_function(la, f.nvars()).scaled(Rational(mult));
    }
    return out;
}

// Weight vectors (length k) of the semistandard tableaux of shape mu.
inline std::vector<std::vector<int>> weights_of(const Partition& mu, int k) {
    std::vector<std::vector<int>> out;
    if (mu.length() > k) return out;
    std::vector<std::vector<int>> t(mu.length());
    for (int i = 0; i < mu.length(); ++i) t[i].assign(mu[i], 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) cells.emplace_back(i, j);
    std::vector<int> w(k, 0);
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == cells.size()) {
            out.push_back(w);
            return;
        }
        auto [i, j] = cells[ci];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= k; ++v) {
            t[i][j] = v;
            ++w[v - 1];
            self(self, ci + 1);
            --w[v - 1];
        }
    };
    rec(rec, 0);
    return out;
}

// Character of Sym^a(V^mu) by enumerating size-a multisets of weights.
inline SymmetricFunction sym_power_character(const Partition& mu, int a, int k,
                                             std::size_t guard = 50'000'000) {
    if (mu == Partition{1}) return complete_homogeneous(a, k);
    auto ws = weights_of(mu, k);
    Integer count = binomial_z(static_cast<long>(ws.size()) + a - 1, a);
    if (count > Integer(static_cast<unsigned long>(guard)))
        throw cap_exceeded("symmetric power character needs " + count.get_str() + " multisets");
    std::map<std::vector<int>, Integer> tally;
    std::vector<int> sum(k, 0);
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            if (std::is_sorted(sum.begin(), sum.end(), std::greater<>())) tally[sum] += 1;
            return;
        }
        for (std::size_t i = from; i < ws.size(); ++i) {
            for (int j = 0; j < k; ++j) sum[j] += ws[i][j];
            self(self, i, left - 1);
            for (int j = 0; j < k; ++j) sum[j] -= ws[i][j];
        }
    };
    rec(rec, 0, a);
    SymmetricFunction f(k);
    for (const auto& [w, c] : tally) f.add(Partition::from_unsorted(w), Rational(c));
    return f;
}

// Shapes obtained from lambda by adding l boxes, no two in one column.
inline Decomposition young_rule(int l, const Partition& la) {
    if (l < 0) throw std::invalid_argument("young_rule: l must be nonnegative");
    Decomposition out(la.size() + l);
    int len = la.length() + 1;
    std::vector<int> nu(len);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == len) {
            if (left == 0) out.add(Partition::from_unsorted(nu), 1);
            return;
        }
        int hi = i == 0 ? la[0] + left : la[i - 1];
        for (int v = la[i]; v <= hi && v - la[i] <= left; ++v) {
            nu[i] = v;
            self(self, i + 1, left - (v - la[i]));
        }
    };
    rec(rec, 0, l);
    return out;
}

// One tensor product of symmetric powers of irreducible summands of the free
// algebra. A shape may occur more than once: [A_k]^(d) holds d_lambda copies
// of V^lambda, each a separate slot. `weight` counts the labeled slot choices
// merged into this descriptor.
struct SummandDescriptor {
    std::vector<std::pair<Partition, int>> factors;
    int sym_power = 0;
    int degree = 0;
    Integer weight = 1;

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ", ";
            s += "V^" + factors[i].first.str() + " ^" + std::to_string(factors[i].second);
        }
        s += "}";
        if (weight != 1) s += " x" + weight.get_str();
        return s;
    }
};

// All descriptors with sum of powers n and total degree m, over summands of
// [A_k]^(d) for d = 1 .. m-n+1.
inline std::vector<SummandDescriptor> sym_power_component(int k, int n, int m) {
    std::vector<SummandDescriptor> out;
    if (n < 0 || m < n) return out;
    std::vector<std::pair<Partition, std::uint64_t>> irreps;
    for (int d = 1; d <= m - n + 1; ++d)
        for (const auto& la : partitions_of(d, k)) irreps.emplace_back(la, irrep_dim(la));
    SummandDescriptor cur;
    // For irrep i choose a weakly decreasing list of positive powers of length <= slots.
    auto rec = [&](auto&& self, std::size_t i, int pw_left, int deg_left) -> void {
        if (pw_left == 0 && deg_left == 0) {
            out.push_back(cur);
            return;
        }
        if (i == irreps.size() || pw_left <= 0) return;
        const auto& [la, slots] = irreps[i];
        int d = la.size();
        std::vector<int> powers;
        auto choose = [&](auto&& me, int max_pow, int pl, int dl) -> void {
            // Record the current list of powers for this irrep and recurse.
            {
                auto saved = cur;
                // slots! / ((slots - t)! * prod rep!) ways to place the powers
                Integer w = 1;
                for (std::size_t t = 0; t < powers.size(); ++t) w *= Integer(static_cast<unsigned long>(slots - t));
                std::map<int, int> reps;
                for (int a : powers) ++reps[a];
                for (const auto& [a, r] : reps) w /= factorial_z(r);
                for (int a : powers) cur.factors.emplace_back(la, a);
                cur.weight *= w;
                self(self, i + 1, pl, dl);
                cur = saved;
            }
            if (powers.size() >= slots) return;
            for (int a = std::min(max_pow, pl); a >= 1; --a) {
                if (a * d > dl) continue;
                powers.push_back(a);
                me(me, a, pl - a, dl - a * d);
                powers.pop_back();
            }
        };
        choose(choose, pw_left, pw_left, deg_left);
    };
    rec(rec, 0, n, m);
    for (auto& s : out) {
        s.sym_power = n;
        s.degree = m;
        std::sort(s.factors.begin(), s.factors.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            if (a.first != b.first) return CanonicalOrder()(a.first, b.first);
            return a.second > b.second;
        });
    }
    return out;
}

inline SymmetricFunction character_of_descriptor(const SummandDescriptor& d, int k) {
    SymmetricFunction f = SymmetricFunction::constant(k, 1);
    for (const auto& [mu, a] : d.factors) f = f * sym_power_character(mu, a, k);
    return f;
}

struct MLemmaSummand {
    int c = 0;              // power of the V^(1) factor
    SummandDescriptor rest;  // factors of degree >= 2
};

inline std::vector<MLemmaSummand> m_lemma_summands(int k, int K) {
    std::vector<MLemmaSummand> out;
    for (const auto& s : sym_power_component(k, K, 2 * K)) {
        MLemmaSummand ms;
        ms.rest.weight = s.weight;
        for (const auto& [mu, a] : s.factors) {
            if (mu == Partition{1}) {
                ms.c = a;
            } else {
                ms.rest.factors.emplace_back(mu, a);
                ms.rest.sym_power += a;
                ms.rest.degree += a * mu.size();
            }
        }
        out.push_back(std::move(ms));
    }
    return out;
}

// Decomposition of [A_k^{(x)s n}]^{(n+K)}: sum of h_{n-K+c} char(M) over the
// degree-2K summands split off their V^(1) power. Bounds m^lambda_{n,n+K} from above.
inline Decomposition multiplicity_upper_bounds(int K, int n, std::optional<int> nvars = std::nullopt,
                                               int workers = 1) {
    if (n < K) throw std::invalid_argument("multiplicity_upper_bounds requires n >= K");
    int k = nvars.value_or(2 * K + 2);
    auto summands = m_lemma_summands(k, K);
    std::vector<SymmetricFunction> terms(summands.size(), SymmetricFunction(k));
    parallel_for(summands.size(), workers, [&](std::size_t i) {
        const auto& s = summands[i];
        terms[i] = (complete_homogeneous(n - K + s.c, k) * character_of_descriptor(s.rest, k))
                       .scaled(Rational(s.rest.weight));
    });
    SymmetricFunction total(k);
    for (const auto& t : terms) total += t;
    return schur_expand(total);
}

} // namespace tideal
