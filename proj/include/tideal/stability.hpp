#pragma once

// Stabilization of W_{n,n+K} in n, and coefficient analysis of P^(s):
// central runs of y1, the interleaving sums F_s and polynomiality in s.

#include "decomposition.hpp"
#include "polynomial.hpp"
#include "substitution.hpp"

#include <chrono>

namespace tideal {

struct CentralPart {
    int start = 0;  // 1-based position of the first letter of the run
    int length = 0;
    bool operator==(const CentralPart&) const = default;
};

// Leftmost among the longest runs of y1.
inline std::optional<CentralPart> central_part(const Word& u) {
    std::optional<CentralPart> best;
    for (int i = 0; i < u.size();) {
        if (u[i] != 1) {
            ++i;
            continue;
        }
        int j = i;
        while (j < u.size() && u[j] == 1) ++j;
        if (!best || j - i > best->length) best = CentralPart{i + 1, j - i};
        i = j;
    }
    return best;
}

// s copies of y1 inserted before the central run.
inline Word shift_word(const Word& u, int s) {
    auto c = central_part(u);
    if (!c) throw std::invalid_argument("shift_word: " + u.str() + " has no y1");
    std::vector<int> l = u.letters;
    l.insert(l.begin() + (c->start - 1), s, 1);
    return Word(std::move(l));
}

// Sum over a_0 + ... + a_r = s of y1^{a_0} m_1 y1^{a_1} ... m_r y1^{a_r}.
inline YPolynomial<Rational> F_s(const std::vector<Word>& ms, int s) {
    YPolynomial<Rational> out;
    std::vector<int> a(ms.size() + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == ms.size()) {
            a[i] = left;
            std::vector<int> w;
            for (std::size_t j = 0; j <= ms.size(); ++j) {
                w.insert(w.end(), a[j], 1);
                if (j < ms.size()) w.insert(w.end(), ms[j].letters.begin(), ms[j].letters.end());
            }
            out.add(Word(std::move(w)), 1);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, s);
    return out;
}

// Number of ways to read u as y1^{a_0} m_1 y1^{a_1} ... m_r y1^{a_r}, i.e. the
// coefficient of u in F_{|u| - sum |m_i|}(m_1, ..., m_r).
inline Integer interleaving_count(const std::vector<Word>& ms, const Word& u) {
    const int L = u.size();
    // ways[p]: parses of the prefix of length p ending right after block i.
    std::vector<Integer> ways(L + 1, 0), next(L + 1);
    ways[0] = 1;
    auto spread = [&](std::vector<Integer>& w) {
        for (int p = 1; p <= L; ++p)
            if (u[p - 1] == 1) w[p] += w[p - 1];
    };
    spread(ways);
    for (const auto& m : ms) {
        std::fill(next.begin(), next.end(), 0);
        for (int p = 0; p + m.size() <= L; ++p) {
            if (ways[p] == 0) continue;
            if (std::equal(m.letters.begin(), m.letters.end(), u.letters.begin() + p)) next[p + m.size()] += ways[p];
        }
        spread(next);
        ways.swap(next);
    }
    return ways[L];
}

// P_n over words: sum over all orderings of the arguments of their concatenation.
inline YPolynomial<Rational> symmetric_poly_words(const std::vector<Word>& args) {
    std::vector<int> order(args.size());
    std::iota(order.begin(), order.end(), 0);
    YPolynomial<Rational> out;
    do {
        Word w;
        for (int i : order) w = w + args[i];
        out.add(w, 1);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

// P^(s) = P_{r+s}(m_1, ..., m_r, y1, ..., y1), expanded directly.
inline YPolynomial<Rational> p_shifted(const std::vector<Word>& ms, int s) {
    auto args = ms;
    for (int i = 0; i < s; ++i) args.push_back(Word{1});
    return symmetric_poly_words(args);
}

// s! times the sum over orderings of F_s: the right-hand side of the P^(s) identity.
inline YPolynomial<Rational> p_shifted_via_F(const std::vector<Word>& ms, int s) {
    std::vector<int> order(ms.size());
    std::iota(order.begin(), order.end(), 0);
    YPolynomial<Rational> out;
    do {
        std::vector<Word> perm;
        for (int i : order) perm.push_back(ms[i]);
        out += F_s(perm, s);
    } while (std::next_permutation(order.begin(), order.end()));
    return out.scaled(Rational(factorial_z(s)));
}

inline bool p_shifted_identity_check(const std::vector<Word>& ms, int s) {
    return p_shifted(ms, s) == p_shifted_via_F(ms, s);
}

// Coef_u(P^(t)) / t! with t = |u| - sum |m_i|; zero if t < 0.
inline Integer normalized_coefficient(const std::vector<Word>& ms, const Word& u) {
    int total = 0;
    for (const auto& m : ms) total += m.size();
    if (u.size() < total) return 0;
    std::vector<int> order(ms.size());
    std::iota(order.begin(), order.end(), 0);
    Integer sum = 0;
    do {
        std::vector<Word> perm;
        for (int i : order) perm.push_back(ms[i]);
        sum += interleaving_count(perm, u);
    } while (std::next_permutation(order.begin(), order.end()));
    return sum;
}

struct CoeffPolyFit {
    std::vector<std::pair<int, Integer>> samples;  // (s, c(s))
    RationalPolynomial polynomial;
    bool residual = false;
    int offset = 0;  // |u| - sum |m_i|: P^(s + offset) carries u^(s)
};

// c(s) = Coef_{u^(s)}(P^(s+offset)) / (s+offset)! for s = 0..s_max. The fit uses
// s = 0..s_max-2 and must predict the last two samples.
inline CoeffPolyFit coefficient_polynomial(const std::vector<Word>& ms, const Word& u, int s_max) {
    if (!central_part(u)) throw std::invalid_argument("coefficient_polynomial: " + u.str() + " has no y1");
    if (s_max < 0) throw std::invalid_argument("coefficient_polynomial: s_max must be nonnegative");
    CoeffPolyFit fit;
    int total = 0;
    for (const auto& m : ms) total += m.size();
    fit.offset = u.size() - total;
    for (int s = 0; s <= s_max; ++s) fit.samples.emplace_back(s, normalized_coefficient(ms, shift_word(u, s)));
    std::size_t prefix = s_max >= 2 ? static_cast<std::size_t>(s_max - 1) : fit.samples.size();
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t i = 0; i < prefix; ++i) pts.emplace_back(fit.samples[i].first, Rational(fit.samples[i].second));
    fit.polynomial = RationalPolynomial::interpolate(pts, "s");
    for (std::size_t i = prefix; i < fit.samples.size(); ++i)
        if (fit.polynomial(fit.samples[i].first) != Rational(fit.samples[i].second)) fit.residual = true;
    return fit;
}

// Smallest central-run length over the monomials of P^(d).
inline int min_central_run(const std::vector<Word>& ms, int d) {
    int best = std::numeric_limits<int>::max();
    auto p = p_shifted_via_F(ms, d);
    for (const auto& [w, c] : p.terms()) {
        auto cp = central_part(w);
        best = std::min(best, cp ? cp->length : 0);
    }
    return best;
}

struct StabilizationReport {
    int K = 0;
    int n_min = 0;
    int n_max = 0;
    std::vector<int> ns;
    std::vector<Decomposition> decompositions;
    // derived[i][j] for j >= i: decomposition j is derived from decomposition i.
    std::vector<std::vector<bool>> derived;
    std::optional<int> n_obs;
    // Keyed by the partition with its first row removed.
    std::map<Partition, std::vector<std::uint64_t>, CanonicalOrder> families;
    std::vector<Partition> decreasing_families;
    bool incomplete = false;
    bool certified = true;
};

inline StabilizationReport stabilization_report(int K, int n_min, int n_max, const MultiplicityOptions& opt = {},
                                                std::optional<double> budget_seconds = std::nullopt) {
    if (K < 0 || n_min < std::max(K, 1) || n_max < n_min)
        throw std::invalid_argument("stabilization_report requires K >= 0 and max(K,1) <= n_min <= n_max");
    StabilizationReport r;
    r.K = K;
    r.n_min = n_min;
    r.n_max = n_max;
    auto start = std::chrono::steady_clock::now();
    for (int n = n_min; n <= n_max; ++n) {
        if (budget_seconds) {
            double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (used > *budget_seconds) {
                r.incomplete = true;
                break;
            }
        }
        std::vector<MultiplicityResult> details;
        r.decompositions.push_back(decompose_W(n, n + K, true, opt, &details));
        for (const auto& d : details) r.certified = r.certified && d.certified;
        r.ns.push_back(n);
        if (opt.progress) opt.progress("W_{" + std::to_string(n) + "," + std::to_string(n + K) + "} done");
    }
    std::size_t c = r.ns.size();
    r.derived.assign(c, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i; j < c; ++j) r.derived[i][j] = is_derived_decomposition(r.decompositions[j], r.decompositions[i]);
    for (std::size_t i = 0; i < c && !r.n_obs; ++i) {
        bool all = true;
        for (std::size_t j = i + 1; j < c; ++j) all = all && r.derived[i][j];
        if (all) r.n_obs = r.ns[i];
    }
    for (std::size_t i = 0; i < c; ++i)
        for (const auto& [la, mult] : r.decompositions[i].terms()) {
            auto& seq = r.families[la.tail()];
            seq.resize(c, 0);
            seq[i] = mult;
        }
    for (auto& [key, seq] : r.families) {
        seq.resize(c, 0);
        for (std::size_t i = 1; i < c; ++i)
            if (seq[i] < seq[i - 1]) {
                r.decreasing_families.push_back(key);
                break;
            }
    }
    return r;
}

} // namespace tideal
