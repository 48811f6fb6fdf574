#pragma once

// The group algebra F[S_m], identified with the multilinear polynomials V_m:
// the permutation t stands for the monomial x_{t(1)} ... x_{t(m)}.

#include "combinatorics.hpp"
#include "permutation.hpp"

#include <map>
#include <unordered_map>

namespace tideal {

template <class Coeff = Rational>
class AlgebraElement {
public:
    using Map = std::unordered_map<std::uint64_t, Coeff>;

    AlgebraElement() = default;
    explicit AlgebraElement(int m) : m_(m) {
        if (m > 16) throw std::out_of_range("AlgebraElement supports m <= 16");
    }
    static AlgebraElement basis(const Permutation& p, Coeff c = Coeff(1)) {
        AlgebraElement e(p.degree());
        e.add(p, c);
        return e;
    }
    static AlgebraElement one(int m) { return basis(Permutation::identity(m)); }

    int degree() const { return m_; }
    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(const Permutation& p) const {
        auto it = terms_.find(p.pack());
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(const Permutation& p, const Coeff& c) {
        if (p.degree() != m_) throw degree_mismatch("term degree differs from element degree");
        add_packed(p.pack(), c);
    }
    void add_packed(std::uint64_t key, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_packed(k, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_packed(k, -c);
        return *this;
    }
    AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(*this) += o; }
    AlgebraElement operator-(const AlgebraElement& o) const { return AlgebraElement(*this) -= o; }
    AlgebraElement scaled(const Coeff& s) const {
        AlgebraElement r(m_);
        if (s == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }

    bool operator==(const AlgebraElement& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    // Terms ordered by permutation rank.
    std::vector<std::pair<Permutation, Coeff>> sorted_terms() const {
        std::vector<std::pair<Permutation, Coeff>> v;
        for (const auto& [k, c] : terms_) v.emplace_back(Permutation::unpack(m_, k), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first.rank() < b.first.rank(); });
        return v;
    }

    // Polynomial form, e.g. "x1x2x3 - x3x2x1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : sorted_terms()) {
            Coeff a = c;
            bool neg = a < 0;
            if (neg) a = -a;
            s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (a != 1) s += to_string(a) + "*";
            for (int x : p.images()) s += "x" + std::to_string(x);
            first = false;
        }
        return s;
    }

    // One "rank coefficient [images]" line per term.
    std::string dump() const {
        std::string s;
        for (const auto& [p, c] : sorted_terms())
            s += std::to_string(p.rank()) + " " + to_string(c) + " " + p.str() + "\n";
        return s;
    }

    void check(const AlgebraElement& o) const {
        if (m_ != o.m_) throw degree_mismatch("algebra elements of different degree");
    }

private:
    int m_ = 0;
    Map terms_;
};

namespace detail {
inline std::uint64_t compose_packed(std::uint64_t a, std::uint64_t b, int m) {
    std::uint64_t r = 0;
    for (int i = 0; i < m; ++i) {
        std::uint64_t bi = (b >> (4 * i)) & 0xF;
        r |= ((a >> (4 * bi)) & 0xF) << (4 * i);
    }
    return r;
}
} // namespace detail

// x_{t(1)}...x_{t(m)} -> x_{st(1)}...x_{st(m)}
template <class C>
AlgebraElement<C> act_left(const Permutation& s, const AlgebraElement<C>& f) {
    if (s.degree() != f.degree()) throw degree_mismatch("act_left: degree mismatch");
    AlgebraElement<C> r(f.degree());
    std::uint64_t sk = s.pack();
    for (const auto& [k, c] : f.terms()) r.add_packed(detail::compose_packed(sk, k, f.degree()), c);
    return r;
}

// Permutes places: x_{i_1}...x_{i_m} -> x_{i_s(1)}...x_{i_s(m)}
template <class C>
AlgebraElement<C> act_right(const AlgebraElement<C>& f, const Permutation& s) {
    if (s.degree() != f.degree()) throw degree_mismatch("act_right: degree mismatch");
    AlgebraElement<C> r(f.degree());
    std::uint64_t sk = s.pack();
    for (const auto& [k, c] : f.terms()) r.add_packed(detail::compose_packed(k, sk, f.degree()), c);
    return r;
}

template <class C>
AlgebraElement<C> multiply(const AlgebraElement<C>& f, const AlgebraElement<C>& g) {
    f.check(g);
    int m = f.degree();
    AlgebraElement<C> r(m);
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) r.add_packed(detail::compose_packed(a, b, m), ca * cb);
    return r;
}

template <class C = Rational>
AlgebraElement<C> row_symmetrizer(const Tableau& t) {
    AlgebraElement<C> r(t.size());
    for_each_in_young_subgroup(t.size(), t.rows(), [&](const Permutation& p, int) { r.add(p, C(1)); });
    return r;
}

template <class C = Rational>
AlgebraElement<C> column_symmetrizer(const Tableau& t) {
    AlgebraElement<C> r(t.size());
    for_each_in_young_subgroup(t.size(), t.columns(), [&](const Permutation& p, int sign) { r.add(p, C(sign)); });
    return r;
}

template <class C = Rational>
AlgebraElement<C> young_symmetrizer(const Tableau& t) {
    return multiply(row_symmetrizer<C>(t), column_symmetrizer<C>(t));
}

// beta with e_T^2 = beta e_T; throws consistency_error if e_T^2 is not proportional.
inline Rational idempotent_scalar(const Tableau& t) {
    auto e = young_symmetrizer(t);
    if (e.is_zero()) throw std::invalid_argument("idempotent_scalar: e_T is zero");
    auto e2 = multiply(e, e);
    const auto& [k, c] = *e.terms().begin();
    auto it = e2.terms().find(k);
    Rational beta = it == e2.terms().end() ? Rational(0) : Rational(it->second / c);
    if (!(e2 == e.scaled(beta))) throw consistency_error("e_T^2 is not proportional to e_T");
    return beta;
}

inline Tableau relabel(const Permutation& s, const Tableau& t) {
    auto rows = t.rows();
    for (auto& r : rows)
        for (auto& x : r) x = s(x);
    return Tableau(std::move(rows));
}

inline bool conjugate_tableau_check(const Permutation& s, const Tableau& t) {
    if (s.degree() != t.size()) throw degree_mismatch("conjugate_tableau_check: degree mismatch");
    auto lhs = act_right(act_left(s, young_symmetrizer(t)), s.inverse());
    return lhs == young_symmetrizer(relabel(s, t));
}

} // namespace tideal
