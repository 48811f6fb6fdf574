#pragma once

// Words over y_1..y_k, polynomials in them, substitutions x -> y,
// linearization back to V_m, and highest-weight images b_T(y) f.

#include "perm_algebra.hpp"

#include <map>

namespace tideal {

// Letters are 1-based y-indices.
struct Word {
    std::vector<int> letters;

    Word() = default;
    Word(std::initializer_list<int> l) : letters(l) {}
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    int operator[](std::size_t i) const { return letters[i]; }
    auto operator<=>(const Word&) const = default;

    Word operator+(const Word& o) const {
        Word r = *this;
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }

    static Word power(int letter, int e) { return Word(std::vector<int>(e, letter)); }

    // "y1 y2 y1^3"
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size();) {
            std::size_t j = i;
            while (j < letters.size() && letters[j] == letters[i]) ++j;
            if (!s.empty()) s += ' ';
            s += "y" + std::to_string(letters[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s.empty() ? "1" : s;
    }

    // Accepts "y1 y2 y1^3", "y1y2y1^3" and "1" for the empty word.
    static Word parse(std::string_view text) {
        Word w;
        std::size_t i = 0;
        auto num = [&](std::size_t& pos) {
            std::size_t st = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (st == pos) throw parse_error("expected a number in word: " + std::string(text));
            return std::stoi(std::string(text.substr(st, pos - st)));
        };
        std::string_view t = text;
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        if (t == "1") return w;
        while (i < text.size()) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
                ++i;
                continue;
            }
            if (c != 'y') throw parse_error("unexpected character in word: " + std::string(text));
            ++i;
            int letter = num(i);
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = num(i);
            }
            if (letter < 1) throw parse_error("letters are 1-based: " + std::string(text));
            for (int k = 0; k < e; ++k) w.letters.push_back(letter);
        }
        return w;
    }
};

template <class C = Rational>
class YPolynomial {
public:
    using Map = std::map<Word, C>;
    YPolynomial() = default;
    static YPolynomial monomial(const Word& w, C c = C(1)) {
        YPolynomial p;
        p.add(w, c);
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    C coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C(0) : it->second;
    }
    void add(const Word& w, const C& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    YPolynomial& operator+=(const YPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    YPolynomial& operator-=(const YPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    YPolynomial operator+(const YPolynomial& o) const { return YPolynomial(*this) += o; }
    YPolynomial operator-(const YPolynomial& o) const { return YPolynomial(*this) -= o; }
    YPolynomial scaled(const C& s) const {
        YPolynomial r;
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }
    bool operator==(const YPolynomial& o) const { return terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            C a = c;
            bool neg = a < 0;
            if (neg) a = -a;
            s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (a != 1) s += to_string(a) + "*";
            s += w.str();
            first = false;
        }
        return s;
    }

private:
    Map terms_;
};

// x_i -> y_i
template <class C>
YPolynomial<C> substitute(const AlgebraElement<C>& f) {
    YPolynomial<C> r;
    for (const auto& [k, c] : f.terms()) r.add(Word(Permutation::unpack(f.degree(), k).images()), c);
    return r;
}

// x_j -> y_{row of j in T}
template <class C>
YPolynomial<C> substitute_by_tableau(const Tableau& t, const AlgebraElement<C>& f) {
    if (t.size() != f.degree()) throw degree_mismatch("substitute_by_tableau: degree mismatch");
    YPolynomial<C> r;
    for (const auto& [k, c] : f.terms()) {
        auto img = Permutation::unpack(f.degree(), k).images();
        for (auto& x : img) x = t.row_of(x) + 1;
        r.add(Word(std::move(img)), c);
    }
    return r;
}

// Each monomial u of multidegree h gives the sum over all bijections from
// the label block of y_i (h_1+..+h_{i-1}+1 .. h_1+..+h_i) onto the
// occurrences of y_i in u.
template <class C>
AlgebraElement<C> linearize(const YPolynomial<C>& g, int m) {
    AlgebraElement<C> r(m);
    for (const auto& [w, c] : g.terms()) {
        if (w.size() != m) throw std::invalid_argument("linearize: monomial " + w.str() + " is not of degree m");
        int k = *std::max_element(w.letters.begin(), w.letters.end());
        std::vector<std::vector<int>> occ(k + 1), labels(k + 1);
        for (int p = 0; p < m; ++p) occ[w[p]].push_back(p);
        int next = 1;
        for (int i = 1; i <= k; ++i)
            for (std::size_t q = 0; q < occ[i].size(); ++q) labels[i].push_back(next++);
        std::vector<int> img(m);
        auto rec = [&](auto&& self, int i) -> void {
            if (i > k) {
                r.add(Permutation(img), c);
                return;
            }
            auto lab = labels[i];
            do {
                for (std::size_t q = 0; q < lab.size(); ++q) img[occ[i][q]] = lab[q];
                self(self, i + 1);
            } while (std::next_permutation(lab.begin(), lab.end()));
        };
        rec(rec, 1);
    }
    return r;
}

// sum over tau in C_T of sgn(tau) f(y_{row tau(1)}, ..., y_{row tau(m)}).
template <class C>
YPolynomial<C> highest_weight_image(const Tableau& t, const AlgebraElement<C>& f) {
    if (t.size() != f.degree()) throw degree_mismatch("highest_weight_image: degree mismatch");
    int m = f.degree();
    YPolynomial<C> r;
    std::vector<std::pair<std::vector<int>, int>> col_group;
    for_each_in_young_subgroup(m, t.columns(), [&](const Permutation& tau, int sign) {
        std::vector<int> letter(m + 1);
        for (int j = 1; j <= m; ++j) letter[j] = t.row_of(tau(j)) + 1;
        col_group.emplace_back(std::move(letter), sign);
    });
    std::vector<int> w(m);
    for (const auto& [k, c] : f.terms()) {
        auto img = Permutation::unpack(m, k).images();
        for (const auto& [letter, sign] : col_group) {
            for (int p = 0; p < m; ++p) w[p] = letter[img[p]];
            r.add(Word(w), sign > 0 ? c : C(-c));
        }
    }
    return r;
}

// The permutation s with s(T(i,j)) = (row-major filling)(i,j), so that
// s applied to T is the canonical tableau of the same shape.
inline Permutation regev_sigma(const Tableau& t) {
    Tableau canon = canonical_tableau(t.shape());
    std::vector<int> img(t.size());
    for (int i = 0; i < t.shape().length(); ++i)
        for (int j = 0; j < t.shape()[i]; ++j) img[t.at(i, j) - 1] = canon.at(i, j);
    return Permutation(std::move(img));
}

// Lin_m(b_T(y) g) == s e_T g with s from regev_sigma.
template <class C>
bool regev_identity_check(const Tableau& t, const AlgebraElement<C>& g) {
    auto lhs = linearize(highest_weight_image(t, g), t.size());
    auto rhs = act_left(regev_sigma(t), multiply(young_symmetrizer<C>(t), g));
    return lhs == rhs;
}

} // namespace tideal
