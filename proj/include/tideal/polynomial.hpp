#pragma once

// Univariate polynomials with exact rational coefficients.

#include "common.hpp"

#include <vector>

namespace tideal {

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    // Coefficients lowest degree first.
    explicit RationalPolynomial(std::vector<Rational> c, std::string var = "x") : c_(std::move(c)), var_(std::move(var)) {
        trim();
    }
    static RationalPolynomial linear_factor(const Rational& root_shift, std::string var = "x") {
        // x + root_shift
        return RationalPolynomial({root_shift, Rational(1)}, std::move(var));
    }

    const std::vector<Rational>& coefficients() const { return c_; }
    const std::string& variable() const { return var_; }
    void set_variable(std::string v) { var_ = std::move(v); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational operator()(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    RationalPolynomial operator+(const RationalPolynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RationalPolynomial(std::move(r), var_);
    }
    RationalPolynomial operator*(const RationalPolynomial& o) const {
        if (c_.empty() || o.c_.empty()) return RationalPolynomial({}, var_);
        std::vector<Rational> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RationalPolynomial(std::move(r), var_);
    }
    RationalPolynomial scaled(const Rational& s) const {
        auto r = c_;
        for (auto& x : r) x *= s;
        return RationalPolynomial(std::move(r), var_);
    }
    // p(x + t)
    RationalPolynomial shifted(const Rational& t) const {
        RationalPolynomial r({}, var_), xt = linear_factor(t, var_), pw({Rational(1)}, var_);
        for (const auto& a : c_) {
            r = r + pw.scaled(a);
            pw = pw * xt;
        }
        return r;
    }
    bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

    // Newton divided differences; the result has minimal degree.
    static RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& pts, std::string var = "x") {
        std::size_t n = pts.size();
        std::vector<Rational> dd(n);
        for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = n - 1; i >= j; --i) {
                dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - j].first);
                if (i == j) break;
            }
        RationalPolynomial r({}, var), basis({Rational(1)}, var);
        for (std::size_t i = 0; i < n; ++i) {
            r = r + basis.scaled(dd[i]);
            basis = basis * linear_factor(-pts[i].first, var);
        }
        return r;
    }

    // "1/2*n^4 + 2*n^3 + 3/2*n^2 - n"
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            Rational a = c_[i];
            if (a == 0) continue;
            bool neg = a < 0;
            if (neg) a = -a;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            bool unit = a == 1 && i > 0;
            if (!unit) s += a.get_str();
            if (i > 0) {
                if (!unit) s += "*";
                s += var_;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
    std::string var_ = "x";
};

} // namespace tideal
