#pragma once

// Multiplicity tables  U = sum m^lambda S^lambda  over partitions of one degree.

#include "combinatorics.hpp"

#include <map>

namespace tideal {

class Decomposition {
public:
    using Map = std::map<Partition, std::uint64_t, CanonicalOrder>;

    Decomposition() = default;
    explicit Decomposition(int m) : m_(m) {}
    Decomposition(int m, std::initializer_list<std::pair<Partition, std::uint64_t>> terms) : m_(m) {
        for (const auto& [p, c] : terms) add(p, c);
    }

    int degree() const { return m_; }
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Partition& p, std::uint64_t mult) {
        if (p.size() != m_) throw std::invalid_argument("decomposition term " + p.str() + " has wrong degree");
        if (mult == 0) return;
        terms_[p] += mult;
    }
    std::uint64_t operator[](const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    std::uint64_t total_multiplicity() const {
        std::uint64_t s = 0;
        for (const auto& [p, c] : terms_) s += c;
        return s;
    }
    Integer dimension() const {
        Integer s = 0;
        for (const auto& [p, c] : terms_) s += irrep_dim_z(p) * Integer(static_cast<unsigned long>(c));
        return s;
    }

    bool operator==(const Decomposition& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    // "S^(6,2) x5 ⊕ S^(8)"; multiplicity one is written without "x1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) s += " ⊕ ";
            s += "S^" + p.str();
            if (c != 1) s += " x" + std::to_string(c);
        }
        return s;
    }

private:
    int m_ = 0;
    Map terms_;
};

inline Decomposition derive_decomposition(const Decomposition& w, int s) {
    Decomposition r(w.degree() + s);
    for (const auto& [p, c] : w.terms()) r.add(derive_partition(p, s), c);
    return r;
}

// U is derived from W: U = { derive_partition(lambda, deg U - deg W) : mult }.
inline bool is_derived_decomposition(const Decomposition& u, const Decomposition& w) {
    int delta = u.degree() - w.degree();
    if (delta < 0) return false;
    if (w.degree() == 0) return u.empty() && w.empty();
    return derive_decomposition(w, delta) == u;
}

} // namespace tideal
