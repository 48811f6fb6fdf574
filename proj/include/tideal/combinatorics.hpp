#pragma once

// Partitions, Young diagrams, hook lengths and tableaux.

#include "common.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tideal {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            total_ += parts_[i];
        }
    }

    // Accepts any order and sorts.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return total_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= (*this)[0]; ++j) {
            int h = 0;
            for (int p : parts_)
                if (p >= j) ++h;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    // Tail (λ_2, λ_3, ...): identifies the family {derive_partition(λ, s)}.
    Partition tail() const { return Partition(std::vector<int>(parts_.begin() + (parts_.empty() ? 0 : 1), parts_.end())); }

    bool dominates(const Partition& o) const {
        int a = 0, b = 0;
        std::size_t len = std::max(parts_.size(), o.parts_.size());
        for (std::size_t i = 0; i < len; ++i) {
            a += (*this)[i];
            b += o[i];
            if (a < b) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    // "(5,2,2,1,1,1)", "5,2,2,1,1,1", "1^3,2^2,5" or "()".
    static Partition parse(std::string_view text) {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (!t.empty() && t.front() == '(') {
            if (t.back() != ')') throw parse_error("unbalanced parenthesis in partition: " + std::string(text));
            t = t.substr(1, t.size() - 2);
        }
        std::vector<int> parts;
        if (t.empty()) return Partition();
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw parse_error("empty part in partition: " + std::string(text));
            auto caret = item.find('^');
            int value = 0, count = 1;
            try {
                std::size_t used = 0;
                value = std::stoi(item.substr(0, caret), &used);
                if (used != (caret == std::string::npos ? item.size() : caret)) throw parse_error("");
                if (caret != std::string::npos) {
                    count = std::stoi(item.substr(caret + 1), &used);
                    if (used != item.size() - caret - 1) throw parse_error("");
                }
            } catch (const std::exception&) {
                throw parse_error("malformed partition: " + std::string(text));
            }
            if (value < 1 || count < 0) throw parse_error("malformed partition: " + std::string(text));
            for (int i = 0; i < count; ++i) parts.push_back(value);
        }
        return from_unsorted(std::move(parts));
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

// Canonical order: reverse-lexicographic, so (4) precedes (3,1) precedes (2,2).
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a.parts() > b.parts(); }
};

inline void for_each_partition(int m, int max_length, int max_part,
                               const std::function<void(const Partition&)>& fn) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int bound) {
        if (left == 0) {
            fn(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_length) return;
        for (int p = std::min(left, bound); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, max_part);
}

inline std::vector<Partition> partitions_of(int m, std::optional<int> max_length = std::nullopt) {
    if (m < 0) throw std::invalid_argument("partitions_of: m must be nonnegative");
    std::vector<Partition> out;
    for_each_partition(m, max_length.value_or(m == 0 ? 1 : m), m, [&](const Partition& p) { out.push_back(p); });
    return out;
}

using HookTable = std::vector<std::vector<int>>;

inline HookTable hook_table(const Partition& la) {
    Partition c = la.conjugate();
    HookTable h(la.length());
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la[i]; ++j) h[i].push_back((la[i] - j - 1) + (c[j] - i - 1) + 1);
    return h;
}

inline Integer irrep_dim_z(const Partition& la) {
    Integer num = factorial_z(la.size()), den = 1;
    for (const auto& row : hook_table(la))
        for (int x : row) den *= x;
    return num / den;
}

inline std::uint64_t irrep_dim(const Partition& la) {
    Integer d = irrep_dim_z(la);
    if (!d.fits_ulong_p()) throw std::overflow_error("irrep_dim exceeds 64 bits");
    return d.get_ui();
}

inline Partition derive_partition(const Partition& la, int s) {
    if (la.empty()) throw std::invalid_argument("derive_partition: empty partition");
    std::vector<int> p = la.parts();
    p[0] += s;
    return Partition(std::move(p));
}

// A filling of a Young diagram with 1..m, each used once. Not necessarily standard.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lens;
        int m = 0;
        for (const auto& r : rows_) {
            lens.push_back(static_cast<int>(r.size()));
            m += static_cast<int>(r.size());
        }
        shape_ = Partition(lens);
        row_of_.assign(m + 1, -1);
        col_of_.assign(m + 1, -1);
        for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
            for (int j = 0; j < static_cast<int>(rows_[i].size()); ++j) {
                int x = rows_[i][j];
                if (x < 1 || x > m || row_of_[x] != -1)
                    throw std::invalid_argument("tableau entries must be exactly 1..m");
                row_of_[x] = i;
                col_of_[x] = j;
            }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    int at(int i, int j) const { return rows_[i][j]; }
    // 0-based row and column of entry x.
    int row_of(int x) const { return row_of_[x]; }
    int col_of(int x) const { return col_of_[x]; }

    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols(shape_[0]);
        for (const auto& r : rows_)
            for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
        return cols;
    }

    bool is_standard() const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
                if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
            }
        return true;
    }

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows_[i][j]);
            s += "]";
        }
        return s + "]";
    }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    std::vector<int> row_of_, col_of_;
};

inline Tableau canonical_tableau(const Partition& la) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : la.parts()) {
        rows.emplace_back();
        for (int j = 0; j < len; ++j) rows.back().push_back(next++);
    }
    return Tableau(std::move(rows));
}

inline Tableau extend_tableau(const Tableau& t, int s) {
    auto rows = t.rows();
    if (rows.empty()) rows.emplace_back();
    int m = t.size();
    for (int i = 1; i <= s; ++i) rows[0].push_back(m + i);
    return Tableau(std::move(rows));
}

inline constexpr int default_tableau_cap = 12;

// Fills 1..m in order; entry x goes to the end of a row whose length is below
// both its target and the length of the row above.
inline void for_each_standard_tableau(const Partition& la, const std::function<void(const Tableau&)>& fn) {
    std::vector<std::vector<int>> rows(la.length());
    int m = la.size();
    std::function<void(int)> rec = [&](int x) {
        if (x > m) {
            fn(Tableau(rows));
            return;
        }
        for (int i = 0; i < la.length(); ++i) {
            int len = static_cast<int>(rows[i].size());
            if (len >= la[i]) continue;
            if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
            rows[i].push_back(x);
            rec(x + 1);
            rows[i].pop_back();
        }
    };
    rec(1);
}

inline std::vector<Tableau> standard_tableaux(const Partition& la, int cap = default_tableau_cap) {
    if (la.size() > cap)
        throw cap_exceeded("standard_tableaux: m = " + std::to_string(la.size()) + " exceeds cap " +
                           std::to_string(cap));
    std::vector<Tableau> out;
    for_each_standard_tableau(la, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

} // namespace tideal
