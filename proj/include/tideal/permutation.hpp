#pragma once

// Permutations of {1..m} in one-line form. Composition is (s*t)(i) = s(t(i)).

#include "common.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tideal {

class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int m) {
        Permutation p;
        p.images_.resize(m);
        std::iota(p.images_.begin(), p.images_.end(), 1);
        return p;
    }
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int x : images_) {
            if (x < 1 || x > static_cast<int>(images_.size()) || seen[x])
                throw std::invalid_argument("not a permutation");
            seen[x] = true;
        }
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation operator*(const Permutation& t) const {
        if (degree() != t.degree()) throw degree_mismatch("permutation degrees differ");
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = images_[t.images_[i] - 1];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i] - 1] = static_cast<int>(i) + 1;
        return r;
    }

    int sign() const {
        std::vector<bool> seen(images_.size(), false);
        int s = 1;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    // Lehmer-code rank in [0, m!).
    std::uint64_t rank() const {
        std::uint64_t r = 0;
        int m = degree();
        for (int i = 0; i < m; ++i) {
            int c = 0;
            for (int j = i + 1; j < m; ++j)
                if (images_[j] < images_[i]) ++c;
            r = r * static_cast<std::uint64_t>(m - i) + static_cast<std::uint64_t>(c);
        }
        return r;
    }

    static Permutation unrank(int m, std::uint64_t r) {
        std::vector<int> code(m);
        for (int i = m - 1; i >= 0; --i) {
            code[i] = static_cast<int>(r % static_cast<std::uint64_t>(m - i));
            r /= static_cast<std::uint64_t>(m - i);
        }
        std::vector<int> avail(m);
        std::iota(avail.begin(), avail.end(), 1);
        std::vector<int> img;
        for (int i = 0; i < m; ++i) {
            img.push_back(avail[code[i]]);
            avail.erase(avail.begin() + code[i]);
        }
        return Permutation(std::move(img));
    }

    // Four bits per image; supports m <= 16.
    std::uint64_t pack() const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            k |= static_cast<std::uint64_t>(images_[i] - 1) << (4 * i);
        return k;
    }
    static Permutation unpack(int m, std::uint64_t k) {
        Permutation p;
        p.images_.resize(m);
        for (int i = 0; i < m; ++i) p.images_[i] = static_cast<int>((k >> (4 * i)) & 0xF) + 1;
        return p;
    }

    static Permutation random(int m, std::mt19937_64& rng) {
        Permutation p = identity(m);
        std::shuffle(p.images_.begin(), p.images_.end(), rng);
        return p;
    }

    auto operator<=>(const Permutation&) const = default;

    std::string cycles() const {
        std::string s;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
            s += '(';
            bool first = true;
            for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
                seen[j] = true;
                if (!first) s += ' ';
                s += std::to_string(j + 1);
                first = false;
            }
            s += ')';
        }
        return s.empty() ? "e" : s;
    }

    // "(1 2)(3 4)", "e" or "()". Cycles may overlap; they compose right to left.
    static Permutation parse_cycles(std::string_view text, int m) {
        Permutation result = identity(m);
        std::string t(text);
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
        };
        skip();
        if (t.substr(pos) == "e") return result;
        std::vector<Permutation> cycles;
        while (pos < t.size()) {
            if (t[pos] != '(') throw parse_error("expected '(' in cycle notation: " + t);
            auto close = t.find(')', pos);
            if (close == std::string::npos) throw parse_error("unterminated cycle: " + t);
            std::stringstream ss(t.substr(pos + 1, close - pos - 1));
            std::vector<int> cyc;
            std::string tok;
            while (ss >> tok) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    throw parse_error("bad cycle entry: " + tok);
                }
                if (used != tok.size() || v < 1 || v > m) throw parse_error("bad cycle entry: " + tok);
                if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) throw parse_error("repeated entry in cycle");
                cyc.push_back(v);
            }
            std::vector<int> img(m);
            std::iota(img.begin(), img.end(), 1);
            for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
            cycles.emplace_back(std::move(img));
            pos = close + 1;
            skip();
        }
        for (const auto& c : cycles) result = result * c;
        return result;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? " " : "") + std::to_string(images_[i]);
        return s + "]";
    }

private:
    std::vector<int> images_;
};

// Calls fn(perm, sign) for every permutation preserving each block setwise.
template <class Fn>
void for_each_in_young_subgroup(int m, const std::vector<std::vector<int>>& blocks, Fn&& fn) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    auto rec = [&](auto&& self, std::size_t bi, int sign) -> void {
        if (bi == blocks.size()) {
            fn(Permutation(img), sign);
            return;
        }
        std::vector<int> sorted_src = blocks[bi];
        std::sort(sorted_src.begin(), sorted_src.end());
        std::vector<int> perm = sorted_src;
        do {
            for (std::size_t i = 0; i < sorted_src.size(); ++i) img[sorted_src[i] - 1] = perm[i];
            // Sign of the block permutation via inversion count.
            int inv = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[j] < perm[i]) ++inv;
            self(self, bi + 1, (inv % 2) ? -sign : sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int x : sorted_src) img[x - 1] = x;
    };
    rec(rec, 0, 1);
}

} // namespace tideal
