// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1).

#include "tideal/tideal.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace tideal;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds)
        o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("%s %2d  %-66s %8.2f s%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

Decomposition olsson_regev(int n) {
    return Decomposition(n + 1, {{Partition{n + 1}, 1}, {Partition{n, 1}, 2}, {Partition{n - 1, 2}, 1}, {Partition{n - 1, 1, 1}, 1}});
}

Decomposition table_6_8() {
    return Decomposition(8, {{Partition{8}, 1},
                             {Partition{7, 1}, 4},
                             {Partition{6, 2}, 5},
                             {Partition{6, 1, 1}, 5},
                             {Partition{5, 3}, 3},
                             {Partition{5, 2, 1}, 6},
                             {Partition{5, 1, 1, 1}, 3},
                             {Partition{4, 4}, 1},
                             {Partition{4, 3, 1}, 1},
                             {Partition{4, 2, 2}, 2},
                             {Partition{4, 2, 1, 1}, 1},
                             {Partition{4, 1, 1, 1, 1}, 1}});
}

std::string str(const Integer& z) { return z.get_str(); }

// Tableau of shape la filled by a random linear extension of the cell order.
Tableau random_standard_tableau(const Partition& la, std::mt19937_64& rng) {
    std::vector<std::vector<int>> rows(la.length());
    for (int v = 1; v <= la.size(); ++v) {
        std::vector<int> open;
        for (int i = 0; i < la.length(); ++i) {
            int len = static_cast<int>(rows[i].size());
            if (len < la[i] && (i == 0 || static_cast<int>(rows[i - 1].size()) > len)) open.push_back(i);
        }
        int i = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        rows[i].push_back(v);
    }
    return Tableau(rows);
}

}  // namespace

int main() {
    MultiplicityOptions opt;
    std::map<int, Decomposition> k2;  // n -> W_{n,n+2}

    criterion(1, "W_{2,2} = S^(2), dim 1", 1.0, [](Outcome& o) {
        auto d = dim_W(2, 2, DimMethod::both);
        o.require(d.value == 1, "dim " + str(d.value));
        o.require(*d.decomposition == Decomposition(2, {{Partition{2}, 1}}), d.decomposition->str());
    });

    criterion(2, "dim W_{2,3} = 3!, d(2) = 3, dim W_{3,6} = 6!, d(3) = 6", 600.0, [&](Outcome& o) {
        RankPolicy exact;
        exact.force_exact = true;
        auto w23 = spanning_dimension(2, 3, exact);
        o.require(w23.rank == 6, "dim W_{2,3} = " + std::to_string(w23.rank));
        auto p2 = nilpotency_probe(2, std::nullopt, opt);
        o.require(p2.degree == 3, "d(2)");
        auto M = build_spanning_matrix(3, 6);
        o.require(M.nrows() == 1200 && M.ncols() == 720, "matrix shape");
        auto w36 = spanning_dimension(3, 6);
        o.require(w36.rank == 720 && w36.certified, "dim W_{3,6} = " + std::to_string(w36.rank));
        auto p3 = nilpotency_probe(3, std::nullopt, opt);
        o.require(p3.degree == 6, "d(3)");
    });

    criterion(3, "W_{n,n+1} decomposition and dim n(n+1), n = 3..6", 60.0, [&](Outcome& o) {
        for (int n = 3; n <= 6; ++n) {
            auto w = decompose_W(n, n + 1, true, opt);
            o.require(w == olsson_regev(n), "n = " + std::to_string(n) + ": " + w.str());
            o.require(w.dimension() == n * (n + 1), "dim at n = " + std::to_string(n));
        }
    });

    Decomposition w68_unpruned;
    criterion(4, "W_{6,8} twelve-term table, dim 1128, no pruning", 1800.0, [&](Outcome& o) {
        std::vector<MultiplicityResult> details;
        w68_unpruned = decompose_W(6, 8, false, opt, &details);
        o.require(w68_unpruned == table_6_8(), w68_unpruned.str());
        bool certified = true;
        for (const auto& r : details) certified = certified && r.certified && !r.pruned;
        o.require(certified, "uncertified rank");
        auto d = dim_W(6, 8, DimMethod::via_multiplicities, opt);
        o.require(d.value == 1128 && d.certified, "dim " + str(d.value));
    });

    criterion(5, "no S^lambda with more than 2K+1 rows (unpruned)", 0, [&](Outcome& o) {
        for (auto [n, K] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {6, 2}}) {
            std::vector<MultiplicityResult> details;
            if (n == 6 && !w68_unpruned.empty()) {
                for (const auto& [la, c] : w68_unpruned.terms())
                    o.require(la.length() <= 2 * K + 1, "(6,8) " + la.str());
                continue;
            }
            decompose_W(n, n + K, false, opt, &details);
            for (const auto& r : details) {
                o.require(!r.pruned, "pruned");
                if (r.shape.length() > 2 * K + 1)
                    o.require(r.value == 0, "(" + std::to_string(n) + "," + std::to_string(n + K) + ") " + r.shape.str());
            }
        }
    });

    criterion(6, "GL upper bounds dominate; equal at K = 1", 0, [&](Outcome& o) {
        for (int n = 1; n <= 6; ++n) {
            auto u = multiplicity_upper_bounds(1, n, std::nullopt, opt.workers);
            o.require(u == decompose_W(n, n + 1, true, opt), "K = 1, n = " + std::to_string(n));
        }
        for (int n = 2; n <= 9; ++n) {
            k2[n] = decompose_W(n, n + 2, true, opt);
            auto u = multiplicity_upper_bounds(2, n, std::nullopt, opt.workers);
            for (const auto& [la, c] : k2[n].terms())
                o.require(u[la] >= c, "K = 2, n = " + std::to_string(n) + " at " + la.str());
        }
        for (int n = 3; n <= 5; ++n) {
            auto u = multiplicity_upper_bounds(3, n, std::nullopt, opt.workers);
            auto w = decompose_W(n, n + 3, true, opt);
            for (const auto& [la, c] : w.terms())
                o.require(u[la] >= c, "K = 3, n = " + std::to_string(n) + " at " + la.str());
        }
    });

    criterion(7, "stabilization onset N_obs: 3 for K = 1, 6 for K = 2", 0, [&](Outcome& o) {
        auto r1 = stabilization_report(1, 3, 6, opt);
        o.require(r1.n_obs == 3, "K = 1");
        auto r2 = stabilization_report(2, 6, 8, opt);
        o.require(r2.n_obs == 6, "K = 2");
        for (int i = 0; i < 3; ++i)
            o.require(r2.decompositions[i] == derive_decomposition(table_6_8(), i), "K = 2 derived tables");
    });

    criterion(8, "lower bounds <= dim W_{n,m} <= ordered-partition count", 0, [&](Outcome& o) {
        std::vector<std::pair<int, int>> cases{{3, 6}, {6, 8}};
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= m; ++n) cases.emplace_back(n, m);
        for (auto [n, m] : cases) {
            auto d = dim_W(n, m, DimMethod::via_multiplicities, opt);
            std::string at = " at (" + std::to_string(n) + "," + std::to_string(m) + ")";
            o.require(d.certified, "uncertified" + at);
            o.require(latyshev_lower_bound(n, m) <= d.value, "row-count bound" + at);
            o.require(d.value <= omega_upper_bound(n, m), "upper bound" + at);
            if (auto c = coprime_lower_bound(n, m)) o.require(*c <= d.value, "coprime bound" + at);
        }
    });

    criterion(9, "Young symmetrizer identities (m <= 5 all, m = 6 sampled)", 0, [&](Outcome& o) {
        for (int m = 1; m <= 5; ++m) {
            auto shapes = partitions_of(m);
            for (const auto& la : shapes)
                for (const auto& t : standard_tableaux(la)) {
                    auto e = young_symmetrizer(t);
                    Rational beta = idempotent_scalar(t);
                    o.require(beta.get_den() == 1 && multiply(e, e) == e.scaled(beta), "e_T^2 at " + t.str());
                    for (std::uint64_t r = 0; r < factorial(m); ++r)
                        if (!conjugate_tableau_check(Permutation::unrank(m, r), t))
                            o.require(false, "conjugation at " + t.str());
                    o.require(sandwich_rank(e, e) == 1, "dim e_T R e_T at " + t.str());
                }
            // Other tableaux of a shape are conjugates of the canonical one, so
            // canonical pairs settle every pair of shapes.
            for (const auto& a : shapes)
                for (const auto& b : shapes)
                    if (a != b)
                        o.require(sandwich_rank(young_symmetrizer(canonical_tableau(a)),
                                                young_symmetrizer(canonical_tableau(b))) == 0,
                                  "e_U R e_V at " + a.str() + ", " + b.str());
        }
        std::mt19937_64 rng(2024);
        auto shapes = partitions_of(6);
        for (int trial = 0; trial < 100; ++trial) {
            auto la = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
            auto mu = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
            auto t = random_standard_tableau(la, rng), u = random_standard_tableau(mu, rng);
            auto s = Permutation::random(6, rng);
            auto e = young_symmetrizer(t), f = young_symmetrizer(u);
            std::string at = " at " + t.str();
            o.require(multiply(e, e) == e.scaled(idempotent_scalar(t)), "e_T^2" + at);
            o.require(conjugate_tableau_check(s, t), "conjugation" + at);
            // e_T s e_T is a multiple of e_T; across shapes e_T s e_U vanishes.
            auto ete = multiply(act_right(e, s), e);
            auto [lead, c] = *e.sorted_terms().begin();
            o.require(ete == e.scaled(ete.coeff(lead) / c), "e_T s e_T" + at);
            if (la != mu) o.require(multiply(act_right(e, s), f).is_zero(), "e_T s e_U" + at);
        }
    });

    criterion(10, "substitution identity (m <= 4) and rank transfer (m = 5)", 0, [&](Outcome& o) {
        std::mt19937_64 rng(77);
        for (int m = 1; m <= 4; ++m)
            for (const auto& la : partitions_of(m))
                for (const auto& t : standard_tableaux(la))
                    o.require(regev_identity_check(t, random_element(m, 4, rng)), "identity at " + t.str());
        auto shapes = partitions_of(5);
        for (int fam = 0; fam < 50; ++fam) {
            auto t = random_standard_tableau(shapes[fam % shapes.size()], rng);
            auto e = young_symmetrizer(t);
            std::vector<AlgebraElement<Rational>> left;
            std::vector<YPolynomial<Rational>> right;
            for (int i = 0; i < 5; ++i) {
                auto f = random_element(5, 1 + i % 3, rng);
                left.push_back(multiply(e, f));
                right.push_back(highest_weight_image(t, f));
            }
            o.require(element_rank(left, 5) == ypoly_rank(right), "family " + std::to_string(fam));
        }
    });

    criterion(11, "interleaving sums, 6+s coefficient, counterexample, run growth", 0, [&](Outcome& o) {
        std::mt19937_64 rng(11);
        for (int r = 1; r <= 3; ++r)
            for (int s = 0; s <= 3; ++s)
                for (int trial = 0; trial < 5; ++trial) {
                    std::vector<Word> ms;
                    for (int i = 0; i < r; ++i) ms.push_back(random_word(1 + (i + trial) % 3, 3, rng));
                    o.require(p_shifted_identity_check(ms, s), "identity r = " + std::to_string(r));
                }
        auto fit = coefficient_polynomial({Word::parse("y2"), Word::parse("y1^2")}, Word::parse("y1 y2 y1^7"), 8);
        for (const auto& [s, c] : fit.samples) o.require(c == 6 + s, "c(" + std::to_string(s) + ") = " + str(c));
        o.require(!fit.residual && fit.polynomial.str() == "s + 6", "fit " + fit.polynomial.str());
        auto bad = coefficient_polynomial({Word::parse("y2 y1 y2"), Word::parse("y2")}, Word::parse("y2 y1 y2^2 y1"), 8);
        o.require(bad.residual, "counterexample not flagged");
        o.require(bad.samples[0].second == 1, "counterexample c(0)");
        for (std::size_t i = 1; i < bad.samples.size(); ++i) o.require(bad.samples[i].second == 0, "counterexample c(s)");
        for (int trial = 0; trial < 200; ++trial) {
            auto u = random_word(8, 3, rng);
            auto c = central_part(u);
            if (!c) continue;
            for (int s = 0; s <= 5; ++s)
                o.require(central_part(shift_word(u, s))->length == c->length + s, "run growth at " + u.str());
        }
    });

    criterion(12, "zeta criterion vs circulant rank, order <= 12", 10.0, [](Outcome& o) {
        for (int n = 1; n <= 12; ++n)
            for (int k = 0; k < n; ++k)
                o.require(zeta_invertible(n, k) == (zeta_circulant_rank(n, k) == static_cast<std::size_t>(n)),
                          "order " + std::to_string(n) + ", k = " + std::to_string(k));
    });

    criterion(13, "p_1(n) = n^2+n on 3..6; p_2 = n(n+2)(n^2+2n-1)/2 on 6..9", 4 * 3600.0, [&](Outcome& o) {
        std::map<int, Integer> s1, s2;
        for (int n = 3; n <= 6; ++n) s1[n] = decompose_W(n, n + 1, true, opt).dimension();
        auto p1 = fit_pK(1, s1);
        o.require(p1.validated && p1.polynomial.str() == "n^2 + n", "p_1 = " + p1.polynomial.str());
        for (int n = 6; n <= 9; ++n) {
            if (!k2.count(n)) k2[n] = decompose_W(n, n + 2, true, opt);
            s2[n] = k2[n].dimension();
        }
        auto p2 = fit_pK(2, s2, std::pair{6, k2.at(6)});
        RationalPolynomial x({0, 1}, "n");
        auto want = (x * RationalPolynomial::linear_factor(2, "n") * RationalPolynomial({-1, 2, 1}, "n")).scaled(Rational(1, 2));
        o.require(p2.validated && p2.polynomial == want, "p_2 = " + p2.polynomial.str());
        o.require(p2.validated_on == std::vector<int>{6, 7, 8, 9}, "validation range");
        for (const auto& [n, v] : s2) o.require(want(n) == Rational(v), "dim at n = " + std::to_string(n));
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures ? 1 : 0;
}
