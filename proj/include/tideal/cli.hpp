#pragma once

// Command-line front end. run_cli is the whole program minus main(), so tests
// can drive it with captured streams.

#include "checks.hpp"
#include "io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

namespace tideal::cli {

enum Exit : int { ok = 0, invariant_failure = 1, bad_arguments = 2, budget_exceeded = 3 };

struct RunConfig {
    std::string command;
    int n = 0, m = 0, K = 0, l = 0, k = 0, order = 0;
    int n_min = 0, n_max = 0, s_max = 8;
    std::optional<int> m_max, nvars;
    std::string shape, blocks, word, method = "multiplicities", suite = "fast", only;
    bool prune = true, fit = false, check = false, details = false, quiet = false;
    int primes = 2;
    int workers = default_workers();
    std::string format = "text";
    std::uint64_t seed = 7;
    std::optional<double> budget;
};

inline MultiplicityOptions multiplicity_options(const RunConfig& c, std::ostream& err) {
    MultiplicityOptions o;
    o.workers = c.workers;
    o.primes = c.primes;
    if (!c.quiet) o.progress = [&err](const std::string& s) { err << s << "\n"; };
    return o;
}

inline std::string w_name(int n, int m) { return "W_{" + std::to_string(n) + "," + std::to_string(m) + "}"; }

// ---- verify ---------------------------------------------------------------

struct Check {
    std::string name;
    std::function<std::string(std::uint64_t seed, int workers)> run;  // empty string on success
};

namespace detail {

inline std::string fail(std::ostringstream& os) { return os.str(); }

inline std::string check_hooks(std::uint64_t, int) {
    std::ostringstream os;
    for (int m = 0; m <= 7; ++m) {
        Integer sum = 0;
        for (const auto& la : partitions_of(m)) {
            Integer d = irrep_dim_z(la);
            sum += d * d;
            if (m <= 6 && Integer(static_cast<unsigned long>(standard_tableaux(la).size())) != d)
                os << "irrep_dim" << la.str() << " = " << d << " differs from the tableau count; ";
        }
        if (sum != factorial_z(m)) os << "sum of squared dimensions at m = " << m << " is " << sum << "; ";
    }
    return fail(os);
}

inline std::string check_symmetrizers(std::uint64_t seed, int) {
    std::ostringstream os;
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= 5; ++m)
        for (const auto& la : partitions_of(m)) {
            auto t = canonical_tableau(la);
            Rational beta = idempotent_scalar(t);
            if (beta.get_den() != 1 || beta * Rational(irrep_dim_z(la)) != Rational(factorial_z(m)))
                os << "e_T^2 scalar " << beta << " at " << la.str() << "; ";
            for (int i = 0; i < 5; ++i) {
                auto s = Permutation::random(m, rng);
                if (!conjugate_tableau_check(s, t)) os << "conjugation by " << s.str() << " at " << la.str() << "; ";
            }
            auto f = random_element(m, 3, rng);
            auto s = Permutation::random(m, rng), u = Permutation::random(m, rng);
            if (act_left(s, act_right(f, u)) != act_right(act_left(s, f), u)) os << "bimodule law at m = " << m << "; ";
        }
    return fail(os);
}

inline std::string check_sandwich(int max_m) {
    std::ostringstream os;
    for (int m = 1; m <= max_m; ++m) {
        auto shapes = partitions_of(m);
        std::vector<AlgebraElement<Rational>> e;
        for (const auto& la : shapes) e.push_back(young_symmetrizer(canonical_tableau(la)));
        for (std::size_t i = 0; i < shapes.size(); ++i)
            for (std::size_t j = 0; j < shapes.size(); ++j) {
                std::size_t r = sandwich_rank(e[i], e[j]);
                if (r != (i == j ? 1u : 0u))
                    os << "dim e_U R e_V = " << r << " for " << shapes[i].str() << ", " << shapes[j].str() << "; ";
            }
    }
    return fail(os);
}

inline std::string check_regev(std::uint64_t seed, int) {
    std::ostringstream os;
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= 4; ++m)
        for (const auto& la : partitions_of(m))
            for (const auto& t : standard_tableaux(la)) {
                auto g = random_element(m, 3, rng);
                if (!regev_identity_check(t, g)) os << "identity fails at T = " << t.str() << "; ";
                std::vector<AlgebraElement<Rational>> left;
                std::vector<YPolynomial<Rational>> right;
                auto e = young_symmetrizer(t);
                for (int i = 0; i < 3; ++i) {
                    auto f = random_element(m, 2, rng);
                    left.push_back(multiply(e, f));
                    right.push_back(highest_weight_image(t, f));
                }
                if (element_rank(left, m) != ypoly_rank(right)) os << "rank transfer fails at T = " << t.str() << "; ";
            }
    return fail(os);
}

inline std::string check_multiplicities(std::uint64_t, int workers) {
    std::ostringstream os;
    MultiplicityOptions opt;
    opt.workers = workers;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n)
            for (const auto& la : partitions_of(m)) {
                auto a = multiplicity(n, m, la, opt);
                auto b = multiplicity_in_group_algebra(n, m, la);
                if (a != b) os << "m^" << la.str() << " of " << w_name(n, m) << ": " << a << " vs " << b << "; ";
            }
    return fail(os);
}

inline std::string check_dimensions(std::uint64_t, int workers) {
    std::ostringstream os;
    MultiplicityOptions opt;
    opt.workers = workers;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            auto d = dim_W(n, m, DimMethod::both, opt);
            if (latyshev_lower_bound(n, m) > d.value || d.value > omega_upper_bound(n, m))
                os << "bounds sandwich fails at " << w_name(n, m) << "; ";
            if (auto c = coprime_lower_bound(n, m); c && *c > d.value) os << "coprime bound fails at " << w_name(n, m) << "; ";
        }
    return fail(os);
}

inline std::string check_vanishing(std::uint64_t, int workers) {
    std::ostringstream os;
    MultiplicityOptions opt;
    opt.workers = workers;
    for (auto [n, K] : {std::pair{3, 1}, {4, 1}, {5, 1}}) {
        auto w = decompose_W(n, n + K, false, opt);
        for (const auto& [la, c] : w.terms())
            if (la.length() > 2 * K + 1) os << la.str() << " occurs in " << w_name(n, n + K) << "; ";
        Decomposition expect(n + 1, {{Partition{n + 1}, 1}, {Partition{n, 1}, 2}, {Partition{n - 1, 2}, 1},
                                     {Partition{n - 1, 1, 1}, 1}});
        if (w != expect) os << w_name(n, n + 1) << " = " << w.str() << "; ";
        if (multiplicity_upper_bounds(1, n) != w) os << "K = 1 upper bound is not tight at n = " << n << "; ";
    }
    return fail(os);
}

inline std::string check_pieri(std::uint64_t, int) {
    std::ostringstream os;
    const int k = 6;
    for (int total = 1; total <= 6; ++total)
        for (int l = 1; l <= total; ++l)
            for (const auto& la : partitions_of(total - l))
                if (young_rule(l, la) != schur_expand(complete_homogeneous(l, k) * schur_function(la, k)))
                    os << "young_rule(" << l << ", " << la.str() << "); ";
    return fail(os);
}

inline std::string check_zeta(std::uint64_t, int) {
    std::ostringstream os;
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k < n; ++k)
            if ((zeta_circulant_rank(n, k) == static_cast<std::size_t>(n)) != zeta_invertible(n, k))
                os << "order " << n << ", k = " << k << "; ";
    return fail(os);
}

inline std::string check_coefficients(std::uint64_t seed, int) {
    std::ostringstream os;
    std::mt19937_64 rng(seed);
    for (int r = 1; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s) {
            std::vector<Word> ms;
            for (int i = 0; i < r; ++i) ms.push_back(random_word(1 + static_cast<int>(rng() % 3), 3, rng));
            if (!p_shifted_identity_check(ms, s)) os << "P^(s) identity at r = " << r << ", s = " << s << "; ";
        }
    std::vector<Word> ms{Word{2}, Word{1, 1}};
    auto fit = coefficient_polynomial(ms, Word::parse("y1 y2 y1^7"), 8);
    for (const auto& [s, v] : fit.samples)
        if (v != 6 + s) os << "worked coefficient at s = " << s << " is " << v << "; ";
    auto bad = coefficient_polynomial({Word{2, 1, 2}, Word{2}}, Word::parse("y2 y1 y2^2 y1"), 8);
    if (!bad.residual) os << "non-polynomial example not flagged; ";
    for (int i = 0; i < 50; ++i) {
        Word u = random_word(2 + static_cast<int>(rng() % 6), 3, rng);
        auto c = central_part(u);
        if (!c) continue;
        for (int s = 0; s <= 4; ++s)
            if (central_part(shift_word(u, s))->length != c->length + s) os << "central run of " << u.str() << "; ";
    }
    return fail(os);
}

inline std::string check_dim_polynomials(std::uint64_t, int) {
    std::ostringstream os;
    for (int m = 1; m <= 5; ++m)
        for (const auto& la : partitions_of(m)) {
            auto q = derived_dim_polynomial(la);
            for (int d = 0; d <= 8; ++d)
                if (q(d) != Rational(irrep_dim_z(derive_partition(la, d)))) os << la.str() << " at d = " << d << "; ";
        }
    return fail(os);
}

// Known decomposition of W_{6,8}.
inline Decomposition w68_table() {
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

inline std::string check_nilpotency(std::uint64_t, int workers) {
    std::ostringstream os;
    MultiplicityOptions opt;
    opt.workers = workers;
    for (auto [n, d] : {std::pair{1, 1}, {2, 3}, {3, 6}}) {
        auto p = nilpotency_probe(n, std::nullopt, opt);
        if (!p.degree || *p.degree != d) os << "d(" << n << ") is not " << d << "; ";
    }
    return fail(os);
}

inline std::string check_w68(std::uint64_t, int workers) {
    std::ostringstream os;
    MultiplicityOptions opt;
    opt.workers = workers;
    auto w = decompose_W(6, 8, false, opt);
    if (w != w68_table()) os << "W_{6,8} = " << w.str() << "; ";
    if (w.dimension() != 1128) os << "dim W_{6,8} = " << w.dimension() << "; ";
    auto u = multiplicity_upper_bounds(2, 6, std::nullopt, workers);
    for (const auto& [la, c] : w.terms())
        if (u[la] < c) os << "upper bound at " << la.str() << "; ";
    return fail(os);
}

inline std::string check_stabilization(std::uint64_t, int workers) {
    std::ostringstream os;
    MultiplicityOptions opt;
    opt.workers = workers;
    auto r1 = stabilization_report(1, 3, 6, opt);
    if (r1.n_obs != 3) os << "K = 1 onset; ";
    auto r2 = stabilization_report(2, 6, 9, opt);
    if (r2.n_obs != 6) os << "K = 2 onset; ";
    std::map<int, Integer> s1, s2;
    for (std::size_t i = 0; i < r1.ns.size(); ++i) s1[r1.ns[i]] = r1.decompositions[i].dimension();
    for (std::size_t i = 0; i < r2.ns.size(); ++i) s2[r2.ns[i]] = r2.decompositions[i].dimension();
    auto f1 = fit_pK(1, s1);
    if (!f1.validated || f1.polynomial != RationalPolynomial({0, 1, 1})) os << "p_1 = " << f1.polynomial.str() << "; ";
    auto f2 = fit_pK(2, s2, std::make_pair(6, r2.decompositions[0]));
    RationalPolynomial p2({Rational(0), Rational(-1), Rational(3, 2), Rational(2), Rational(1, 2)});
    if (!f2.validated || f2.polynomial != p2) os << "p_2 = " << f2.polynomial.str() << "; ";
    return fail(os);
}

} // namespace detail

inline std::vector<Check> fast_checks() {
    using namespace detail;
    return {{"hook-dimensions", check_hooks},
            {"young-symmetrizers", check_symmetrizers},
            {"sandwich", [](std::uint64_t, int) { return check_sandwich(4); }},
            {"regev", check_regev},
            {"multiplicities", check_multiplicities},
            {"dimensions", check_dimensions},
            {"k1-decompositions", check_vanishing},
            {"pieri", check_pieri},
            {"zeta", check_zeta},
            {"coefficients", check_coefficients},
            {"derived-dimensions", check_dim_polynomials}};
}

inline std::vector<Check> full_checks() {
    using namespace detail;
    auto v = fast_checks();
    v.push_back({"sandwich-5", [](std::uint64_t, int) { return check_sandwich(5); }});
    v.push_back({"nilpotency-degree", check_nilpotency});
    v.push_back({"w68-table", check_w68});
    v.push_back({"stabilization", check_stabilization});
    return v;
}

inline int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.suite != "fast" && c.suite != "full") {
        err << "unknown suite '" << c.suite << "' (expected fast or full)\n";
        return bad_arguments;
    }
    auto checks = c.suite == "fast" ? fast_checks() : full_checks();
    int failed = 0, ran = 0;
    for (const auto& ch : checks) {
        if (!c.only.empty() && ch.name != c.only) continue;
        ++ran;
        std::string msg;
        try {
            msg = ch.run(c.seed, c.workers);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg.empty()) {
            out << "ok   " << ch.name << "\n";
        } else {
            ++failed;
            out << "FAIL " << ch.name << ": " << msg << "\n"
                << "     reproduce: tideal verify " << c.suite << " --seed " << c.seed << " --only " << ch.name << "\n";
        }
    }
    if (ran == 0) {
        err << "no check named '" << c.only << "'\n";
        return bad_arguments;
    }
    if (c.suite == "full" && (c.only.empty() || c.only == "w68-table") && !failed)
        out << w_name(6, 8) << " = " << detail::w68_table().str() << "\n";
    out << "verify " << c.suite << ": " << (ran - failed) << "/" << ran << " checks passed\n";
    return failed ? invariant_failure : ok;
}

// ---- commands -------------------------------------------------------------

inline void print(std::ostream& out, const RunConfig& c, const Json& j, const std::string& text) {
    if (c.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

inline int run_decompose(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<MultiplicityResult> details;
    auto w = decompose_W(c.n, c.m, c.prune, multiplicity_options(c, err), &details);
    bool certified = true;
    for (const auto& d : details) certified = certified && d.certified;
    Json j = {{"n", c.n}, {"m", c.m}, {"prune", c.prune}, {"decomposition", to_json(w)}, {"certified", certified}};
    std::ostringstream t;
    t << w_name(c.n, c.m) << " = " << w.str() << "\n" << "dim = " << w.dimension() << "\n";
    if (!certified) t << "warning: some ranks are modular lower bounds only\n";
    if (c.details) {
        Json d = Json::array();
        for (const auto& r : details) {
            d.push_back(to_json(r));
            t << "  " << r.shape.str() << ": " << r.value << " (" << r.method << ")\n";
        }
        j["details"] = d;
    }
    print(out, c, j, t.str());
    return ok;
}

inline int run_dim(const RunConfig& c, std::ostream& out, std::ostream& err) {
    DimMethod method;
    if (c.method == "direct")
        method = DimMethod::direct;
    else if (c.method == "multiplicities")
        method = DimMethod::via_multiplicities;
    else if (c.method == "both")
        method = DimMethod::both;
    else {
        err << "unknown method '" << c.method << "' (expected direct, multiplicities or both)\n";
        return bad_arguments;
    }
    RankPolicy policy;
    policy.primes = c.primes;
    policy.seed = c.seed;
    auto r = dim_W(c.n, c.m, method, multiplicity_options(c, err), policy);
    Json j = {{"n", c.n}, {"m", c.m}, {"method", c.method}, {"dimension", r.value.get_str()}, {"certified", r.certified}};
    if (r.direct) j["direct"] = {{"rank", r.direct->rank}, {"certified", r.direct->certified}, {"method", r.direct->method}};
    std::ostringstream t;
    t << "dim " << w_name(c.n, c.m) << " = " << r.value << (r.certified ? "" : " (uncertified lower bound)") << "\n";
    print(out, c, j, t.str());
    return ok;
}

inline int run_dprobe(const RunConfig& c, std::ostream& out, std::ostream& err) {
    auto p = nilpotency_probe(c.n, c.m_max, multiplicity_options(c, err));
    Json dims = Json::array();
    for (const auto& [m, d] : p.dims) dims.push_back({{"m", m}, {"dim", d.get_str()}});
    Json j = {{"n", c.n}, {"degree", p.degree ? Json(*p.degree) : Json(nullptr)}, {"dims", dims}};
    std::ostringstream t;
    if (p.degree)
        t << "d(" << c.n << ") = " << *p.degree << "\n";
    else
        t << "d(" << c.n << ") > " << p.dims.back().first << " (search stopped)\n";
    print(out, c, j, t.str());
    return p.degree ? ok : budget_exceeded;
}

inline int run_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
    Integer lo = latyshev_lower_bound(c.n, c.m), hi = omega_upper_bound(c.n, c.m);
    auto co = coprime_lower_bound(c.n, c.m);
    Json j = {{"n", c.n}, {"m", c.m}, {"latyshev_lower", lo.get_str()}, {"omega_upper", hi.get_str()},
              {"coprime_lower", co ? Json(co->get_str()) : Json(nullptr)}};
    std::ostringstream t;
    t << "latyshev lower bound: " << lo << "\n"
      << "coprime lower bound:  " << (co ? co->get_str() : "not applicable") << "\n"
      << "omega upper bound:    " << hi << "\n";
    int code = ok;
    if (c.check) {
        auto d = dim_W(c.n, c.m, DimMethod::via_multiplicities, multiplicity_options(c, err)).value;
        bool good = lo <= d && d <= hi && (!co || *co <= d);
        j["dimension"] = d.get_str();
        j["sandwich_holds"] = good;
        t << "dim " << w_name(c.n, c.m) << " = " << d << (good ? "" : "  BOUNDS VIOLATED") << "\n";
        if (!good) code = invariant_failure;
    }
    print(out, c, j, t.str());
    return code;
}

inline int run_upper(const RunConfig& c, std::ostream& out, std::ostream& err) {
    auto u = multiplicity_upper_bounds(c.K, c.n, c.nvars, c.workers);
    Json j = {{"K", c.K}, {"n", c.n}, {"nvars", c.nvars.value_or(2 * c.K + 2)}, {"upper_bounds", to_json(u)}};
    std::ostringstream t;
    t << "upper bounds for " << w_name(c.n, c.n + c.K) << ": " << u.str() << "\n";
    int code = ok;
    if (c.check) {
        auto w = decompose_W(c.n, c.n + c.K, true, multiplicity_options(c, err));
        bool good = true;
        for (const auto& [la, mult] : w.terms()) good = good && mult <= u[la];
        j["actual"] = to_json(w);
        j["dominates"] = good;
        t << "actual: " << w.str() << "\n" << (good ? "bounds dominate\n" : "BOUND VIOLATED\n");
        if (!good) code = invariant_failure;
    }
    print(out, c, j, t.str());
    return code;
}

inline int run_stabilize(const RunConfig& c, std::ostream& out, std::ostream& err) {
    auto r = stabilization_report(c.K, c.n_min, c.n_max, multiplicity_options(c, err), c.budget);
    Json j = to_json(r);
    std::ostringstream t;
    for (std::size_t i = 0; i < r.ns.size(); ++i)
        t << w_name(r.ns[i], r.ns[i] + c.K) << " = " << r.decompositions[i].str() << "\n";
    if (r.n_obs)
        t << "observed onset N_obs = " << *r.n_obs << (*r.n_obs == r.ns.back() ? " (last tested n, vacuous)" : "") << "\n";
    for (const auto& key : r.decreasing_families) t << "decreasing family with tail " << key.str() << "\n";
    if (r.incomplete) t << "incomplete: budget exhausted after n = " << (r.ns.empty() ? c.n_min - 1 : r.ns.back()) << "\n";
    if (c.fit && r.n_obs) {
        std::map<int, Integer> samples;
        for (std::size_t i = 0; i < r.ns.size(); ++i) samples[r.ns[i]] = r.decompositions[i].dimension();
        std::size_t at = static_cast<std::size_t>(*r.n_obs - r.ns.front());
        auto f = fit_pK(c.K, samples, std::make_pair(*r.n_obs, r.decompositions[at]));
        j["fit"] = to_json(f);
        t << "p_" << c.K << "(n) = " << f.polynomial.str() << (f.validated ? "" : "  (does not match all samples)") << "\n";
        auto band = growth_band(c.K, samples);
        j["growth_band"] = {band.low.get_str(), band.high.get_str()};
        t << "dim / n^" << 2 * c.K << " in [" << band.low << ", " << band.high << "]\n";
    }
    print(out, c, j, t.str());
    return r.incomplete ? budget_exceeded : ok;
}

inline int run_young_rule(const RunConfig& c, std::ostream& out, std::ostream&) {
    auto la = Partition::parse(c.shape);
    auto d = young_rule(c.l, la);
    Json j = {{"l", c.l}, {"shape", to_json(la)}, {"decomposition", to_json(d)}};
    print(out, c, j, "V^(" + std::to_string(c.l) + ") x V^" + la.str() + " = " + d.str() + "\n");
    return ok;
}

inline int run_zeta(const RunConfig& c, std::ostream& out, std::ostream& err) {
    bool inv = zeta_invertible(c.order, c.k);
    int g = std::gcd(c.k + 1, c.order);
    Json j = {{"order", c.order}, {"k", c.k}, {"gcd", g}, {"invertible", inv}};
    std::string text = std::string(inv ? "invertible" : "not invertible") + " (gcd(" + std::to_string(c.k + 1) + "," +
                       std::to_string(c.order) + ")=" + std::to_string(g) + ")\n";
    int code = ok;
    if (c.order <= 12) {
        bool oracle = zeta_circulant_rank(c.order, c.k) == static_cast<std::size_t>(c.order);
        j["circulant_full_rank"] = oracle;
        if (oracle != inv) {
            err << "circulant rank disagrees with the gcd criterion\n";
            code = invariant_failure;
        }
    }
    print(out, c, j, text);
    return code;
}

inline std::vector<Word> parse_blocks(const std::string& text) {
    std::vector<Word> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Word::parse(item));
    if (out.empty()) throw parse_error("no blocks given");
    return out;
}

inline int run_coeffpoly(const RunConfig& c, std::ostream& out, std::ostream&) {
    auto ms = parse_blocks(c.blocks);
    auto u = Word::parse(c.word);
    auto f = coefficient_polynomial(ms, u, c.s_max);
    std::ostringstream t;
    t << "c(s) =";
    for (const auto& [s, v] : f.samples) t << " " << v;
    t << "\nfit: " << f.polynomial.str() << (f.residual ? "  (does not predict the held-out samples)" : "") << "\n";
    print(out, c, to_json(f), t.str());
    return ok;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Multilinear consequences of x^n = 0: dimensions, decompositions and bounds", "tideal"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--workers", c.workers, "worker threads (default: $TIDEAL_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--primes", c.primes, "primes for modular ranks")->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "random seed");
    app.add_flag("--quiet", c.quiet, "no progress messages");

    auto nm = [&](CLI::App* s) {
        s->add_option("--n", c.n, "exponent n")->required()->check(CLI::PositiveNumber);
        s->add_option("--m", c.m, "degree m")->required()->check(CLI::PositiveNumber);
    };
    auto* dec = app.add_subcommand("decompose", "decompose W_{n,m} into irreducibles");
    nm(dec);
    dec->add_flag("!--no-prune", c.prune, "also compute shapes with more than 2(m-n)+1 rows");
    dec->add_flag("--details", c.details, "per-shape statistics");
    auto* dim = app.add_subcommand("dim", "dimension of W_{n,m}");
    nm(dim);
    dim->add_option("--method", c.method, "direct, multiplicities or both");
    auto* dp = app.add_subcommand("dprobe", "nilpotency degree d(n)");
    dp->add_option("--n", c.n, "exponent n")->required()->check(CLI::PositiveNumber);
    dp->add_option("--m-max", c.m_max, "largest degree to try (default n^2)");
    auto* bd = app.add_subcommand("bounds", "closed-form bounds on dim W_{n,m}");
    nm(bd);
    bd->add_flag("--check", c.check, "compute the dimension and test the bounds");
    auto* up = app.add_subcommand("upper", "GL upper bounds on multiplicities of W_{n,n+K}");
    up->add_option("--K", c.K, "m - n")->required()->check(CLI::NonNegativeNumber);
    up->add_option("--n", c.n, "exponent n")->required()->check(CLI::PositiveNumber);
    up->add_option("--k", c.nvars, "number of variables (default 2K+2)")->check(CLI::PositiveNumber);
    up->add_flag("--check", c.check, "compare against the computed decomposition");
    auto* st = app.add_subcommand("stabilize", "stabilization of W_{n,n+K} in n");
    st->add_option("--K", c.K, "m - n")->required()->check(CLI::NonNegativeNumber);
    st->add_option("--n-min", c.n_min, "first n")->required()->check(CLI::PositiveNumber);
    st->add_option("--n-max", c.n_max, "last n")->required()->check(CLI::PositiveNumber);
    st->add_option("--budget", c.budget, "seconds before stopping with a partial report");
    st->add_flag("--fit", c.fit, "fit p_K(n) = dim W_{n,n+K}");
    auto* yr = app.add_subcommand("young-rule", "V^(l) tensor V^lambda");
    yr->add_option("--l", c.l, "row length l")->required()->check(CLI::NonNegativeNumber);
    yr->add_option("--shape", c.shape, "lambda, e.g. (2,1)")->required();
    auto* ze = app.add_subcommand("zeta", "invertibility of e + g + ... + g^k in a cyclic group algebra");
    ze->add_option("--order", c.order, "group order")->required()->check(CLI::PositiveNumber);
    ze->add_option("--k", c.k, "top power k")->required()->check(CLI::NonNegativeNumber);
    auto* cp = app.add_subcommand("coeffpoly", "coefficient of u^(s) in P^(s) as a function of s");
    cp->add_option("--blocks", c.blocks, "comma-separated words, e.g. 'y2,y1^2'")->required();
    cp->add_option("--word", c.word, "the word u, e.g. 'y1 y2 y1^7'")->required();
    cp->add_option("--s-max", c.s_max, "largest s")->check(CLI::NonNegativeNumber);
    auto* vf = app.add_subcommand("verify", "run the property suites");
    vf->add_option("suite", c.suite, "fast or full")->required();
    vf->add_option("--only", c.only, "run a single named check");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return bad_arguments;
    }
    auto* sub = app.get_subcommands().front();
    c.command = sub->get_name();
    try {
        if (c.command == "decompose" || c.command == "dim" || c.command == "bounds")
            if (c.n > c.m) throw std::invalid_argument("need n <= m");
        if (c.command == "zeta" && c.k >= c.order) throw std::invalid_argument("need k < order");
        if (c.command == "upper" && c.n < c.K) throw std::invalid_argument("need n >= K");
        if (c.command == "decompose") return run_decompose(c, out, err);
        if (c.command == "dim") return run_dim(c, out, err);
        if (c.command == "dprobe") return run_dprobe(c, out, err);
        if (c.command == "bounds") return run_bounds(c, out, err);
        if (c.command == "upper") return run_upper(c, out, err);
        if (c.command == "stabilize") return run_stabilize(c, out, err);
        if (c.command == "young-rule") return run_young_rule(c, out, err);
        if (c.command == "zeta") return run_zeta(c, out, err);
        if (c.command == "coeffpoly") return run_coeffpoly(c, out, err);
        return run_verify(c, out, err);
    } catch (const cap_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const consistency_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return invariant_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << sub->help();
        return bad_arguments;
    }
}

} // namespace tideal::cli
