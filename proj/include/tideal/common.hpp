#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tideal {

using Rational = mpq_class;
using Integer = mpz_class;

struct degree_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal cross-check fails. Never expected in a correct build.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::uint64_t factorial(int m) {
    if (m < 0 || m > 20) throw std::out_of_range("factorial argument out of range");
    std::uint64_t r = 1;
    for (int i = 2; i <= m; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

inline Integer factorial_z(int m) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

inline Integer binomial_z(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace tideal
