#pragma once

// Independent reference values for the unit tests. Everything here goes
// straight to MPFR and never through the library's own evaluation paths.

#include "dedekind/numeric.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace dedekind::testing {

inline Real sqrt_of(long n) { return mp::sqrt(Real(n)); }

inline Real mpfr_zeta_real(const Real& s) {
    Real out;
    mpfr_zeta(out.backend().data(), s.backend().data(), MPFR_RNDN);
    return out;
}

inline Real mpfr_digamma_real(const Real& x) {
    Real out;
    mpfr_digamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

inline Real mpfr_cot_real(const Real& x) {
    Real out;
    mpfr_cot(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

inline Real mpfr_pi() {
    Real out;
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
}

inline Real mpfr_euler() {
    Real out;
    mpfr_const_euler(out.backend().data(), MPFR_RNDN);
    return out;
}

inline Real mpfr_catalan() {
    Real out;
    mpfr_const_catalan(out.backend().data(), MPFR_RNDN);
    return out;
}

inline bool close(const Real& a, const Real& b, const Real& tol) { return mp::abs(a - b) < tol; }
inline bool close(const Complex& a, const Complex& b, const Real& tol) { return abs(a - b) < tol; }

/// Small random rationals p/q with |p| <= 9, 1 <= q <= 9.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

inline std::int64_t random_coprime(std::mt19937_64& rng, std::int64_t k) {
    std::uniform_int_distribution<std::int64_t> pick(-3 * k, 3 * k);
    while (true) {
        const std::int64_t h = pick(rng);
        if (std::gcd(h, k) == 1) return h;
    }
}

}  // namespace dedekind::testing
