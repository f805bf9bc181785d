#pragma once

// Exact side of every identity: fractional part, sawtooth, Bernoulli
// numbers, polynomials and functions, modular inverses.

#include "dedekind/numeric.hpp"

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace dedekind {

Integer floor(const Rational& q);
/// q - floor(q), in [0, 1).
Rational frac(const Rational& q);
/// ((q)): frac(q) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& q);

/// Memoized Bernoulli numbers B_0, B_1 = -1/2, B_2, ... Safe for concurrent
/// readers; extension happens under an exclusive lock.
class BernoulliTable {
public:
    static BernoulliTable& shared();
    Rational operator[](unsigned r);

private:
    std::shared_mutex mutex_;
    std::vector<Rational> cache_{Rational(1)};
};

Rational bernoulli_number(unsigned r);

/// B_r(x) with coefficients in ascending powers of x.
struct BernoulliPoly {
    unsigned degree = 0;
    std::vector<Rational> coefficients;

    Rational operator()(const Rational& x) const;
};

BernoulliPoly bernoulli_poly(unsigned r);
/// B_r({q}), the periodic Bernoulli function.
Rational bernoulli_bar(unsigned r, const Rational& q);

/// Least nonnegative residue of a modulo k (k > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t k) {
    const std::int64_t r = a % k;
    return r < 0 ? r + k : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);
/// h' in [1, k-1] with h h' = 1 (mod k); 1 when k = 1. Throws NotCoprime.
std::int64_t mod_inverse(std::int64_t h, std::int64_t k);

}  // namespace dedekind
