#include "dedekind/exact.hpp"

#include "dedekind/errors.hpp"

#include <numeric>
#include <string>

namespace dedekind {

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.backend().data(), mpq_numref(q.backend().data()), mpq_denref(q.backend().data()));
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational sawtooth(const Rational& q) {
    if (mp::denominator(q) == 1) return Rational(0);
    return frac(q) - Rational(1, 2);
}

BernoulliTable& BernoulliTable::shared() {
    static BernoulliTable table;
    return table;
}

Rational BernoulliTable::operator[](unsigned r) {
    {
        std::shared_lock lock(mutex_);
        if (r < cache_.size()) return cache_[r];
    }
    std::unique_lock lock(mutex_);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    while (cache_.size() <= r) {
        const unsigned n = static_cast<unsigned>(cache_.size());
        Rational acc(0);
        Integer binom(1);  // C(n+1, 0)
        for (unsigned j = 0; j < n; ++j) {
            acc += Rational(binom) * cache_[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        cache_.push_back(-acc / Rational(n + 1));
    }
    return cache_[r];
}

Rational bernoulli_number(unsigned r) { return BernoulliTable::shared()[r]; }

Rational BernoulliPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BernoulliPoly bernoulli_poly(unsigned r) {
    BernoulliPoly p;
    p.degree = r;
    p.coefficients.assign(r + 1, Rational(0));
    Integer binom(1);  // C(r, j)
    for (unsigned j = 0; j <= r; ++j) {
        p.coefficients[r - j] = Rational(binom) * bernoulli_number(j);
        binom = binom * (r - j) / (j + 1);
    }
    return p;
}

Rational bernoulli_bar(unsigned r, const Rational& q) {
    if (r == 0) return Rational(1);
    const Rational x = frac(q);
    if (r == 1) return x - Rational(1, 2);
    return bernoulli_poly(r)(x);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_inverse(std::int64_t h, std::int64_t k) {
    if (k <= 0) throw OutOfRange("mod_inverse: modulus must be positive");
    if (gcd(h, k) != 1)
        throw NotCoprime("gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") != 1");
    if (k == 1) return 1;
    std::int64_t old_r = mod(h, k), r = k;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return mod(old_s, k);
}

}  // namespace dedekind
