#pragma once

// Hurwitz and periodic zeta functions, digamma, Lehmer's generalized Euler
// constants, and the finite evaluations of S(f) = sum_{r>=1} f(r)/r for odd
// periodic f.

#include "dedekind/numeric.hpp"
#include "dedekind/periodic.hpp"

#include <cstdint>
#include <vector>

namespace dedekind {

/// zeta(s, x) = sum_{n>=0} (n + x)^{-s}, Re s > 1, 0 < x <= 1.
/// Euler-Maclaurin with the shift and correction order chosen so that the
/// first omitted term is below 2^{-(bits+8)} relative to the result.
Complex hurwitz_zeta(const Complex& s, const Rational& x);
Complex riemann_zeta(const Complex& s);

/// F(s, x) = sum_{n>=1} e^{2 pi i n x} / n^s.
/// Re s > 1: k^{-s} sum_{a=1}^{k} e^{2 pi i a n/k} zeta(s, a/k) for x = n/k.
/// s = 1, x not an integer: -log(2 sin(pi x)) + i pi (1/2 - {x}).
Complex periodic_zeta(const Complex& s, const Rational& x);

/// max_n | dft(n -> F(s, n/k))(n) - k^{1-s} zeta(s, {n/k}) | (zeta(s) at multiples).
Real lemma1v_check(const Complex& s, std::int64_t k);

struct ZetaPairSides {
    Complex lhs;  ///< sum_{a=1}^{k-1} zeta(s1, {a h1/k}) zeta(s2, {a h2/k})
    Complex rhs;  ///< (k^{s1+s2-1} - 1) zeta(s1) zeta(s2) + k^{s1+s2-1} sum F(s1, a h2/k) F(s2, -a h1/k)
};

ZetaPairSides mikolas_D(const Complex& s1, const Complex& s2, std::int64_t h1, std::int64_t h2,
                        std::int64_t k);

/// psi(x) for rational x > 0.
Real digamma(const Rational& x);
Real euler_gamma();

/// gamma(r, k) = -(log k + psi(r/k)) / k for 1 <= r <= k; gamma(0, 1) is
/// accepted as Euler's constant.
Real euler_constant_gamma(std::int64_t r, std::int64_t k);
/// Slow oracle: sum_{n <= x, n = r (mod k)} 1/n - log(x)/k.
Real euler_constant_gamma_limit(std::int64_t r, std::int64_t k, std::uint64_t x);

class EulerConstantTable {
public:
    explicit EulerConstantTable(std::int64_t k);

    std::int64_t period() const { return k_; }
    /// gamma(r, k) for any integer r (periodic).
    const Real& operator()(std::int64_t r) const { return values_[static_cast<std::size_t>(mod(r, k_))]; }
    ComplexMap as_map() const;

private:
    std::int64_t k_;
    std::vector<Real> values_;  ///< index r mod k
};

/// max_n | dft(r -> gamma(r, k))(n) - closed form |, the closed form being
/// F(1, -n/k) off the multiples of k and Euler's constant on them.
Real gamma_dft_check(std::int64_t k);

/// Four finite evaluations of S(f) for an odd k-periodic f.
struct SeriesForms {
    Complex cot_form;            ///< (pi/2k) sum_{r=1}^{k-1} f(r) cot(pi r/k)
    Complex transform_form;      ///< -(pi i/k^2) sum_{r=1}^{k-1} r dft(f)(r)
    Complex lehmer_form;         ///< sum_{r=1}^{k} f(r) gamma(r, k)
    Complex periodic_zeta_form;  ///< -(1/k) sum_{r=1}^{k-1} dft(f)(r) F(1, -r/k)

    Real max_pairwise_gap() const;
};

/// Throws NotOdd unless f(-n) = -f(n) over one period.
SeriesForms series_S(const ExactMap& f);
SeriesForms series_S(const ComplexMap& f, const Real& parity_tolerance);

/// sum_{r=1}^{terms} f(r)/r
Complex series_partial_sum(const ComplexMap& f, std::uint64_t terms);
/// Abel-summation bound on |S(f) - series_partial_sum(f, terms)|:
/// 2 max_i |f(1) + ... + f(i)| / (terms + 1).
Real series_tail_bound(const ComplexMap& f, std::uint64_t terms);

}  // namespace dedekind
