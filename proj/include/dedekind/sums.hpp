#pragma once

// Dedekind, Dedekind-Bernoulli and Hardy sums, each in its definitional
// (exact, brute-force) form and its finite trigonometric form.
//
// Exact left-hand sides enumerate O(k^{m-1}) tuples and refuse to start when
// that exceeds the work limit. Trigonometric right-hand sides cost O(k).

#include "dedekind/periodic.hpp"
#include "dedekind/report.hpp"

#include <cstdint>
#include <vector>

namespace dedekind {

/// Whether a = 0 (mod k) contributes to "sum over a mod k". Only S and s4
/// have a nonzero a = 0 term; the trigonometric identities range over
/// a = 1..k-1.
enum class ZeroResidue { include, exclude };

struct SumParams {
    std::int64_t k = 1;
    std::vector<std::int64_t> multipliers;
    std::vector<unsigned> orders;  ///< Bernoulli sums only
    ZeroResidue convention = ZeroResidue::exclude;

    std::size_t m() const { return multipliers.size(); }
    /// r_1 + ... + r_m
    unsigned order_total() const;
    /// k >= 1, m >= 1, gcd(h_j, k) = 1; orders (if present) match m and are >= 1.
    void validate() const;
};

// ---- classical Dedekind sum ------------------------------------------------

Rational dedekind_s(std::int64_t h, std::int64_t k);
/// (1/4k) sum_{a=1}^{k-1} cot(pi a/k) cot(pi a h/k)
Real dedekind_cot_rhs(std::int64_t h, std::int64_t k);

struct SeriesEstimate {
    Real value;
    Real tail_bound;
};

/// (1/2 pi) sum_{r <= terms, k !| r} cot(pi r h/k)/r with tail bound C(k)/terms,
/// C(k) = k max_r |cot(pi r h/k)| / (2 pi).
SeriesEstimate dedekind_series_rhs(std::int64_t h, std::int64_t k, std::uint64_t terms);

/// sum_{a=1}^{k-1} ((a h1/k)) ((a h2/k)) and its cotangent form.
Rational homogeneous_dedekind_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k);
Real homogeneous_dedekind_rhs(std::int64_t h1, std::int64_t h2, std::int64_t k);

// ---- higher-dimensional sums -------------------------------------------------

/// sum_{a_1+...+a_m = 0 (mod k)} prod_j ((a_j h_j / k))
Rational zagier_sum_lhs(const SumParams& params, std::uint64_t work_limit = kDefaultWorkLimit);
/// (-1)^{m/2} / (2^m k) sum_{a=1}^{k-1} prod_j cot(pi a h_j'/k); m even.
Real zagier_sum_rhs(const SumParams& params);

/// sum_{a_1+...+a_m = 0 (mod k)} prod_j B_{r_j}({a_j h_j / k})
Rational bernoulli_sum_lhs(const SumParams& params, std::uint64_t work_limit = kDefaultWorkLimit);
/// paper: B_{r_1}...B_{r_m}/k^{A-m+1}
///        + (-1)^{A/2} r_1...r_m/(2^A k^{A-m+1}) sum_{a=1}^{k-1} prod_j cot^{(r_j-1)}(pi a h_j'/k),
///        A = r_1 + ... + r_m even.
/// corrected: the convolution identity evaluated on the corrected closed-form
///        Bernoulli transforms; valid for every A.
Real bernoulli_sum_rhs(const SumParams& params, BernoulliConvention convention);

/// sum_{a mod k} B_{r1}({a h1/k}) B_{r2}({a h2/k})
Rational bernoulli_pair_lhs(unsigned r1, unsigned r2, std::int64_t h1, std::int64_t h2, std::int64_t k);
/// paper: B_{r1}B_{r2}/k^{A-1} + (-1)^{(r1-r2)/2} r1 r2/(2^A k^{A-1})
///        sum_{a=1}^{k-1} cot^{(r1-1)}(pi a h1/k) cot^{(r2-1)}(pi a h2/k), A = r1 + r2 even.
/// corrected: (1/k) sum_a T1(-a h2) T2(a h1) with corrected closed-form transforms.
Real bernoulli_pair_rhs(unsigned r1, unsigned r2, std::int64_t h1, std::int64_t h2, std::int64_t k,
                        BernoulliConvention convention);

// ---- Hardy sums ----------------------------------------------------------------

enum class HardyKind { S, s1, s2, s3, s4, s5 };

Rational hardy_sum(HardyKind which, std::int64_t h, std::int64_t k,
                   ZeroResidue convention = ZeroResidue::exclude);

/// A(h_1..h_m; k) = sum_{a_1+...+a_m = 0} (-1)^{a_1} prod_j ((a_j h_j/k)); k, m even, h_1 odd.
Rational hardy_A_lhs(const SumParams& params, std::uint64_t work_limit = kDefaultWorkLimit);
/// (-1)^{m/2-1}/(2^m k) sum_{a != k/2} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)
Real hardy_A_rhs(const SumParams& params);

/// B(h_1..h_m; k) = sum_{a_1 != 0, a_1+...+a_m = 0} (-1)^{a_1 h_1 + k floor(a_1 h_1/k)}
///                  prod_{j>=2} ((a_j h_j/k)); k odd, m even.
Rational hardy_B_lhs(const SumParams& params, std::uint64_t work_limit = kDefaultWorkLimit);
/// (-1)^{m/2}/(2^{m-1} k) sum_{a=1}^{k-1} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)
Real hardy_B_rhs(const SumParams& params);

/// sum_{a=1}^{k-1} (-1)^a ((a h1/k)) ((a h2/k)); k even.
Rational alternating_pair_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k);
/// -(1/4k) sum_{a != k/2} tan(pi a h2/k) cot(pi a h1/k)
Real alternating_pair_rhs(std::int64_t h1, std::int64_t h2, std::int64_t k);

/// sum_{a=1}^{k-1} (-1)^{a + floor(a h1/k)} ((a h2/k))
Rational signed_floor_pair_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k);
/// sum_{a=1}^{k-1} (-1)^{floor(a h1/k)} ((a h2/k))
Rational floor_sign_pair_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k);
/// sum_{a=1}^{k-1} tan(pi a h_tan/k) cot(pi a h_cot/k), skipping the tan pole a h_tan = k/2.
Real tan_cot_sum(std::int64_t h_tan, std::int64_t h_cot, std::int64_t k);

/// sum_{a=1}^{k-1} tan^2(pi a/k), k odd.
Real tan_square_sum(std::int64_t k);

/// sum_{a=1}^{k-1} (-1)^{(a h1 mod k) + (a h2 mod k)} vs (1/k) sum tan(pi a h1/k) tan(pi a h2/k); k odd.
IdentityReport hardy_s4_identity(std::int64_t h1, std::int64_t h2, std::int64_t k,
                                 const Real& tolerance = default_tolerance());

/// s1(h, k) for k odd, h even: exact value against the half-range form
/// (1/k) sum_{j=1}^{(k-1)/2} tan(pi j/k) cot(pi h j/k), the full-range form
/// (1/2k) sum_{a=1}^{k-1} tan(pi a/k) cot(pi a h/k), and the half-odd-angle
/// cotangent form.
IdentityReport remark1_equivalence(std::int64_t h, std::int64_t k,
                                   const Real& tolerance = default_tolerance());

}  // namespace dedekind
