#include "dedekind/sums.hpp"

#include "dedekind/errors.hpp"
#include "dedekind/exact.hpp"
#include "dedekind/trig.hpp"

#include <algorithm>
#include <string>

namespace dedekind {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t k) {
    const std::int64_t q = a / k;
    return (a % k != 0 && ((a < 0) != (k < 0))) ? q - 1 : q;
}

int sign_of_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

void require_k(std::int64_t k) {
    if (k < 1) throw OutOfRange("k must be positive, got " + std::to_string(k));
}

void require_even_m(std::size_t m, const char* what) {
    if (m % 2 != 0) throw ParityViolation(std::string(what) + " requires m even, got m=" + std::to_string(m));
}

void require_k_parity(std::int64_t k, bool even, const char* what) {
    if ((k % 2 == 0) != even)
        throw ParityViolation(std::string(what) + " requires k " + (even ? "even" : "odd") + ", got k=" +
                              std::to_string(k));
}

std::vector<std::int64_t> ones(std::size_t m) { return std::vector<std::int64_t>(m, 1); }

std::vector<std::int64_t> inverses(const SumParams& p) {
    std::vector<std::int64_t> out;
    for (std::int64_t h : p.multipliers) out.push_back(mod_inverse(h, p.k));
    return out;
}

Real signed_power_of_two(int sign, unsigned exponent) { return sign * pow2(-static_cast<long>(exponent)); }

}  // namespace

unsigned SumParams::order_total() const {
    unsigned a = 0;
    for (unsigned r : orders) a += r;
    return a;
}

void SumParams::validate() const {
    require_k(k);
    if (multipliers.empty()) throw std::invalid_argument("at least one multiplier is required");
    for (std::int64_t h : multipliers) require_coprime(h, k);
    if (!orders.empty()) {
        if (orders.size() != multipliers.size())
            throw std::invalid_argument("need one Bernoulli order per multiplier");
        for (unsigned r : orders)
            if (r == 0) throw OutOfRange("Bernoulli orders must be positive");
    }
}

Rational dedekind_s(std::int64_t h, std::int64_t k) {
    require_k(k);
    Rational total(0);
    for (std::int64_t a = 1; a < k; ++a) total += sawtooth(Rational(a, k)) * sawtooth(Rational(a * h, k));
    return total;
}

Real dedekind_cot_rhs(std::int64_t h, std::int64_t k) {
    require_k(k);
    require_coprime(h, k);
    const TrigFactor factors[] = {TrigFactor::cot(1), TrigFactor::cot(h)};
    return trig_product_sum(factors, k) / (4 * k);
}

SeriesEstimate dedekind_series_rhs(std::int64_t h, std::int64_t k, std::uint64_t terms) {
    require_k(k);
    require_coprime(h, k);
    if (k == 1) return {Real(0), Real(0)};

    const auto uk = static_cast<std::uint64_t>(k);
    std::vector<Real> harmonic(k, Real(0));
    for (std::uint64_t r = 1; r <= terms; ++r)
        if (r % uk != 0) harmonic[r % uk] += Real(1) / Real(r);

    Real sum(0);
    for (std::int64_t b = 1; b < k; ++b) sum += cot_at(b * mod(h, k), k) * harmonic[b];
    const Real two_pi = 2 * pi();
    // a h runs over every nonzero residue, so max |cot| = cot(pi/k)
    const Real c = k * mp::abs(cot_at(1, k)) / two_pi;
    return {sum / two_pi, c / Real(terms)};
}

Rational homogeneous_dedekind_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    Rational total(0);
    for (std::int64_t a = 1; a < k; ++a) total += sawtooth(Rational(a * h1, k)) * sawtooth(Rational(a * h2, k));
    return total;
}

Real homogeneous_dedekind_rhs(std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    require_coprime(h1, k);
    require_coprime(h2, k);
    const TrigFactor factors[] = {TrigFactor::cot(h1), TrigFactor::cot(h2)};
    return trig_product_sum(factors, k) / (4 * k);
}

Rational zagier_sum_lhs(const SumParams& params, std::uint64_t work_limit) {
    params.validate();
    std::vector<ExactMap> maps;
    const ExactMap saw = sawtooth_map(params.k);
    for (std::int64_t h : params.multipliers) maps.push_back(dilate(saw, h));
    return theorem1_lhs(maps, ones(maps.size()), work_limit);
}

Real zagier_sum_rhs(const SumParams& params) {
    params.validate();
    const std::size_t m = params.m();
    require_even_m(m, "the cotangent form of the m-fold sawtooth sum");
    std::vector<TrigFactor> factors;
    for (std::int64_t h : inverses(params)) factors.push_back(TrigFactor::cot(h));
    const int sign = (m / 2) % 2 == 0 ? 1 : -1;
    return signed_power_of_two(sign, static_cast<unsigned>(m)) * trig_product_sum(factors, params.k) / params.k;
}

Rational bernoulli_sum_lhs(const SumParams& params, std::uint64_t work_limit) {
    params.validate();
    if (params.orders.empty()) throw std::invalid_argument("Bernoulli sums need orders");
    std::vector<ExactMap> maps;
    for (std::size_t j = 0; j < params.m(); ++j)
        maps.push_back(dilate(bernoulli_map(params.orders[j], params.k), params.multipliers[j]));
    return theorem1_lhs(maps, ones(maps.size()), work_limit);
}

Real bernoulli_sum_rhs(const SumParams& params, BernoulliConvention convention) {
    params.validate();
    if (params.orders.empty()) throw std::invalid_argument("Bernoulli sums need orders");
    const std::int64_t k = params.k;
    const std::size_t m = params.m();

    if (convention == BernoulliConvention::corrected) {
        std::vector<ComplexMap> transforms;
        for (unsigned r : params.orders) {
            ClosedFormParams cf;
            cf.order = r;
            cf.convention = BernoulliConvention::corrected;
            transforms.push_back(closed_form_dft(TransformCase::bernoulli, k, cf));
        }
        return theorem1_rhs_from_transforms(transforms, params.multipliers).re;
    }

    const unsigned total = params.order_total();
    if (total % 2 != 0)
        throw ParityViolation("r_1 + ... + r_m must be even, got " + std::to_string(total));
    // k^{A-m+1}
    Integer k_power(1);
    for (unsigned i = 0; i + m < total + 1; ++i) k_power *= k;

    Rational leading(1);
    Integer order_product(1);
    for (unsigned r : params.orders) {
        leading *= bernoulli_number(r);
        order_product *= r;
    }
    leading /= Rational(k_power);

    std::vector<TrigFactor> factors;
    const auto inv = inverses(params);
    for (std::size_t j = 0; j < m; ++j) factors.push_back(TrigFactor::cot(inv[j], params.orders[j] - 1));
    const int sign = (total / 2) % 2 == 0 ? 1 : -1;
    const Real coefficient = signed_power_of_two(sign, total) * to_real(Rational(order_product) / Rational(k_power));
    return to_real(leading) + coefficient * trig_product_sum(factors, k);
}

Rational bernoulli_pair_lhs(unsigned r1, unsigned r2, std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    if (r1 == 0 || r2 == 0) throw OutOfRange("Bernoulli orders must be positive");
    const BernoulliPoly p1 = bernoulli_poly(r1);
    const BernoulliPoly p2 = bernoulli_poly(r2);
    Rational total(0);
    for (std::int64_t a = 0; a < k; ++a)
        total += p1(frac(Rational(a * h1, k))) * p2(frac(Rational(a * h2, k)));
    return total;
}

Real bernoulli_pair_rhs(unsigned r1, unsigned r2, std::int64_t h1, std::int64_t h2, std::int64_t k,
                        BernoulliConvention convention) {
    require_k(k);
    require_coprime(h1, k);
    require_coprime(h2, k);
    if (r1 == 0 || r2 == 0) throw OutOfRange("Bernoulli orders must be positive");

    if (convention == BernoulliConvention::corrected) {
        ClosedFormParams cf;
        cf.convention = BernoulliConvention::corrected;
        cf.order = r1;
        const ComplexMap t1 = closed_form_dft(TransformCase::bernoulli, k, cf);
        cf.order = r2;
        const ComplexMap t2 = closed_form_dft(TransformCase::bernoulli, k, cf);
        Complex total;
        for (std::int64_t a = 0; a < k; ++a) total += t1(-a * h2) * t2(a * h1);
        return total.re / k;
    }

    const unsigned total = r1 + r2;
    if (total % 2 != 0) throw ParityViolation("r1 + r2 must be even, got " + std::to_string(total));
    Integer k_power(1);
    for (unsigned i = 0; i + 1 < total; ++i) k_power *= k;
    const Rational leading = bernoulli_number(r1) * bernoulli_number(r2) / Rational(k_power);
    const int sign = ((static_cast<int>(r1) - static_cast<int>(r2)) / 2) % 2 == 0 ? 1 : -1;
    const Real coefficient = signed_power_of_two(sign, total) * to_real(Rational(r1 * r2) / Rational(k_power));
    const TrigFactor factors[] = {TrigFactor::cot(h1, r1 - 1), TrigFactor::cot(h2, r2 - 1)};
    return to_real(leading) + coefficient * trig_product_sum(factors, k);
}

Rational hardy_sum(HardyKind which, std::int64_t h, std::int64_t k, ZeroResidue convention) {
    require_k(k);
    Rational total(0);
    const std::int64_t first = convention == ZeroResidue::include ? 0 : 1;
    for (std::int64_t a = first; a < k; ++a) {
        const std::int64_t fl = floor_div(a * h, k);
        switch (which) {
        case HardyKind::S: total += sign_of_power(a + 1 + fl); break;
        case HardyKind::s1: total += sign_of_power(fl) * sawtooth(Rational(a, k)); break;
        case HardyKind::s2:
            total += sign_of_power(a) * sawtooth(Rational(a, k)) * sawtooth(Rational(a * h, k));
            break;
        case HardyKind::s3: total += sign_of_power(a) * sawtooth(Rational(a * h, k)); break;
        case HardyKind::s4: total += sign_of_power(fl); break;
        case HardyKind::s5: total += sign_of_power(a + fl) * sawtooth(Rational(a, k)); break;
        }
    }
    return total;
}

Rational hardy_A_lhs(const SumParams& params, std::uint64_t work_limit) {
    params.validate();
    const std::int64_t k = params.k;
    require_k_parity(k, true, "A(h_1..h_m; k)");
    require_even_m(params.m(), "A(h_1..h_m; k)");
    const ExactMap saw = sawtooth_map(k);
    std::vector<ExactMap> maps;
    std::vector<Rational> first;
    for (std::int64_t a = 0; a < k; ++a)
        first.push_back(sign_of_power(a) * sawtooth(Rational(a * params.multipliers[0], k)));
    maps.emplace_back(std::move(first));
    for (std::size_t j = 1; j < params.m(); ++j) maps.push_back(dilate(saw, params.multipliers[j]));
    return theorem1_lhs(maps, ones(maps.size()), work_limit);
}

Real hardy_A_rhs(const SumParams& params) {
    params.validate();
    const std::int64_t k = params.k;
    const std::size_t m = params.m();
    require_k_parity(k, true, "A(h_1..h_m; k)");
    require_even_m(m, "A(h_1..h_m; k)");
    if (params.multipliers[0] % 2 == 0) throw ParityViolation("A(h_1..h_m; k) requires h_1 odd");
    const auto inv = inverses(params);
    std::vector<TrigFactor> factors{TrigFactor::tan(inv[0])};
    for (std::size_t j = 1; j < m; ++j) factors.push_back(TrigFactor::cot(inv[j]));
    const std::int64_t excluded[] = {k / 2};
    const int sign = (m / 2 - 1) % 2 == 0 ? 1 : -1;
    return signed_power_of_two(sign, static_cast<unsigned>(m)) * trig_product_sum(factors, k, excluded) / k;
}

Rational hardy_B_lhs(const SumParams& params, std::uint64_t work_limit) {
    params.validate();
    const std::int64_t k = params.k;
    require_k_parity(k, false, "B(h_1..h_m; k)");
    require_even_m(params.m(), "B(h_1..h_m; k)");
    const std::int64_t h1 = params.multipliers[0];
    std::vector<Rational> first{Rational(0)};
    for (std::int64_t a = 1; a < k; ++a) first.emplace_back(sign_of_power(a * h1 + k * floor_div(a * h1, k)));
    std::vector<ExactMap> maps;
    maps.emplace_back(std::move(first));
    const ExactMap saw = sawtooth_map(k);
    for (std::size_t j = 1; j < params.m(); ++j) maps.push_back(dilate(saw, params.multipliers[j]));
    return theorem1_lhs(maps, ones(maps.size()), work_limit);
}

Real hardy_B_rhs(const SumParams& params) {
    params.validate();
    const std::int64_t k = params.k;
    const std::size_t m = params.m();
    require_k_parity(k, false, "B(h_1..h_m; k)");
    require_even_m(m, "B(h_1..h_m; k)");
    const auto inv = inverses(params);
    std::vector<TrigFactor> factors{TrigFactor::tan(inv[0])};
    for (std::size_t j = 1; j < m; ++j) factors.push_back(TrigFactor::cot(inv[j]));
    const int sign = (m / 2) % 2 == 0 ? 1 : -1;
    return signed_power_of_two(sign, static_cast<unsigned>(m - 1)) * trig_product_sum(factors, k) / k;
}

Rational alternating_pair_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    Rational total(0);
    for (std::int64_t a = 1; a < k; ++a)
        total += sign_of_power(a) * sawtooth(Rational(a * h1, k)) * sawtooth(Rational(a * h2, k));
    return total;
}

Real alternating_pair_rhs(std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    require_k_parity(k, true, "the tan-cot form of sum (-1)^a ((a h1/k))((a h2/k))");
    if (h1 % 2 == 0) throw ParityViolation("requires h1 odd");
    require_coprime(h1, k);
    require_coprime(h2, k);
    return -tan_cot_sum(h2, h1, k) / (4 * k);
}

Rational signed_floor_pair_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    Rational total(0);
    for (std::int64_t a = 1; a < k; ++a) total += sign_of_power(a + floor_div(a * h1, k)) * sawtooth(Rational(a * h2, k));
    return total;
}

Rational floor_sign_pair_lhs(std::int64_t h1, std::int64_t h2, std::int64_t k) {
    require_k(k);
    Rational total(0);
    for (std::int64_t a = 1; a < k; ++a) total += sign_of_power(floor_div(a * h1, k)) * sawtooth(Rational(a * h2, k));
    return total;
}

Real tan_cot_sum(std::int64_t h_tan, std::int64_t h_cot, std::int64_t k) {
    require_k(k);
    require_coprime(h_tan, k);
    require_coprime(h_cot, k);
    std::vector<std::int64_t> excluded;
    if (k % 2 == 0)
        for (std::int64_t a = 1; a < k; ++a)
            if (2 * mod(a * h_tan, k) == k) excluded.push_back(a);
    const TrigFactor factors[] = {TrigFactor::tan(h_tan), TrigFactor::cot(h_cot)};
    return trig_product_sum(factors, k, excluded);
}

Real tan_square_sum(std::int64_t k) {
    require_k(k);
    require_k_parity(k, false, "sum tan^2(pi a/k) = k^2 - k");
    const TrigFactor factors[] = {TrigFactor::tan(1), TrigFactor::tan(1)};
    return trig_product_sum(factors, k);
}

IdentityReport hardy_s4_identity(std::int64_t h1, std::int64_t h2, std::int64_t k, const Real& tolerance) {
    require_k(k);
    require_k_parity(k, false, "sum (-1)^{a(h1+h2)} = (1/k) sum tan tan");
    require_coprime(h1, k);
    require_coprime(h2, k);
    Rational lhs(0);
    for (std::int64_t a = 1; a < k; ++a) lhs += sign_of_power(mod(a * h1, k) + mod(a * h2, k));
    const TrigFactor factors[] = {TrigFactor::tan(h1), TrigFactor::tan(h2)};
    const Real rhs = trig_product_sum(factors, k) / k;
    return IdentityReport::compare(
        "eq14", {{"h1", std::to_string(h1)}, {"h2", std::to_string(h2)}, {"k", std::to_string(k)}}, lhs, rhs,
        tolerance, "exponent read as (a h1 mod k) + (a h2 mod k)");
}

IdentityReport remark1_equivalence(std::int64_t h, std::int64_t k, const Real& tolerance) {
    require_k(k);
    require_k_parity(k, false, "the half-range s1 form");
    if (h % 2 != 0) throw ParityViolation("the half-range s1 form requires h even, got h=" + std::to_string(h));
    require_coprime(h, k);

    const Rational exact = hardy_sum(HardyKind::s1, h, k);

    Real half(0);
    for (std::int64_t j = 1; j <= (k - 1) / 2; ++j) half += tan_at(j, k) * cot_at(h * j, k);
    half /= k;

    const Real full = tan_cot_sum(1, h, k) / (2 * k);

    // -(1/2k) sum_{j != (k+1)/2} cot(pi h (2j-1)/2k) cot(pi (2j-1)/2k)
    Real odd_angles(0);
    for (std::int64_t j = 1; j <= k; ++j) {
        if (j == (k + 1) / 2) continue;
        odd_angles += cot_at(h * (2 * j - 1), 2 * k) * cot_at(2 * j - 1, 2 * k);
    }
    odd_angles /= -2 * k;

    const Real exact_r = to_real(exact);
    const Real gap_full = mp::abs(full - exact_r);
    const Real gap_odd = mp::abs(odd_angles - exact_r);
    IdentityReport report = IdentityReport::compare(
        "remark1", {{"h", std::to_string(h)}, {"k", std::to_string(k)}}, exact, half, tolerance,
        "rhs is the half-range form; full-range gap " + format_scientific(gap_full, 6) + ", odd-angle gap " +
            format_scientific(gap_odd, 6));
    report.set_residual(std::max({report.residual, gap_full, gap_odd}));
    return report;
}

}  // namespace dedekind
