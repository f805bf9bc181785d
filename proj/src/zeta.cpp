#include "dedekind/zeta.hpp"

#include "dedekind/errors.hpp"
#include "dedekind/exact.hpp"
#include "dedekind/trig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dedekind {

namespace {

void require_convergent(const Complex& s) {
    if (!(s.re > 1))
        throw ConvergenceDomain("requires Re s > 1, got s = " + format_complex(s, 12));
}

bool is_one(const Complex& s) { return s.re == 1 && s.im == 0; }

double magnitude(const Complex& z) { return static_cast<double>(abs(z)); }

// y^{-s} for real y > 0
Complex inverse_power(const Real& y, const Complex& s) {
    if (s.im == 0) return Complex(mp::pow(y, -s.re));
    return pow(y, -s);
}

}  // namespace

Complex hurwitz_zeta(const Complex& s, const Rational& x) {
    require_convergent(s);
    if (x <= 0 || x > 1) throw OutOfRange("hurwitz_zeta: x must lie in (0, 1]");

    const unsigned bits = working_precision();
    const Real eps = pow2(-static_cast<long>(bits) - 8);
    const Real xr = to_real(x);
    const Complex one(Real(1));
    auto shift = static_cast<std::int64_t>(std::ceil(0.15 * bits + 2.0 * magnitude(s))) + 8;

    while (true) {
        Complex direct;
        for (std::int64_t n = 0; n < shift; ++n) direct += inverse_power(xr + n, s);

        const Real y = xr + shift;
        const Complex ys = inverse_power(y, s);
        Complex tail = ys * y / (s - one);
        tail += ys / Real(2);
        // P_j = s (s+1) ... (s+2j-2) / (2j)! * y^{-s-2j+1}
        Complex p = s * ys / (2 * y);
        const Real y2 = y * y;
        Real previous(-1);
        bool converged = false;
        for (unsigned j = 1; j < 4 * bits; ++j) {
            const Complex term = p * to_real(bernoulli_number(2 * j));
            const Real size = abs(term);
            tail += term;
            if (size <= eps * abs(direct + tail)) {
                converged = true;
                break;
            }
            if (previous >= 0 && size > previous) break;  // asymptotic series turned
            previous = size;
            const Complex a = s + Complex(Real(2 * j - 1));
            const Complex b = s + Complex(Real(2 * j));
            p = p * a * b / (Real((2 * j + 1) * (2 * j + 2)) * y2);
        }
        if (converged) return direct + tail;
        shift *= 2;
    }
}

Complex riemann_zeta(const Complex& s) { return hurwitz_zeta(s, Rational(1)); }

Complex periodic_zeta(const Complex& s, const Rational& x) {
    if (is_one(s)) {
        const Rational f = frac(x);
        if (f == 0) throw ConvergenceDomain("F(1, x) diverges for integer x");
        const Real fx = to_real(f);
        const Real two_sin = 2 * mp::sin(pi() * fx);
        return Complex(-mp::log(two_sin), pi() * (Real(0.5) - fx));
    }
    require_convergent(s);
    const std::int64_t k = static_cast<std::int64_t>(mp::denominator(x));
    const std::int64_t n = mod(static_cast<std::int64_t>(mp::numerator(x) % k), k);
    Complex total;
    for (std::int64_t a = 1; a <= k; ++a) {
        const Complex phase = unit_phase(2 * pi() * mod(a * n, k) / k);
        total += phase * hurwitz_zeta(s, Rational(a, k));
    }
    if (k == 1) return total;
    return total * inverse_power(Real(k), s);
}

Real lemma1v_check(const Complex& s, std::int64_t k) {
    require_convergent(s);
    ClosedFormParams params;
    params.s = s;
    const ComplexMap transformed = dft(defining_map(TransformCase::periodic_zeta, k, params));
    const ComplexMap closed = closed_form_dft(TransformCase::periodic_zeta, k, params);
    Real worst(0);
    for (std::int64_t n = 0; n < k; ++n) worst = std::max(worst, abs(transformed(n) - closed(n)));
    return worst;
}

ZetaPairSides mikolas_D(const Complex& s1, const Complex& s2, std::int64_t h1, std::int64_t h2,
                        std::int64_t k) {
    require_convergent(s1);
    require_convergent(s2);
    if (k <= 0) throw OutOfRange("k must be positive");
    require_coprime(h1, k);
    require_coprime(h2, k);

    ZetaPairSides out;
    for (std::int64_t a = 1; a < k; ++a)
        out.lhs += hurwitz_zeta(s1, frac(Rational(a * h1, k))) * hurwitz_zeta(s2, frac(Rational(a * h2, k)));

    const Complex scale = pow(Real(k), s1 + s2 - Complex(Real(1)));
    Complex sum;
    for (std::int64_t a = 1; a < k; ++a)
        sum += periodic_zeta(s1, Rational(a * h2, k)) * periodic_zeta(s2, Rational(-a * h1, k));
    out.rhs = (scale - Complex(Real(1))) * riemann_zeta(s1) * riemann_zeta(s2) + scale * sum;
    return out;
}

Real digamma(const Rational& x) {
    if (x <= 0) throw NonPositiveArgument("digamma requires x > 0");
    const unsigned bits = working_precision();
    const Real eps = pow2(-static_cast<long>(bits) - 8);
    const Rational threshold(static_cast<long>(0.15 * bits) + 10);

    // psi(x) = psi(x + n) - sum_{j<n} 1/(x + j)
    Rational y = x;
    Real shift_sum(0);
    while (y < threshold) {
        shift_sum += 1 / to_real(y);
        y += 1;
    }
    const Real yr = to_real(y);
    Real result = mp::log(yr) - 1 / (2 * yr);
    const Real inv_y2 = 1 / (yr * yr);
    Real power = inv_y2;
    for (unsigned j = 1; j < 4 * bits; ++j) {
        const Real term = to_real(bernoulli_number(2 * j)) * power / (2 * j);
        result -= term;
        if (mp::abs(term) <= eps * mp::abs(result)) break;
        power *= inv_y2;
    }
    return result - shift_sum;
}

Real euler_gamma() {
    Real g;
    mpfr_const_euler(g.backend().data(), MPFR_RNDN);
    return g;
}

Real euler_constant_gamma(std::int64_t r, std::int64_t k) {
    if (k <= 0) throw OutOfRange("gamma(r, k): k must be positive");
    if (r == 0 && k == 1) r = 1;
    if (r < 1 || r > k)
        throw OutOfRange("gamma(r, k) needs 1 <= r <= k, got r=" + std::to_string(r) + ", k=" + std::to_string(k));
    return -(mp::log(Real(k)) + digamma(Rational(r, k))) / k;
}

Real euler_constant_gamma_limit(std::int64_t r, std::int64_t k, std::uint64_t x) {
    if (k <= 0 || r < 1 || r > k) throw OutOfRange("gamma(r, k) needs 1 <= r <= k");
    Real sum(0);
    for (std::uint64_t n = static_cast<std::uint64_t>(r); n <= x; n += static_cast<std::uint64_t>(k))
        sum += Real(1) / Real(n);
    return sum - mp::log(Real(x)) / k;
}

EulerConstantTable::EulerConstantTable(std::int64_t k) : k_(k) {
    if (k <= 0) throw OutOfRange("EulerConstantTable: k must be positive");
    values_.resize(static_cast<std::size_t>(k));
    for (std::int64_t r = 1; r <= k; ++r) values_[static_cast<std::size_t>(r % k)] = euler_constant_gamma(r, k);
}

ComplexMap EulerConstantTable::as_map() const {
    std::vector<Complex> v;
    for (const auto& g : values_) v.emplace_back(g);
    return ComplexMap(std::move(v));
}

Real gamma_dft_check(std::int64_t k) {
    const ComplexMap transformed = dft(EulerConstantTable(k).as_map());
    const Real gamma = euler_gamma();
    Real worst(0);
    for (std::int64_t n = 0; n < k; ++n) {
        const Complex closed = n == 0 ? Complex(gamma) : periodic_zeta(Complex(Real(1)), Rational(-n, k));
        worst = std::max(worst, abs(transformed(n) - closed));
    }
    return worst;
}

Real SeriesForms::max_pairwise_gap() const {
    const Complex* forms[] = {&cot_form, &transform_form, &lehmer_form, &periodic_zeta_form};
    Real worst(0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) worst = std::max(worst, abs(*forms[i] - *forms[j]));
    return worst;
}

namespace {

SeriesForms series_forms(const ComplexMap& f) {
    const std::int64_t k = f.period();
    const ComplexMap transformed = dft(f);
    const Real kr(k);
    SeriesForms out;

    for (std::int64_t r = 1; r < k; ++r) out.cot_form += f(r) * cot_at(r, k);
    out.cot_form *= pi() / (2 * kr);

    for (std::int64_t r = 1; r < k; ++r) out.transform_form += transformed(r) * Real(r);
    out.transform_form = Complex(Real(0), -pi() / (kr * kr)) * out.transform_form;

    const EulerConstantTable gammas(k);
    for (std::int64_t r = 1; r <= k; ++r) out.lehmer_form += f(r) * gammas(r);

    for (std::int64_t r = 1; r < k; ++r)
        out.periodic_zeta_form += transformed(r) * periodic_zeta(Complex(Real(1)), Rational(-r, k));
    out.periodic_zeta_form = -out.periodic_zeta_form / kr;
    return out;
}

}  // namespace

SeriesForms series_S(const ExactMap& f) {
    if (!f.holds(Parity::odd)) throw NotOdd("S(f) requires an odd periodic map (hence sum f(r) = 0)");
    return series_forms(promote(f));
}

SeriesForms series_S(const ComplexMap& f, const Real& parity_tolerance) {
    for (std::int64_t n = 0; n < f.period(); ++n)
        if (abs(f(n) + f(-n)) > parity_tolerance)
            throw NotOdd("S(f) requires an odd periodic map (hence sum f(r) = 0)");
    return series_forms(f);
}

Complex series_partial_sum(const ComplexMap& f, std::uint64_t terms) {
    const std::int64_t k = f.period();
    std::vector<Real> harmonic(static_cast<std::size_t>(k), Real(0));
    for (std::uint64_t r = 1; r <= terms; ++r) harmonic[r % static_cast<std::uint64_t>(k)] += Real(1) / Real(r);
    Complex total;
    for (std::int64_t b = 0; b < k; ++b) total += f(b) * harmonic[static_cast<std::size_t>(b)];
    return total;
}

Real series_tail_bound(const ComplexMap& f, std::uint64_t terms) {
    Complex prefix;
    Real worst(0);
    for (std::int64_t i = 1; i <= f.period(); ++i) {
        prefix += f(i);
        worst = std::max(worst, abs(prefix));
    }
    return 2 * worst / Real(terms + 1);
}

}  // namespace dedekind
