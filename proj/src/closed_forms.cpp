#include "dedekind/periodic.hpp"
#include "dedekind/trig.hpp"
#include "dedekind/zeta.hpp"

#include <string>

namespace dedekind {

namespace {

// i^r
Complex i_power(unsigned r) {
    switch (r % 4) {
    case 0: return Complex(Real(1));
    case 1: return Complex(Real(0), Real(1));
    case 2: return Complex(Real(-1));
    default: return Complex(Real(0), Real(-1));
    }
}

Rational k_power(std::int64_t k, unsigned e) {
    Integer p(1);
    for (unsigned i = 0; i < e; ++i) p *= k;
    return Rational(p);
}

}  // namespace

ComplexMap defining_map(TransformCase kind, std::int64_t k, const ClosedFormParams& params) {
    switch (kind) {
    case TransformCase::sawtooth: return promote(sawtooth_map(k));
    case TransformCase::bernoulli: return promote(bernoulli_map(params.order, k));
    case TransformCase::alt_sawtooth: return promote(alt_sawtooth_map(k));
    case TransformCase::alt_sign: return promote(alt_sign_map(k));
    case TransformCase::periodic_zeta: {
        std::vector<Complex> v;
        for (std::int64_t n = 0; n < k; ++n) v.push_back(periodic_zeta(params.s, Rational(n, k)));
        return ComplexMap(std::move(v));
    }
    }
    throw std::invalid_argument("unknown transform case");
}

ComplexMap closed_form_dft(TransformCase kind, std::int64_t k, const ClosedFormParams& params) {
    if (k <= 0) throw OutOfRange("period must be positive");
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(k));
    Parity parity = Parity::none;

    switch (kind) {
    case TransformCase::sawtooth:
        parity = Parity::odd;
        for (std::int64_t n = 0; n < k; ++n)
            out.push_back(n == 0 ? Complex() : Complex(Real(0), cot_at(n, k) / 2));
        break;

    case TransformCase::bernoulli: {
        const unsigned r = params.order;
        if (r == 0) throw OutOfRange("Bernoulli transform needs order r >= 1");
        const Rational scale = k_power(k, r - 1);  // k^{r-1}
        const Complex at_multiples = Complex::from(bernoulli_number(r) / scale);
        // r k^{1-r} (i/2)^r
        const Complex coefficient = i_power(r) * to_real(Rational(r) / (scale * k_power(2, r)));
        const bool shift = r == 1 && params.convention == BernoulliConvention::corrected;
        for (std::int64_t n = 0; n < k; ++n) {
            if (n == 0) {
                out.push_back(at_multiples);
                continue;
            }
            Complex v = coefficient * cot_deriv_at(r - 1, n, k);
            if (shift) v.re -= Real(0.5);
            out.push_back(std::move(v));
        }
        if (r >= 2) parity = r % 2 == 0 ? Parity::even : Parity::odd;
        break;
    }

    case TransformCase::alt_sawtooth:
        if (k % 2 != 0) throw ParityViolation("alternating sawtooth transform requires k even, got k=" + std::to_string(k));
        parity = Parity::odd;
        for (std::int64_t n = 0; n < k; ++n)
            out.push_back(2 * n == k ? Complex() : Complex(Real(0), -tan_at(n, k) / 2));
        break;

    case TransformCase::alt_sign:
        if (k % 2 == 0) throw ParityViolation("alternating sign transform requires k odd, got k=" + std::to_string(k));
        parity = Parity::odd;
        for (std::int64_t n = 0; n < k; ++n) out.push_back(Complex(Real(0), tan_at(n, k)));
        break;

    case TransformCase::periodic_zeta: {
        const Complex scale = pow(Real(k), Complex(Real(1)) - params.s);
        for (std::int64_t n = 0; n < k; ++n) {
            const Rational x = n == 0 ? Rational(1) : Rational(n, k);
            out.push_back(scale * hurwitz_zeta(params.s, x));
        }
        break;
    }
    }
    return ComplexMap(std::move(out), parity);
}

}  // namespace dedekind
