#include "dedekind/periodic.hpp"

#include <cmath>
#include <string>

namespace dedekind {

namespace {

void require_even(std::int64_t k, const char* what) {
    if (k % 2 != 0) throw ParityViolation(std::string(what) + " requires k even, got k=" + std::to_string(k));
}

void require_odd(std::int64_t k, const char* what) {
    if (k % 2 == 0) throw ParityViolation(std::string(what) + " requires k odd, got k=" + std::to_string(k));
}

// w[j] = e^{-2 pi i j / k}
std::vector<Complex> roots_of_unity(std::int64_t k) {
    std::vector<Complex> w;
    w.reserve(static_cast<std::size_t>(k));
    w.emplace_back(Real(1));
    if (k == 1) return w;
    const Complex step = conj(unit_phase(2 * pi() / k));
    for (std::int64_t j = 1; j < k; ++j) w.push_back(w.back() * step);
    return w;
}

template <class Scalar>
ComplexMap dft_impl(const PeriodicMap<Scalar>& f) {
    const std::int64_t k = f.period();
    const auto w = roots_of_unity(k);
    std::vector<Complex> promoted;
    promoted.reserve(static_cast<std::size_t>(k));
    for (const auto& v : f.values()) promoted.push_back(promote(v));

    std::vector<Complex> out(static_cast<std::size_t>(k));
    for (std::int64_t n = 0; n < k; ++n) {
        Complex acc;
        for (std::int64_t a = 0; a < k; ++a) {
            if (promoted[a].re == 0 && promoted[a].im == 0) continue;
            acc += promoted[a] * w[static_cast<std::size_t>((a * n) % k)];
        }
        out[n] = std::move(acc);
    }
    return ComplexMap(std::move(out), f.parity());
}

template <class Scalar>
Real involution_impl(const PeriodicMap<Scalar>& f) {
    const ComplexMap twice = dft(dft(f));
    const std::int64_t k = f.period();
    Real worst(0);
    for (std::int64_t n = 0; n < k; ++n) {
        const Real r = abs(twice(n) - promote(f(-n)) * Real(k));
        if (r > worst) worst = r;
    }
    return worst;
}

template <class Scalar>
Real parseval_impl(const PeriodicMap<Scalar>& f1, const PeriodicMap<Scalar>& f2) {
    require_same_period(f1.period(), f2.period());
    const std::int64_t k = f1.period();
    Scalar direct(0);
    for (std::int64_t a = 0; a < k; ++a) direct += f1(a) * f2(-a);
    const ComplexMap t1 = dft(f1);
    const ComplexMap t2 = dft(f2);
    Complex spectral;
    for (std::int64_t a = 0; a < k; ++a) spectral += t1(a) * t2(a);
    spectral /= Real(k);
    return abs(promote(direct) - spectral);
}

}  // namespace

ExactMap sawtooth_map(std::int64_t k) {
    std::vector<Rational> v;
    for (std::int64_t n = 0; n < k; ++n) v.push_back(sawtooth(Rational(n, k)));
    return ExactMap(std::move(v), Parity::odd);
}

ExactMap bernoulli_map(unsigned r, std::int64_t k) {
    std::vector<Rational> v;
    const BernoulliPoly p = bernoulli_poly(r);
    for (std::int64_t n = 0; n < k; ++n) v.push_back(p(Rational(n, k)));
    // B_1(0) = -1/2 breaks oddness at n = 0
    const Parity parity = r == 1 ? Parity::none : (r % 2 == 0 ? Parity::even : Parity::odd);
    return ExactMap(std::move(v), parity);
}

ExactMap alt_sawtooth_map(std::int64_t k) {
    require_even(k, "alternating sawtooth map");
    std::vector<Rational> v;
    for (std::int64_t n = 0; n < k; ++n) {
        Rational s = sawtooth(Rational(n, k));
        v.push_back(n % 2 == 0 ? s : Rational(-s));
    }
    return ExactMap(std::move(v), Parity::odd);
}

ExactMap alt_sign_map(std::int64_t k) {
    require_odd(k, "alternating sign map");
    std::vector<Rational> v{Rational(0)};
    for (std::int64_t n = 1; n < k; ++n) v.emplace_back(n % 2 == 0 ? 1 : -1);
    return ExactMap(std::move(v), Parity::odd);
}

ExactMap delta_map(std::int64_t k) {
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    v[0] = 1;
    return ExactMap(std::move(v), Parity::even);
}

ExactMap constant_map(std::int64_t k, const Rational& c) {
    return ExactMap(std::vector<Rational>(static_cast<std::size_t>(k), c), Parity::even);
}

ComplexMap dft(const ExactMap& f) { return dft_impl(f); }
ComplexMap dft(const ComplexMap& f) { return dft_impl(f); }

Real dft_involution_check(const ExactMap& f) { return involution_impl(f); }
Real dft_involution_check(const ComplexMap& f) { return involution_impl(f); }

Real parseval_check(const ExactMap& f1, const ExactMap& f2) { return parseval_impl(f1, f2); }
Real parseval_check(const ComplexMap& f1, const ComplexMap& f2) { return parseval_impl(f1, f2); }

Complex theorem1_rhs_from_transforms(std::span<const ComplexMap> transforms,
                                     std::span<const std::int64_t> hs) {
    const std::int64_t k = detail::common_period(transforms, hs);
    std::vector<std::int64_t> inverses;
    for (std::int64_t h : hs) inverses.push_back(mod_inverse(h, k));
    Complex total;
    for (std::int64_t a = 0; a < k; ++a) {
        Complex term = transforms[0](a * inverses[0]);
        for (std::size_t j = 1; j < transforms.size(); ++j) term *= transforms[j](a * inverses[j]);
        total += term;
    }
    return total / Real(k);
}

namespace detail {

void check_work(std::int64_t k, std::size_t free_indices, std::uint64_t work_limit) {
    const double terms = std::pow(static_cast<double>(k), static_cast<double>(free_indices));
    if (terms > static_cast<double>(work_limit))
        throw WorkLimitExceeded("enumeration of " + std::to_string(static_cast<long long>(terms)) +
                                " terms exceeds the work limit of " + std::to_string(work_limit));
}

}  // namespace detail

}  // namespace dedekind
