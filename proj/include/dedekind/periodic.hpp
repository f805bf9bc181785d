#pragma once

// DFT algebra on k-periodic functions Z -> C.
//
//   dft(f)(n) = sum_{a mod k} f(a) e^{-2 pi i a n / k}
//
// Maps are templated on their scalar: Rational maps stay exact through
// convolution, dilation and brute-force sums; they are promoted to Complex
// only when transformed.

#include "dedekind/errors.hpp"
#include "dedekind/exact.hpp"
#include "dedekind/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dedekind {

enum class Parity { none, odd, even };

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

template <class Scalar>
class PeriodicMap {
public:
    using value_type = Scalar;

    /// Throws std::invalid_argument on an empty period, or (exact maps only)
    /// when the parity tag does not hold over one period.
    explicit PeriodicMap(std::vector<Scalar> values, Parity parity = Parity::none)
        : values_(std::move(values)), parity_(parity) {
        if (values_.empty()) throw std::invalid_argument("PeriodicMap: period must be positive");
        if constexpr (std::is_same_v<Scalar, Rational>) {
            if (parity_ != Parity::none && !holds(parity_))
                throw std::invalid_argument("PeriodicMap: values do not have the declared parity");
        }
    }

    std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
    Parity parity() const { return parity_; }
    std::span<const Scalar> values() const { return values_; }

    const Scalar& operator()(std::int64_t n) const {
        return values_[static_cast<std::size_t>(mod(n, period()))];
    }

    /// Exact check of f(-n) = -f(n) (odd) or f(-n) = f(n) (even) over one period.
    bool holds(Parity p) const {
        if (p == Parity::none) return true;
        for (std::int64_t n = 0; n < period(); ++n) {
            const Scalar& a = (*this)(n);
            const Scalar& b = (*this)(-n);
            if (p == Parity::odd ? !(a == -b) : !(a == b)) return false;
        }
        return true;
    }

private:
    std::vector<Scalar> values_;
    Parity parity_;
};

using ExactMap = PeriodicMap<Rational>;
using ComplexMap = PeriodicMap<Complex>;

// ---- defining maps of the closed-form transforms -------------------------

/// n -> ((n/k))
ExactMap sawtooth_map(std::int64_t k);
/// n -> B_r({n/k})
ExactMap bernoulli_map(unsigned r, std::int64_t k);
/// n -> (-1)^n ((n/k)); k even.
ExactMap alt_sawtooth_map(std::int64_t k);
/// n -> (-1)^{n mod k} for k not dividing n, 0 otherwise; k odd.
ExactMap alt_sign_map(std::int64_t k);
ExactMap delta_map(std::int64_t k);
ExactMap constant_map(std::int64_t k, const Rational& c);

// ---- transforms ----------------------------------------------------------

/// Direct O(k^2) transform at the working precision; roots of unity come
/// from one sin/cos evaluation and repeated multiplication.
ComplexMap dft(const ExactMap& f);
ComplexMap dft(const ComplexMap& f);

/// max_n |dft(dft(f))(n) - k f(-n)|
Real dft_involution_check(const ExactMap& f);
Real dft_involution_check(const ComplexMap& f);

inline Complex promote(const Rational& q) { return Complex::from(q); }
inline const Complex& promote(const Complex& z) { return z; }

inline ComplexMap promote(const ExactMap& f) {
    std::vector<Complex> v;
    v.reserve(f.values().size());
    for (const auto& q : f.values()) v.push_back(Complex::from(q));
    return ComplexMap(std::move(v), f.parity());
}

inline void require_same_period(std::int64_t a, std::int64_t b) {
    if (a != b)
        throw PeriodMismatch("periods differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

inline void require_coprime(std::int64_t h, std::int64_t k) {
    if (gcd(h, k) != 1)
        throw NotCoprime("gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") != 1");
}

/// (f (x) g)(n) = sum_a f(a) g(n - a)
template <class Scalar>
PeriodicMap<Scalar> cauchy_convolve(const PeriodicMap<Scalar>& f, const PeriodicMap<Scalar>& g) {
    require_same_period(f.period(), g.period());
    const std::int64_t k = f.period();
    std::vector<Scalar> out(static_cast<std::size_t>(k), Scalar(0));
    for (std::int64_t n = 0; n < k; ++n)
        for (std::int64_t a = 0; a < k; ++a) out[n] += f(a) * g(n - a);
    Parity p = Parity::none;
    if (f.parity() != Parity::none && g.parity() != Parity::none)
        p = f.parity() == g.parity() ? Parity::even : Parity::odd;
    return PeriodicMap<Scalar>(std::move(out), p);
}

/// n -> f(n h); gcd(h, k) = 1.
template <class Scalar>
PeriodicMap<Scalar> dilate(const PeriodicMap<Scalar>& f, std::int64_t h) {
    const std::int64_t k = f.period();
    require_coprime(h, k);
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t n = 0; n < k; ++n) out.push_back(f(mod(n, k) * mod(h, k)));
    return PeriodicMap<Scalar>(std::move(out), f.parity());
}

namespace detail {

template <class Scalar>
std::int64_t common_period(std::span<const PeriodicMap<Scalar>> fs, std::span<const std::int64_t> hs) {
    if (fs.empty()) throw std::invalid_argument("need at least one map");
    if (fs.size() != hs.size()) throw std::invalid_argument("one multiplier per map required");
    const std::int64_t k = fs.front().period();
    for (const auto& f : fs) require_same_period(k, f.period());
    for (std::int64_t h : hs) require_coprime(h, k);
    return k;
}

void check_work(std::int64_t k, std::size_t free_indices, std::uint64_t work_limit);

}  // namespace detail

/// Brute force over a_1..a_{m-1} (a_m fixed by a_1 + ... + a_m = 0 mod k) of
/// prod_j f_j(a_j h_j). Exact for exact maps.
template <class Scalar>
Scalar theorem1_lhs(std::span<const PeriodicMap<Scalar>> fs, std::span<const std::int64_t> hs,
                    std::uint64_t work_limit = kDefaultWorkLimit) {
    const std::int64_t k = detail::common_period(fs, hs);
    const std::size_t m = fs.size();
    detail::check_work(k, m - 1, work_limit);

    std::vector<std::int64_t> a(m, 0);
    Scalar total(0);
    while (true) {
        std::int64_t partial = 0;
        for (std::size_t j = 0; j + 1 < m; ++j) partial += a[j];
        a[m - 1] = mod(-partial, k);
        Scalar term = fs[0](a[0] * mod(hs[0], k));
        for (std::size_t j = 1; j < m; ++j) term *= fs[j](a[j] * mod(hs[j], k));
        total += term;

        std::size_t j = 0;
        while (j + 1 < m && ++a[j] == k) a[j++] = 0;
        if (j + 1 >= m) break;
    }
    return total;
}

template <class Scalar>
Scalar theorem1_lhs(const std::vector<PeriodicMap<Scalar>>& fs, const std::vector<std::int64_t>& hs,
                    std::uint64_t work_limit = kDefaultWorkLimit) {
    return theorem1_lhs(std::span<const PeriodicMap<Scalar>>(fs), std::span<const std::int64_t>(hs),
                        work_limit);
}

/// (1/k) sum_{a mod k} prod_j T_j(a h_j') where T_j are already-transformed
/// maps (computed or closed-form).
Complex theorem1_rhs_from_transforms(std::span<const ComplexMap> transforms,
                                     std::span<const std::int64_t> hs);

template <class Scalar>
Complex theorem1_rhs(std::span<const PeriodicMap<Scalar>> fs, std::span<const std::int64_t> hs) {
    detail::common_period(fs, hs);
    std::vector<ComplexMap> transforms;
    transforms.reserve(fs.size());
    for (const auto& f : fs) transforms.push_back(dft(f));
    return theorem1_rhs_from_transforms(transforms, hs);
}

template <class Scalar>
Complex theorem1_rhs(const std::vector<PeriodicMap<Scalar>>& fs, const std::vector<std::int64_t>& hs) {
    return theorem1_rhs(std::span<const PeriodicMap<Scalar>>(fs), std::span<const std::int64_t>(hs));
}

/// | sum_a f1(a) f2(-a) - (1/k) sum_a dft(f1)(a) dft(f2)(a) |
Real parseval_check(const ExactMap& f1, const ExactMap& f2);
Real parseval_check(const ComplexMap& f1, const ComplexMap& f2);

// ---- closed-form transforms ----------------------------------------------

enum class TransformCase {
    sawtooth,       ///< ((n/k))
    bernoulli,      ///< B_r({n/k})
    alt_sawtooth,   ///< (-1)^n ((n/k)), k even
    alt_sign,       ///< (-1)^{n mod k} off multiples of k, k odd
    periodic_zeta,  ///< F(s, n/k), Re s > 1
};

/// How the order-1 Bernoulli transform treats indices off the multiples of k.
///   paper:     (i/2) cot(pi n/k), the sawtooth transform
///   corrected: (i/2) cot(pi n/k) - 1/2, the transform of B_1({n/k}) itself
enum class BernoulliConvention { paper, corrected };

struct ClosedFormParams {
    unsigned order = 1;
    Complex s = Complex(Real(2));
    BernoulliConvention convention = BernoulliConvention::paper;
};

/// Builds the transformed map directly from its closed form.
ComplexMap closed_form_dft(TransformCase kind, std::int64_t k, const ClosedFormParams& params = {});
/// The defining map whose transform closed_form_dft describes.
ComplexMap defining_map(TransformCase kind, std::int64_t k, const ClosedFormParams& params = {});

}  // namespace dedekind
