#pragma once

// tan, cot and cot^{(m)} at rational multiples of pi, and the finite
// product sums that form the right-hand side of every cotangent identity.

#include "dedekind/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dedekind {

/// cot^{(m)}(x) = Q_m(cot x) with Q_0 = t and Q_{m+1} = -(1 + t^2) Q_m'.
struct CotPoly {
    unsigned order = 0;
    std::vector<Integer> coefficients;  ///< ascending powers of t

    Real operator()(const Real& t) const;
};

/// Memoized; the returned reference stays valid for the program lifetime.
const CotPoly& cot_poly(unsigned m);

/// cot(pi a / k). Throws PoleAtIntegerMultiple when k | a.
Real cot_at(std::int64_t a, std::int64_t k);
/// tan(pi a / k). Throws PoleAtHalfPeriod when k is even and a = k/2 (mod k).
Real tan_at(std::int64_t a, std::int64_t k);
/// cot^{(m)}(pi a / k).
Real cot_deriv_at(unsigned m, std::int64_t a, std::int64_t k);

enum class FactorKind { tan, cot_deriv };

struct TrigFactor {
    FactorKind kind = FactorKind::cot_deriv;
    unsigned order = 0;  ///< derivative order for cot_deriv; ignored for tan
    std::int64_t multiplier = 1;

    static TrigFactor tan(std::int64_t multiplier) { return {FactorKind::tan, 0, multiplier}; }
    static TrigFactor cot(std::int64_t multiplier, unsigned order = 0) {
        return {FactorKind::cot_deriv, order, multiplier};
    }
};

/// sum over a in [1, k-1], a not in `exclusions`, of prod_j factor_j(pi a m_j / k).
/// Each distinct trig value is evaluated once per call.
Real trig_product_sum(std::span<const TrigFactor> factors, std::int64_t k,
                      std::span<const std::int64_t> exclusions = {});

}  // namespace dedekind
