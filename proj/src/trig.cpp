#include "dedekind/trig.hpp"

#include "dedekind/errors.hpp"
#include "dedekind/exact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace dedekind {

Real CotPoly::operator()(const Real& t) const {
    Real acc(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + to_real(*it);
    return acc;
}

const CotPoly& cot_poly(unsigned m) {
    static std::mutex mutex;
    static std::deque<CotPoly> cache{CotPoly{0, {Integer(0), Integer(1)}}};
    std::lock_guard lock(mutex);
    while (cache.size() <= m) {
        const CotPoly& q = cache.back();
        // derivative with respect to t
        std::vector<Integer> d(q.coefficients.size() > 1 ? q.coefficients.size() - 1 : 1, Integer(0));
        for (std::size_t i = 1; i < q.coefficients.size(); ++i) d[i - 1] = q.coefficients[i] * i;
        // -(1 + t^2) d
        std::vector<Integer> next(d.size() + 2, Integer(0));
        for (std::size_t i = 0; i < d.size(); ++i) {
            next[i] -= d[i];
            next[i + 2] -= d[i];
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        cache.push_back(CotPoly{q.order + 1, std::move(next)});
    }
    return cache[m];
}

namespace {

// cot(pi r / k) for 0 < r < k, folded onto r <= k/2
Real cot_reduced(std::int64_t r, std::int64_t k) {
    if (2 * r > k) return -cot_reduced(k - r, k);
    if (2 * r == k) return Real(0);
    Real x = pi() * r / k;
    Real out;
    mpfr_cot(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

Real tan_reduced(std::int64_t r, std::int64_t k) {
    if (r == 0) return Real(0);
    if (2 * r > k) return -tan_reduced(k - r, k);
    Real x = pi() * r / k;
    Real out;
    mpfr_tan(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

void require_positive_modulus(std::int64_t k) {
    if (k <= 0) throw OutOfRange("modulus k must be positive, got " + std::to_string(k));
}

// Per-call cache of trig values indexed by residue; flat vectors so the
// product loop below does no allocation per lookup.
class ResidueTable {
public:
    explicit ResidueTable(std::int64_t k) : k_(k) {}

    const Real& cot(std::int64_t r) {
        return fetch(cot_, r, [&] {
            if (r == 0) throw PoleAtIntegerMultiple("cot(pi a/k) with k | a, k=" + std::to_string(k_));
            return 2 * r > k_ ? Real(-cot(k_ - r)) : cot_reduced(r, k_);
        });
    }

    const Real& tan(std::int64_t r) {
        return fetch(tan_, r, [&] {
            if (k_ % 2 == 0 && 2 * r == k_)
                throw PoleAtHalfPeriod("tan(pi a/k) with a = k/2 (mod k), k=" + std::to_string(k_));
            return 2 * r > k_ ? Real(-tan(k_ - r)) : tan_reduced(r, k_);
        });
    }

    const Real& cot_deriv(unsigned m, std::int64_t r) {
        if (m == 0) return cot(r);
        if (deriv_.size() < m) deriv_.resize(m);
        return fetch(deriv_[m - 1], r, [&] { return cot_poly(m)(cot(r)); });
    }

private:
    using Slots = std::vector<std::optional<Real>>;

    template <class F>
    const Real& fetch(Slots& slots, std::int64_t r, F&& make) {
        if (slots.empty()) slots.resize(static_cast<std::size_t>(k_));
        auto& slot = slots[static_cast<std::size_t>(r)];
        if (!slot) slot = make();
        return *slot;
    }

    std::int64_t k_;
    Slots cot_, tan_;
    std::vector<Slots> deriv_;
};

}  // namespace

Real cot_at(std::int64_t a, std::int64_t k) {
    require_positive_modulus(k);
    const std::int64_t r = mod(a, k);
    if (r == 0)
        throw PoleAtIntegerMultiple("cot(pi a/k) undefined for a=" + std::to_string(a) + ", k=" + std::to_string(k));
    return cot_reduced(r, k);
}

Real tan_at(std::int64_t a, std::int64_t k) {
    require_positive_modulus(k);
    const std::int64_t r = mod(a, k);
    if (k % 2 == 0 && 2 * r == k)
        throw PoleAtHalfPeriod("tan(pi a/k) undefined for a=" + std::to_string(a) + ", k=" + std::to_string(k));
    return tan_reduced(r, k);
}

Real cot_deriv_at(unsigned m, std::int64_t a, std::int64_t k) {
    return cot_poly(m)(cot_at(a, k));
}

Real trig_product_sum(std::span<const TrigFactor> factors, std::int64_t k,
                      std::span<const std::int64_t> exclusions) {
    require_positive_modulus(k);
    ResidueTable table(k);
    Real total(0), term;
    for (std::int64_t a = 1; a < k; ++a) {
        if (std::find(exclusions.begin(), exclusions.end(), a) != exclusions.end()) continue;
        term = 1;
        for (const auto& f : factors) {
            const std::int64_t r = mod(a * mod(f.multiplier, k), k);
            term *= f.kind == FactorKind::tan ? table.tan(r) : table.cot_deriv(f.order, r);
        }
        total += term;
    }
    return total;
}

}  // namespace dedekind
