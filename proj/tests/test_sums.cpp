#include "dedekind/sums.hpp"
#include "dedekind/trig.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dedekind;
using namespace dedekind::testing;

namespace {

Real tol() { return pow2(-128); }
Real loose() { return pow2(-100); }

SumParams params(std::int64_t k, std::vector<std::int64_t> hs, std::vector<unsigned> rs = {}) {
    SumParams p;
    p.k = k;
    p.multipliers = std::move(hs);
    p.orders = std::move(rs);
    return p;
}

bool agrees(const Rational& exact, const Real& approx, const Real& eps) {
    return mp::abs(to_real(exact) - approx) < eps;
}

}  // namespace

TEST_CASE("classical Dedekind sum") {
    CHECK(dedekind_s(1, 1) == 0);
    CHECK(dedekind_s(1, 3) == Rational(1, 18));
    CHECK(dedekind_s(2, 5) == 0);
    CHECK(dedekind_cot_rhs(1, 1) == 0);
    CHECK(agrees(Rational(1, 18), dedekind_cot_rhs(1, 3), tol()));
    CHECK(mp::abs(dedekind_cot_rhs(2, 5)) < tol());
    CHECK_THROWS_AS(dedekind_cot_rhs(2, 4), NotCoprime);

    // textbook closed form s(1,k) = (k-1)(k-2)/(12k)
    for (std::int64_t k = 1; k <= 40; ++k) CHECK(dedekind_s(1, k) == Rational((k - 1) * (k - 2), 12 * k));
    // reciprocity as an independent oracle
    for (std::int64_t k = 1; k <= 25; ++k)
        for (std::int64_t h = 1; h <= 25; ++h) {
            if (gcd(h, k) != 1) continue;
            const Rational expected = Rational(-1, 4) + Rational(h * h + k * k + 1, 12 * h * k);
            CHECK(dedekind_s(h, k) + dedekind_s(k, h) == expected);
        }
}

TEST_CASE("cotangent form of the Dedekind sum") {
    for (std::int64_t k = 1; k <= 30; ++k)
        for (std::int64_t h = -k; h <= 2 * k; ++h)
            if (gcd(h, k) == 1) CHECK(agrees(dedekind_s(h, k), dedekind_cot_rhs(h, k), tol()));
}

TEST_CASE("truncated series with tail bound") {
    const SeriesEstimate a = dedekind_series_rhs(1, 3, 30000);
    CHECK(mp::abs(a.value - to_real(Rational(1, 18))) <= a.tail_bound);
    const SeriesEstimate b = dedekind_series_rhs(1, 1, 1000);
    CHECK(b.value == 0);
    const SeriesEstimate c = dedekind_series_rhs(1, 4, 10000);
    CHECK(dedekind_s(1, 4) == Rational(1, 8));
    CHECK(mp::abs(c.value - to_real(Rational(1, 8))) <= c.tail_bound);
    // the bound actually shrinks
    const SeriesEstimate d = dedekind_series_rhs(3, 7, 20000);
    CHECK(d.tail_bound * 2 == dedekind_series_rhs(3, 7, 10000).tail_bound);
    CHECK(mp::abs(d.value - to_real(dedekind_s(3, 7))) <= d.tail_bound);
}

TEST_CASE("homogeneous pair form") {
    for (std::int64_t k = 1; k <= 30; ++k)
        for (std::int64_t h1 = 1; h1 < std::max<std::int64_t>(k, 2); ++h1)
            for (std::int64_t h2 = 1; h2 < std::max<std::int64_t>(k, 2); ++h2)
                if (gcd(h1, k) == 1 && gcd(h2, k) == 1)
                    CHECK(agrees(homogeneous_dedekind_lhs(h1, h2, k), homogeneous_dedekind_rhs(h1, h2, k), tol()));
}

TEST_CASE("m-fold sawtooth sums") {
    CHECK(zagier_sum_lhs(params(3, {1, 1})) == Rational(-1, 18));
    CHECK(agrees(Rational(-1, 18), zagier_sum_rhs(params(3, {1, 1})), tol()));
    CHECK(zagier_sum_lhs(params(3, {1, 1, 1, 1})) == Rational(1, 216));
    CHECK(agrees(Rational(1, 216), zagier_sum_rhs(params(3, {1, 1, 1, 1})), tol()));
    CHECK(zagier_sum_lhs(params(5, {1, 2})) == 0);
    CHECK(mp::abs(zagier_sum_rhs(params(5, {1, 2}))) < tol());
    CHECK(zagier_sum_lhs(params(5, {1, 2, 3})) == 0);
    CHECK_THROWS_AS(zagier_sum_rhs(params(5, {1, 2, 3})), ParityViolation);
    CHECK_THROWS_AS(zagier_sum_lhs(params(6, {1, 2})), NotCoprime);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 14);
        const std::size_t m = (trial % 2 == 0) ? 2 : 4;
        std::vector<std::int64_t> hs;
        for (std::size_t j = 0; j < m; ++j) hs.push_back(random_coprime(rng, k));
        CHECK(agrees(zagier_sum_lhs(params(k, hs)), zagier_sum_rhs(params(k, hs)), loose()));
        hs.push_back(random_coprime(rng, k));
        CHECK(zagier_sum_lhs(params(k, hs)) == 0);
    }
}

TEST_CASE("Dedekind-Bernoulli sums") {
    CHECK(bernoulli_sum_lhs(params(3, {1, 1}, {1, 1})) == Rational(7, 36));
    CHECK(bernoulli_sum_lhs(params(1, {1, 1}, {2, 2})) == Rational(1, 36));
    CHECK(bernoulli_sum_lhs(params(2, {1, 1}, {1, 2})) == Rational(-1, 12));

    CHECK(agrees(bernoulli_sum_lhs(params(3, {1, 1}, {2, 2})),
                 bernoulli_sum_rhs(params(3, {1, 1}, {2, 2}), BernoulliConvention::paper), tol()));
    // order 1: the literal form drops the -1/2 of B_1 off the multiples of k
    const Real literal = bernoulli_sum_rhs(params(3, {1, 1}, {1, 1}), BernoulliConvention::paper);
    CHECK(agrees(Rational(1, 36), literal, tol()));
    CHECK(agrees(Rational(7, 36), bernoulli_sum_rhs(params(3, {1, 1}, {1, 1}), BernoulliConvention::corrected), tol()));
    CHECK_THROWS_AS(bernoulli_sum_rhs(params(3, {1, 1}, {1, 2}), BernoulliConvention::paper), ParityViolation);
}

TEST_CASE("Dedekind-Bernoulli sums, orders at least 2") {
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 15);
        const std::size_t m = 1 + rng() % 3;
        std::vector<unsigned> rs;
        std::vector<std::int64_t> hs;
        for (std::size_t j = 0; j < m; ++j) {
            rs.push_back(2 + static_cast<unsigned>(rng() % 5));
            hs.push_back(random_coprime(rng, k));
        }
        const SumParams p = params(k, hs, rs);
        if (p.order_total() % 2 != 0 || p.order_total() > 8) continue;
        ++checked;
        const Rational lhs = bernoulli_sum_lhs(p);
        CHECK(agrees(lhs, bernoulli_sum_rhs(p, BernoulliConvention::paper), loose()));
        CHECK(agrees(lhs, bernoulli_sum_rhs(p, BernoulliConvention::corrected), loose()));
    }
    CHECK(checked >= 30);
}

TEST_CASE("corrected convention covers order 1 and odd totals") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 10);
        const std::size_t m = 1 + rng() % 3;
        std::vector<unsigned> rs;
        std::vector<std::int64_t> hs;
        for (std::size_t j = 0; j < m; ++j) {
            rs.push_back(1 + static_cast<unsigned>(rng() % 4));
            hs.push_back(random_coprime(rng, k));
        }
        const SumParams p = params(k, hs, rs);
        CHECK(agrees(bernoulli_sum_lhs(p), bernoulli_sum_rhs(p, BernoulliConvention::corrected), loose()));
    }
}

TEST_CASE("odd total with an order of at least 3 vanishes") {
    CHECK(bernoulli_sum_lhs(params(5, {1, 2}, {3, 2})) == 0);
    CHECK(bernoulli_sum_lhs(params(7, {3, 2}, {3, 4})) == 0);
    CHECK(bernoulli_sum_lhs(params(6, {1, 5, 1}, {5, 2, 2})) == 0);
    CHECK(bernoulli_sum_lhs(params(9, {2, 4, 7}, {3, 3, 3})) == 0);
}

TEST_CASE("Bernoulli pair sums") {
    // equal orders: both readings coincide
    for (std::int64_t k : {5, 7, 11})
        for (unsigned r : {2u, 3u, 4u}) {
            const Rational lhs = bernoulli_pair_lhs(r, r, 2, 3, k);
            CHECK(agrees(lhs, bernoulli_pair_rhs(r, r, 2, 3, k, BernoulliConvention::paper), loose()));
            CHECK(agrees(lhs, bernoulli_pair_rhs(r, r, 2, 3, k, BernoulliConvention::corrected), loose()));
        }

    // unequal orders: the literal pairing of multipliers and derivative orders
    // is off; the corrected form agrees and so does the swapped pairing
    const std::int64_t k = 7, h1 = 1, h2 = 3;
    const unsigned r1 = 3, r2 = 5;
    const Rational lhs = bernoulli_pair_lhs(r1, r2, h1, h2, k);
    const Real literal = bernoulli_pair_rhs(r1, r2, h1, h2, k, BernoulliConvention::paper);
    CHECK_FALSE(agrees(lhs, literal, pow2(-20)));
    CHECK(agrees(lhs, bernoulli_pair_rhs(r1, r2, h1, h2, k, BernoulliConvention::corrected), loose()));

    const TrigFactor swapped[] = {TrigFactor::cot(h2, r1 - 1), TrigFactor::cot(h1, r2 - 1)};
    const Real swapped_rhs = to_real(bernoulli_number(r1) * bernoulli_number(r2) / Rational(Integer(k) * k * k * k * k * k * k)) +
                             to_real(Rational(-static_cast<int>(r1 * r2), 256) / Rational(Integer(k) * k * k * k * k * k * k)) *
                                 trig_product_sum(swapped, k);
    CHECK(agrees(lhs, swapped_rhs, loose()));
}

TEST_CASE("Hardy sums") {
    CHECK(hardy_sum(HardyKind::s3, 1, 3) == Rational(1, 3));
    CHECK(hardy_sum(HardyKind::s2, 1, 4) == Rational(-1, 8));
    CHECK(hardy_sum(HardyKind::s1, 2, 3) == Rational(-1, 3));
    for (std::int64_t k = 1; k <= 15; ++k)
        for (std::int64_t h = 1; h <= 15; ++h) {
            for (HardyKind w : {HardyKind::s1, HardyKind::s2, HardyKind::s3, HardyKind::s5})
                CHECK(hardy_sum(w, h, k, ZeroResidue::include) == hardy_sum(w, h, k, ZeroResidue::exclude));
            CHECK(hardy_sum(HardyKind::s4, h, k, ZeroResidue::include) ==
                  hardy_sum(HardyKind::s4, h, k, ZeroResidue::exclude) + 1);
            CHECK(hardy_sum(HardyKind::S, h, k, ZeroResidue::include) ==
                  hardy_sum(HardyKind::S, h, k, ZeroResidue::exclude) - 1);
        }
}

TEST_CASE("A sums") {
    // for m = 2 the constraint a_2 = -a_1 flips the second sawtooth, so A is
    // minus the alternating pair sum s2(1, 4) = -1/8
    CHECK(hardy_A_lhs(params(4, {1, 1})) == Rational(1, 8));
    CHECK(agrees(Rational(1, 8), hardy_A_rhs(params(4, {1, 1})), tol()));
    CHECK(alternating_pair_lhs(1, 1, 4) == Rational(-1, 8));
    CHECK(hardy_sum(HardyKind::s2, 1, 4) == Rational(-1, 8));
    CHECK(agrees(Rational(-1, 8), alternating_pair_rhs(1, 1, 4), tol()));
    CHECK(agrees(hardy_A_lhs(params(4, {1, 3})), hardy_A_rhs(params(4, {1, 3})), tol()));
    CHECK(hardy_A_lhs(params(2, {1, 1})) == 0);
    CHECK(hardy_A_rhs(params(2, {1, 1})) == 0);
    CHECK_THROWS_AS(hardy_A_rhs(params(5, {1, 1})), ParityViolation);
    CHECK_THROWS_AS(hardy_A_rhs(params(4, {1, 1, 1})), ParityViolation);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t k = 2 * (1 + static_cast<std::int64_t>(rng() % 8));
        const std::size_t m = trial % 3 == 0 ? 4 : 2;
        std::vector<std::int64_t> hs;
        for (std::size_t j = 0; j < m; ++j) hs.push_back(random_coprime(rng, k));
        CHECK(agrees(hardy_A_lhs(params(k, hs)), hardy_A_rhs(params(k, hs)), loose()));
    }
}

TEST_CASE("B sums") {
    // same sign flip: B(1,1;3) = -s3(1,3), B(2,1;3) = -s1(2,3)
    CHECK(hardy_B_lhs(params(3, {1, 1})) == Rational(-1, 3));
    CHECK(agrees(Rational(-1, 3), hardy_B_rhs(params(3, {1, 1})), tol()));
    CHECK(hardy_B_lhs(params(3, {2, 1})) == Rational(1, 3));
    CHECK(agrees(Rational(1, 3), hardy_B_rhs(params(3, {2, 1})), tol()));
    for (std::int64_t k = 1; k <= 21; k += 2)
        for (std::int64_t h = 1; h < 2 * k; ++h)
            if (gcd(h, k) == 1) {
                CHECK(hardy_B_lhs(params(k, {1, h})) == -hardy_sum(HardyKind::s3, h, k));
                if (h % 2 == 0) CHECK(hardy_B_lhs(params(k, {h, 1})) == -hardy_sum(HardyKind::s1, h, k));
            }
    CHECK(hardy_B_lhs(params(1, {1, 1})) == 0);
    CHECK(hardy_B_rhs(params(1, {1, 1})) == 0);
    CHECK_THROWS_AS(hardy_B_lhs(params(4, {1, 1})), ParityViolation);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t k = 1 + 2 * static_cast<std::int64_t>(rng() % 8);
        const std::size_t m = trial % 3 == 0 ? 4 : 2;
        std::vector<std::int64_t> hs;
        for (std::size_t j = 0; j < m; ++j) hs.push_back(random_coprime(rng, k));
        CHECK(agrees(hardy_B_lhs(params(k, hs)), hardy_B_rhs(params(k, hs)), loose()));
    }
}

TEST_CASE("pair corollaries") {
    for (std::int64_t k = 2; k <= 24; k += 2)
        for (std::int64_t h1 = 1; h1 < k; h1 += 2)
            for (std::int64_t h2 = 1; h2 < k; ++h2) {
                if (gcd(h1, k) != 1 || gcd(h2, k) != 1) continue;
                CHECK(agrees(alternating_pair_lhs(h1, h2, k), alternating_pair_rhs(h1, h2, k), loose()));
            }
    for (std::int64_t k = 3; k <= 25; k += 2) {
        for (std::int64_t h = 1; h < 2 * k; ++h) {
            if (gcd(h, k) != 1) continue;
            CHECK(agrees(hardy_sum(HardyKind::s3, h, k), tan_cot_sum(h, 1, k) / (2 * k), loose()));
            if (h % 2 == 1) {
                CHECK(agrees(hardy_sum(HardyKind::s5, h, k), tan_cot_sum(1, h, k) / (2 * k), loose()));
                CHECK(agrees(signed_floor_pair_lhs(h, 2, k), tan_cot_sum(2, h, k) / (2 * k), loose()));
            } else {
                CHECK(agrees(hardy_sum(HardyKind::s1, h, k), tan_cot_sum(1, h, k) / (2 * k), loose()));
                CHECK(agrees(floor_sign_pair_lhs(h, 4, k), tan_cot_sum(4, h, k) / (2 * k), loose()));
            }
        }
    }
    CHECK_THROWS_AS(alternating_pair_rhs(2, 1, 4), ParityViolation);
}

TEST_CASE("tan-tan identity and sum of squares") {
    IdentityReport r = hardy_s4_identity(1, 1, 3);
    CHECK(r.pass);
    CHECK(std::get<Rational>(r.lhs) == 2);
    r = hardy_s4_identity(1, 1, 5);
    CHECK(std::get<Rational>(r.lhs) == 4);
    CHECK(r.pass);
    CHECK(hardy_s4_identity(1, 3, 5).pass);
    CHECK_THROWS_AS(hardy_s4_identity(1, 1, 4), ParityViolation);

    for (std::int64_t k = 3; k <= 49; k += 2)
        for (std::int64_t h1 = 1; h1 < k; ++h1)
            for (std::int64_t h2 = 1; h2 < k; h2 += 3)
                if (gcd(h1, k) == 1 && gcd(h2, k) == 1) CHECK(hardy_s4_identity(h1, h2, k, loose()).pass);

    // with h2 = 1 and h odd the left side is s4 without the zero residue
    for (std::int64_t k = 3; k <= 31; k += 2)
        for (std::int64_t h = 1; h < 2 * k; h += 2) {
            if (gcd(h, k) != 1) continue;
            CHECK(std::get<Rational>(hardy_s4_identity(h, 1, k).lhs) == hardy_sum(HardyKind::s4, h, k));
        }

    for (std::int64_t k = 1; k <= 99; k += 2) CHECK(close(tan_square_sum(k), Real(k * k - k), loose()));
    CHECK_THROWS_AS(tan_square_sum(6), ParityViolation);
}

TEST_CASE("half-range form of s1") {
    const IdentityReport r = remark1_equivalence(2, 3);
    CHECK(r.pass);
    CHECK(std::get<Rational>(r.lhs) == Rational(-1, 3));
    CHECK(remark1_equivalence(2, 5).pass);
    CHECK(remark1_equivalence(4, 5).pass);
    for (std::int64_t k = 3; k <= 31; k += 2)
        for (std::int64_t h = 2; h < 2 * k; h += 2)
            if (gcd(h, k) == 1) CHECK(remark1_equivalence(h, k).pass);
    CHECK_THROWS_AS(remark1_equivalence(1, 5), ParityViolation);
    CHECK_THROWS_AS(remark1_equivalence(2, 6), ParityViolation);
}

TEST_CASE("work limit") {
    CHECK_THROWS_AS(zagier_sum_lhs(params(40, {1, 1, 1, 1}), 1000), WorkLimitExceeded);
}
