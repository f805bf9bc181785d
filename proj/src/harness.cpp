#include "dedekind/harness.hpp"

#include "dedekind/errors.hpp"
#include "dedekind/exact.hpp"
#include "dedekind/trig.hpp"
#include "dedekind/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dedekind {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

template <class F>
auto timed(std::int64_t& micros, F&& f) {
    const auto t0 = Clock::now();
    auto value = f();
    micros = micros_since(t0);
    return value;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) out.push_back(trim(piece));
    return out;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": expected an integer, got '" + text + "'");
    }
}

std::optional<std::string> lookup(const Params& p, const std::string& name) {
    const auto it = p.find(name);
    if (it == p.end()) return std::nullopt;
    return it->second;
}

std::string param_text(const Params& p, const std::string& name, const std::string& fallback) {
    return lookup(p, name).value_or(fallback);
}

std::vector<std::int64_t> param_list(const Params& p, const std::string& name, const std::string& fallback = {}) {
    const auto text = lookup(p, name);
    if (!text && fallback.empty()) throw std::invalid_argument("missing parameter --" + name);
    return parse_int_list(text.value_or(fallback));
}

std::vector<unsigned> param_orders(const Params& p, const std::string& name) {
    std::vector<unsigned> out;
    for (std::int64_t r : param_list(p, name)) {
        if (r < 1) throw OutOfRange("Bernoulli orders must be positive");
        out.push_back(static_cast<unsigned>(r));
    }
    return out;
}

unsigned param_order(const Params& p, const std::string& name, std::int64_t fallback) {
    const std::int64_t r = param_int(p, name, fallback);
    if (r < 1) throw OutOfRange("Bernoulli orders must be positive");
    return static_cast<unsigned>(r);
}

Complex param_complex(const Params& p, const std::string& name, const std::string& fallback) {
    const std::string text = param_text(p, name, fallback);
    try {
        return parse_complex(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(name + ": cannot parse '" + text + "' as a complex number");
    }
}

Rational param_rational(const Params& p, const std::string& name) {
    const auto text = lookup(p, name);
    if (!text) throw std::invalid_argument("missing parameter --" + name);
    try {
        Rational q(*text);
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument(name + ": expected p/q, got '" + *text + "'");
    }
}

std::int64_t positive_k(const Params& p) {
    const std::int64_t k = param_int(p, "k");
    if (k < 1) throw OutOfRange("k must be positive, got " + std::to_string(k));
    return k;
}

void require_odd_k(std::int64_t k, const std::string& what) {
    if (k % 2 == 0) throw ParityViolation(what + " requires k odd, got k=" + std::to_string(k));
}

void require_even_k(std::int64_t k, const std::string& what) {
    if (k % 2 != 0) throw ParityViolation(what + " requires k even, got k=" + std::to_string(k));
}

void require_odd(std::int64_t h, const std::string& name) {
    if (h % 2 == 0) throw ParityViolation(name + " must be odd, got " + std::to_string(h));
}

void require_even(std::int64_t h, const std::string& name) {
    if (h % 2 != 0) throw ParityViolation(name + " must be even, got " + std::to_string(h));
}

SumParams sum_params(const Params& p, const RunConfig& config, bool with_orders) {
    SumParams s;
    s.k = positive_k(p);
    std::string ones = "1,1";
    if (auto m = lookup(p, "m"); m && !lookup(p, "hs")) {
        const std::int64_t count = parse_int(*m, "m");
        if (count < 1 || count > 12) throw OutOfRange("m must lie in 1..12");
        ones = "1";
        for (std::int64_t j = 1; j < count; ++j) ones += ",1";
    }
    s.multipliers = param_list(p, "hs", ones);
    if (with_orders) s.orders = param_orders(p, "rs");
    s.convention = config.zero_residue;
    s.validate();
    return s;
}

IdentityReport report(Value lhs, Value rhs, const Real& tolerance, std::string note, std::int64_t lhs_us,
                      std::int64_t rhs_us) {
    IdentityReport r = IdentityReport::compare({}, {}, std::move(lhs), std::move(rhs), tolerance, std::move(note));
    r.lhs_micros = lhs_us;
    r.rhs_micros = rhs_us;
    return r;
}

template <class L, class R>
IdentityReport compare_timed(L&& lhs_fn, R&& rhs_fn, const RunConfig& config, std::string note = {}) {
    std::int64_t lu = 0, ru = 0;
    Value lhs = timed(lu, lhs_fn);
    Value rhs = timed(ru, rhs_fn);
    return report(std::move(lhs), std::move(rhs), config.tolerance_value(), std::move(note), lu, ru);
}

ExactMap map_param(const Params& p, const std::string& name, const std::string& fallback,
                   std::optional<std::int64_t> k) {
    return parse_map(param_text(p, name, fallback), k);
}

std::optional<std::int64_t> optional_k(const Params& p) {
    if (!lookup(p, "k")) return std::nullopt;
    return positive_k(p);
}

Rational random_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

Parity detect_parity(const std::vector<Rational>& v) {
    const ExactMap probe(v);
    if (probe.holds(Parity::odd)) return Parity::odd;
    if (probe.holds(Parity::even)) return Parity::even;
    return Parity::none;
}

// ---- transform checks -------------------------------------------------------

IdentityReport transform_check(TransformCase kind, const Params& p, const RunConfig& config,
                               const ClosedFormParams& cf, std::string note = {}) {
    const std::int64_t k = positive_k(p);
    const std::int64_t n = param_int(p, "n", 1);
    std::int64_t lu = 0, ru = 0;
    const ComplexMap direct = timed(lu, [&] { return dft(defining_map(kind, k, cf)); });
    const ComplexMap closed = timed(ru, [&] { return closed_form_dft(kind, k, cf); });
    Real worst(0);
    for (std::int64_t j = 0; j < k; ++j) worst = std::max<Real>(worst, abs(direct(j) - closed(j)));
    IdentityReport r = report(direct(n), closed(n), config.tolerance_value(),
                              note.empty() ? "residual is the maximum over all n mod k" : note, lu, ru);
    r.set_residual(worst);
    return r;
}

// ---- identities ---------------------------------------------------------------

IdentityReport run_eq1(const Params& p, const RunConfig& c) {
    const std::int64_t h = param_int(p, "h", 1), k = positive_k(p);
    require_coprime(h, k);
    return compare_timed([&] { return dedekind_s(h, k); }, [&] { return dedekind_cot_rhs(h, k); }, c);
}

IdentityReport run_eq2(const Params& p, const RunConfig& c) {
    const std::int64_t h = param_int(p, "h", 1), k = positive_k(p);
    const auto terms = static_cast<std::uint64_t>(param_int(p, "terms", static_cast<std::int64_t>(c.terms)));
    if (terms < 1) throw OutOfRange("terms must be positive");
    std::int64_t lu = 0, ru = 0;
    const Rational exact = timed(lu, [&] { return dedekind_s(h, k); });
    const SeriesEstimate est = timed(ru, [&] { return dedekind_series_rhs(h, k, terms); });
    const Real tol = std::max<Real>(est.tail_bound, c.tolerance_value());
    return report(exact, est.value, tol,
                  "partial sum of " + std::to_string(terms) + " terms; tolerance is the tail bound " +
                      format_scientific(est.tail_bound, 6),
                  lu, ru);
}

IdentityReport run_parseval(const Params& p, const RunConfig& c) {
    const auto k = optional_k(p);
    const ExactMap f1 = map_param(p, "f1", "sawtooth", k.value_or(3));
    const ExactMap f2 = map_param(p, "f2", "sawtooth", f1.period());
    require_same_period(f1.period(), f2.period());
    return compare_timed(
        [&] {
            Rational s(0);
            for (std::int64_t a = 0; a < f1.period(); ++a) s += f1(a) * f2(-a);
            return s;
        },
        [&] {
            const ComplexMap t1 = dft(f1), t2 = dft(f2);
            Complex s;
            for (std::int64_t a = 0; a < f1.period(); ++a) s += t1(a) * t2(a);
            return s / Real(f1.period());
        },
        c);
}

std::vector<ExactMap> th1_maps(const Params& p, std::int64_t k, std::size_t m) {
    const std::string spec = param_text(p, "maps", "sawtooth");
    std::vector<std::string> parts = split(spec, ';');
    if (parts.size() == 1) parts.assign(m, parts.front());
    if (parts.size() != m) throw std::invalid_argument("maps: need one spec per multiplier or a single spec");
    const std::int64_t seed = param_int(p, "seed", 1);
    std::vector<ExactMap> out;
    for (std::size_t j = 0; j < m; ++j) {
        std::string s = parts[j];
        if (s == "random" || s == "odd-random" || s == "even-random")
            s += ":" + std::to_string(seed * 1000 + static_cast<std::int64_t>(j));
        out.push_back(parse_map(s, k));
    }
    return out;
}

IdentityReport run_th1(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p);
    const auto hs = param_list(p, "hs", "1,1");
    const auto maps = th1_maps(p, k, hs.size());
    for (std::int64_t h : hs) require_coprime(h, k);
    return compare_timed([&] { return theorem1_lhs(maps, hs, c.work_limit); },
                         [&] { return theorem1_rhs(maps, hs); }, c);
}

struct PairInputs {
    std::int64_t k, h1, h2;
    ExactMap f1, f2;
};

PairInputs pair_inputs(const Params& p, const char* f1_default, const char* f2_default) {
    const std::int64_t k = positive_k(p);
    PairInputs in{k, param_int(p, "h1", 1), param_int(p, "h2", 1), map_param(p, "f1", f1_default, k),
                  map_param(p, "f2", f2_default, k)};
    require_coprime(in.h1, k);
    require_coprime(in.h2, k);
    return in;
}

Rational pair_lhs(const PairInputs& in) {
    Rational s(0);
    for (std::int64_t a = 0; a < in.k; ++a) s += in.f1(a * in.h1) * in.f2(a * in.h2);
    return s;
}

IdentityReport run_cor1(const Params& p, const RunConfig& c) {
    const PairInputs in = pair_inputs(p, "sawtooth", "bernoulli:2");
    return compare_timed([&] { return pair_lhs(in); },
                         [&] {
                             const ComplexMap t1 = dft(in.f1), t2 = dft(in.f2);
                             Complex s;
                             for (std::int64_t a = 0; a < in.k; ++a) s += t1(-a * in.h2) * t2(a * in.h1);
                             return s / Real(in.k);
                         },
                         c);
}

IdentityReport run_cor2(const Params& p, const RunConfig& c) {
    const PairInputs in = pair_inputs(p, "sawtooth", "sawtooth");
    const bool odd = in.f1.holds(Parity::odd) || in.f2.holds(Parity::odd);
    const bool even = in.f1.holds(Parity::even) || in.f2.holds(Parity::even);
    if (!odd && !even) throw ParityViolation("f1 or f2 must be odd or even");
    const int sign = odd ? -1 : 1;
    return compare_timed([&] { return pair_lhs(in); },
                         [&] {
                             const ComplexMap t1 = dft(in.f1), t2 = dft(in.f2);
                             Complex s;
                             for (std::int64_t a = 0; a < in.k; ++a) s += t1(a * in.h2) * t2(a * in.h1);
                             return s * Real(sign) / Real(in.k);
                         },
                         c, odd ? "odd factor: sign -1" : "even factor: sign +1");
}

IdentityReport run_lemma1_i(const Params& p, const RunConfig& c) {
    return transform_check(TransformCase::sawtooth, p, c, {});
}

IdentityReport run_lemma1_ii(const Params& p, const RunConfig& c) {
    ClosedFormParams cf;
    cf.order = param_order(p, "r", 2);
    cf.convention = c.bernoulli;
    std::string note;
    if (cf.order == 1 && c.bernoulli == BernoulliConvention::paper)
        note = "order 1: the literal transform (i/2)cot(pi n/k) omits the -1/2 that B_1 carries off the "
               "multiples of k; --convention corrected restores it";
    return transform_check(TransformCase::bernoulli, p, c, cf, note);
}

IdentityReport run_lemma1_iii(const Params& p, const RunConfig& c) {
    require_even_k(positive_k(p), "the (-1)^n ((n/k)) transform");
    return transform_check(TransformCase::alt_sawtooth, p, c, {});
}

IdentityReport run_lemma1_iv(const Params& p, const RunConfig& c) {
    require_odd_k(positive_k(p), "the (-1)^{n mod k} transform");
    return transform_check(TransformCase::alt_sign, p, c, {});
}

IdentityReport run_lemma1_v(const Params& p, const RunConfig& c) {
    ClosedFormParams cf;
    cf.s = param_complex(p, "s", "2");
    if (!(cf.s.re > 1)) throw ConvergenceDomain("requires Re s > 1");
    return transform_check(TransformCase::periodic_zeta, p, c, cf);
}

IdentityReport run_th2(const Params& p, const RunConfig& c) {
    const SumParams s = sum_params(p, c, false);
    if (s.m() % 2 == 1)
        return compare_timed([&] { return zagier_sum_lhs(s, c.work_limit); }, [] { return Rational(0); }, c,
                             "m odd: both sides vanish");
    return compare_timed([&] { return zagier_sum_lhs(s, c.work_limit); }, [&] { return zagier_sum_rhs(s); }, c);
}

IdentityReport run_cor3(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 1), h2 = param_int(p, "h2", 1);
    require_coprime(h1, k);
    require_coprime(h2, k);
    return compare_timed([&] { return homogeneous_dedekind_lhs(h1, h2, k); },
                         [&] { return homogeneous_dedekind_rhs(h1, h2, k); }, c);
}

IdentityReport run_th4(const Params& p, const RunConfig& c) {
    const SumParams s = sum_params(p, c, true);
    std::string note;
    if (c.bernoulli == BernoulliConvention::paper) {
        if (s.order_total() % 2 != 0)
            throw ParityViolation("r_1 + ... + r_m must be even, got " + std::to_string(s.order_total()));
        if (std::find(s.orders.begin(), s.orders.end(), 1u) != s.orders.end())
            note = "r = 1 convention gap: the literal order-1 transform drops the -1/2 of B_1 off the "
                   "multiples of k; --convention corrected evaluates the exact transform";
    } else {
        note = "corrected order-1 transforms";
    }
    return compare_timed([&] { return bernoulli_sum_lhs(s, c.work_limit); },
                         [&] { return bernoulli_sum_rhs(s, c.bernoulli); }, c, note);
}

IdentityReport run_cor5(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 1), h2 = param_int(p, "h2", 1);
    const unsigned r1 = param_order(p, "r1", 2), r2 = param_order(p, "r2", 2);
    require_coprime(h1, k);
    require_coprime(h2, k);
    std::string note;
    if (c.bernoulli == BernoulliConvention::paper) {
        if ((r1 + r2) % 2 != 0) throw ParityViolation("r1 + r2 must be even");
        if (r1 != r2)
            note = "literal pairing: cot^(r1-1) at a h1 with cot^(r2-1) at a h2; the transform derivation "
                   "pairs r1-1 with h2 and r2-1 with h1";
        if (r1 == 1 || r2 == 1) note += std::string(note.empty() ? "" : "; ") + "order-1 convention gap";
    }
    return compare_timed([&] { return bernoulli_pair_lhs(r1, r2, h1, h2, k); },
                         [&] { return bernoulli_pair_rhs(r1, r2, h1, h2, k, c.bernoulli); }, c, note);
}

IdentityReport run_th5(const Params& p, const RunConfig& c) {
    const SumParams s = sum_params(p, c, false);
    require_even_k(s.k, "A(h_1..h_m; k)");
    if (s.m() % 2 != 0) throw ParityViolation("A(h_1..h_m; k) requires m even");
    require_odd(s.multipliers[0], "h_1");
    return compare_timed([&] { return hardy_A_lhs(s, c.work_limit); }, [&] { return hardy_A_rhs(s); }, c);
}

IdentityReport run_cor6(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 1), h2 = param_int(p, "h2", 1);
    require_even_k(k, "the alternating pair sum");
    require_odd(h1, "h1");
    require_coprime(h1, k);
    require_coprime(h2, k);
    return compare_timed([&] { return alternating_pair_lhs(h1, h2, k); },
                         [&] { return alternating_pair_rhs(h1, h2, k); }, c);
}

IdentityReport run_cor7(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h = param_int(p, "h", 1);
    require_even_k(k, "the tan-cot form of s2");
    require_coprime(h, k);
    return compare_timed([&] { return hardy_sum(HardyKind::s2, h, k, c.zero_residue); },
                         [&] { return alternating_pair_rhs(1, h, k); }, c);
}

IdentityReport run_th7(const Params& p, const RunConfig& c) {
    const SumParams s = sum_params(p, c, false);
    require_odd_k(s.k, "B(h_1..h_m; k)");
    if (s.m() % 2 != 0) throw ParityViolation("B(h_1..h_m; k) requires m even");
    return compare_timed([&] { return hardy_B_lhs(s, c.work_limit); }, [&] { return hardy_B_rhs(s); }, c);
}

IdentityReport run_cor8(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 1), h2 = param_int(p, "h2", 1);
    require_odd_k(k, "the signed floor pair sum");
    require_odd(h1, "h1");
    require_coprime(h1, k);
    require_coprime(h2, k);
    return compare_timed([&] { return signed_floor_pair_lhs(h1, h2, k); },
                         [&] { return tan_cot_sum(h2, h1, k) / (2 * k); }, c);
}

IdentityReport run_cor9_s3(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h = param_int(p, "h", 1);
    require_odd_k(k, "the tan-cot form of s3");
    require_coprime(h, k);
    return compare_timed([&] { return hardy_sum(HardyKind::s3, h, k, c.zero_residue); },
                         [&] { return tan_cot_sum(h, 1, k) / (2 * k); }, c);
}

IdentityReport run_cor9_s5(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h = param_int(p, "h", 1);
    require_odd_k(k, "the tan-cot form of s5");
    require_odd(h, "h");
    require_coprime(h, k);
    return compare_timed([&] { return hardy_sum(HardyKind::s5, h, k, c.zero_residue); },
                         [&] { return tan_cot_sum(1, h, k) / (2 * k); }, c);
}

IdentityReport run_cor10(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 2), h2 = param_int(p, "h2", 1);
    require_odd_k(k, "the floor sign pair sum");
    require_even(h1, "h1");
    require_coprime(h1, k);
    require_coprime(h2, k);
    return compare_timed([&] { return floor_sign_pair_lhs(h1, h2, k); },
                         [&] { return tan_cot_sum(h2, h1, k) / (2 * k); }, c);
}

IdentityReport run_cor11(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h = param_int(p, "h", 2);
    require_odd_k(k, "the tan-cot form of s1");
    require_even(h, "h");
    require_coprime(h, k);
    return compare_timed([&] { return hardy_sum(HardyKind::s1, h, k, c.zero_residue); },
                         [&] { return tan_cot_sum(1, h, k) / (2 * k); }, c);
}

IdentityReport run_eq14(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 1), h2 = param_int(p, "h2", 1);
    std::int64_t us = 0;
    IdentityReport r = timed(us, [&] { return hardy_s4_identity(h1, h2, k, c.tolerance_value()); });
    r.rhs_micros = us;
    return r;
}

IdentityReport run_tan_sq(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p);
    require_odd_k(k, "sum tan^2(pi a/k) = k^2 - k");
    return compare_timed([&] { return tan_square_sum(k); }, [&] { return Rational(k * k - k); }, c);
}

IdentityReport run_remark1(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h = param_int(p, "h", 2);
    std::int64_t us = 0;
    IdentityReport r = timed(us, [&] { return remark1_equivalence(h, k, c.tolerance_value()); });
    r.rhs_micros = us;
    return r;
}

IdentityReport run_th9(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p), h1 = param_int(p, "h1", 1), h2 = param_int(p, "h2", 1);
    const Complex s1 = param_complex(p, "s1", "2"), s2 = param_complex(p, "s2", "2");
    std::int64_t us = 0;
    const ZetaPairSides sides = timed(us, [&] { return mikolas_D(s1, s2, h1, h2, k); });
    Value lhs = is_real(sides.lhs) ? Value(sides.lhs.re) : Value(sides.lhs);
    Value rhs = is_real(sides.rhs) ? Value(sides.rhs.re) : Value(sides.rhs);
    // tolerance is relative to the size of the sums
    const Real scale = std::max<Real>(Real(1), abs(sides.lhs));
    IdentityReport r = report(std::move(lhs), std::move(rhs), c.tolerance_value() * scale,
                              scale > 1 ? "tolerance scaled by |lhs|" : "", 0, us);
    return r;
}

ExactMap series_map(const Params& p) { return map_param(p, "f", "0,1,-1", optional_k(p)); }

IdentityReport run_lemma3_a(const Params& p, const RunConfig& c) {
    const ExactMap f = series_map(p);
    if (!f.holds(Parity::odd)) throw NotOdd("S(f) requires an odd periodic map");
    const auto terms = static_cast<std::uint64_t>(param_int(p, "terms", static_cast<std::int64_t>(c.terms)));
    const ComplexMap fc = promote(f);
    std::int64_t lu = 0, ru = 0;
    const Complex partial = timed(lu, [&] { return series_partial_sum(fc, terms); });
    const Complex finite = timed(ru, [&] {
        Complex s;
        for (std::int64_t r = 1; r < f.period(); ++r) s += fc(r) * cot_at(r, f.period());
        return s * (pi() / (2 * Real(f.period())));
    });
    const Real bound = series_tail_bound(fc, terms);
    return report(partial.re, finite.re, std::max<Real>(bound, c.tolerance_value()),
                  "partial sum of " + std::to_string(terms) + " terms; tolerance is the summation-by-parts bound " +
                      format_scientific(bound, 6),
                  lu, ru);
}

template <class Pick>
IdentityReport series_pair(const Params& p, const RunConfig& c, Pick pick) {
    const ExactMap f = series_map(p);
    std::int64_t us = 0;
    const SeriesForms forms = timed(us, [&] { return series_S(f); });
    auto [lhs, rhs] = pick(forms);
    auto as_value = [](const Complex& z) { return is_real(z) ? Value(z.re) : Value(z); };
    return report(as_value(lhs), as_value(rhs), c.tolerance_value(), {}, 0, us);
}

IdentityReport run_lemma3_b(const Params& p, const RunConfig& c) {
    return series_pair(p, c, [](const SeriesForms& s) { return std::pair{s.cot_form, s.transform_form}; });
}

IdentityReport run_lehmer(const Params& p, const RunConfig& c) {
    return series_pair(p, c, [](const SeriesForms& s) { return std::pair{s.cot_form, s.lehmer_form}; });
}

IdentityReport run_cor12(const Params& p, const RunConfig& c) {
    return series_pair(p, c, [](const SeriesForms& s) { return std::pair{s.cot_form, s.periodic_zeta_form}; });
}

IdentityReport run_gamma_dft(const Params& p, const RunConfig& c) {
    const std::int64_t k = positive_k(p);
    const std::int64_t n = param_int(p, "n", 1);
    std::int64_t lu = 0, ru = 0;
    const ComplexMap t = timed(lu, [&] { return dft(EulerConstantTable(k).as_map()); });
    const Complex closed = timed(ru, [&] {
        return mod(n, k) == 0 ? Complex(euler_gamma()) : periodic_zeta(Complex(Real(1)), Rational(-n, k));
    });
    IdentityReport r = report(t(n), closed, c.tolerance_value(), "residual is the maximum over all n mod k", lu, ru);
    r.set_residual(gamma_dft_check(k));
    return r;
}

std::vector<RegistryEntry> build_registry() {
    const std::string hk = "h (1), k";
    return {
        {"eq1", "s(h,k) = (1/4k) sum_{a=1}^{k-1} cot(pi a/k) cot(pi a h/k)", hk, "gcd(h,k) = 1", run_eq1},
        {"eq2", "s(h,k) = (1/2pi) sum_{r>=1, k !| r} cot(pi r h/k)/r", hk + ", terms (config)", "gcd(h,k) = 1",
         run_eq2},
        {"parseval", "sum_a f1(a) f2(-a) = (1/k) sum_a F(f1)(a) F(f2)(a)", "f1 (sawtooth), f2 (sawtooth), k (3)",
         "equal periods", run_parseval},
        {"th1", "sum_{a_1+...+a_m = 0} prod f_j(a_j h_j) = (1/k) sum_a prod F(f_j)(a h_j')",
         "k, hs (1,1), maps (sawtooth; list with ';' or random with seed)", "gcd(h_j,k) = 1", run_th1},
        {"cor1", "sum_a f1(a h1) f2(a h2) = (1/k) sum_a F(f1)(-a h2) F(f2)(a h1)",
         "k, h1 (1), h2 (1), f1 (sawtooth), f2 (bernoulli:2)", "gcd(h1,k) = gcd(h2,k) = 1", run_cor1},
        {"cor2", "sum_a f1(a h1) f2(a h2) = ((-1)^s/k) sum_a F(f1)(a h2) F(f2)(a h1)",
         "k, h1 (1), h2 (1), f1 (sawtooth), f2 (sawtooth)", "gcd(h_i,k) = 1; f1 or f2 odd (s=1) or even (s=0)",
         run_cor2},
        {"lemma1-i", "F(((n/k)))(n) = (i/2) cot(pi n/k), 0 on multiples of k", "k, n (1)", "k >= 1", run_lemma1_i},
        {"lemma1-ii", "F(B_r({n/k}))(n) = r k^{1-r} (i/2)^r cot^{(r-1)}(pi n/k), B_r k^{1-r} on multiples of k",
         "k, r (2), n (1)", "r >= 1", run_lemma1_ii},
        {"lemma1-iii", "F((-1)^n ((n/k)))(n) = -(i/2) tan(pi n/k), 0 at n = k/2", "k, n (1)", "k even",
         run_lemma1_iii},
        {"lemma1-iv", "F((-1)^{n mod k} off multiples of k)(n) = i tan(pi n/k)", "k, n (1)", "k odd", run_lemma1_iv},
        {"lemma1-v", "F(F(s, n/k))(n) = k^{1-s} zeta(s, {n/k}), k^{1-s} zeta(s) on multiples of k", "k, s (2), n (1)",
         "Re s > 1", run_lemma1_v},
        {"th2", "sum_{a_1+...+a_m = 0} prod ((a_j h_j/k)) = (-1)^{m/2}/(2^m k) sum_{a=1}^{k-1} prod cot(pi a h_j'/k)",
         "k, hs (1,1)", "gcd(h_j,k) = 1; m even (m odd: both sides 0)", run_th2},
        {"cor3", "sum_{a=1}^{k-1} ((a h1/k))((a h2/k)) = (1/4k) sum cot(pi a h1/k) cot(pi a h2/k)",
         "k, h1 (1), h2 (1)", "gcd(h_i,k) = 1", run_cor3},
        {"th4",
         "sum_{a_1+...+a_m = 0} prod B_{r_j}({a_j h_j/k}) = prod B_{r_j}/k^{A-m+1} + (-1)^{A/2} prod r_j/(2^A "
         "k^{A-m+1}) sum_{a=1}^{k-1} prod cot^{(r_j-1)}(pi a h_j'/k)",
         "k, hs, rs", "gcd(h_j,k) = 1; A = r_1+...+r_m even (paper convention)", run_th4},
        {"cor5",
         "sum_a B_{r1}({a h1/k}) B_{r2}({a h2/k}) = B_{r1}B_{r2}/k^{A-1} + (-1)^{(r1-r2)/2} r1 r2/(2^A k^{A-1}) "
         "sum cot^{(r1-1)} cot^{(r2-1)}",
         "k, h1 (1), h2 (1), r1 (2), r2 (2)", "gcd(h_i,k) = 1; r1 + r2 even (paper convention)", run_cor5},
        {"th5",
         "A(h_1..h_m;k) = (-1)^{m/2-1}/(2^m k) sum_{a != k/2} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)",
         "k, hs (1,1)", "k, m even; h_1 odd; gcd(h_j,k) = 1", run_th5},
        {"cor6", "sum_{a=1}^{k-1} (-1)^a ((a h1/k))((a h2/k)) = -(1/4k) sum_{a != k/2} tan(pi a h2/k) cot(pi a h1/k)",
         "k, h1 (1), h2 (1)", "k even; h1 odd; gcd(h_i,k) = 1", run_cor6},
        {"cor7", "s2(h,k) = -(1/4k) sum_{a != k/2} tan(pi a h/k) cot(pi a/k)", hk, "k even; gcd(h,k) = 1", run_cor7},
        {"th7", "B(h_1..h_m;k) = (-1)^{m/2}/(2^{m-1} k) sum tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)",
         "k, hs (1,1)", "k odd; m even; gcd(h_j,k) = 1", run_th7},
        {"cor8", "sum_{a=1}^{k-1} (-1)^{a + floor(a h1/k)} ((a h2/k)) = (1/2k) sum tan(pi a h2/k) cot(pi a h1/k)",
         "k, h1 (1), h2 (1)", "k odd; h1 odd; gcd(h_i,k) = 1", run_cor8},
        {"cor9-s3", "s3(h,k) = (1/2k) sum tan(pi a h/k) cot(pi a/k)", hk, "k odd; gcd(h,k) = 1", run_cor9_s3},
        {"cor9-s5", "s5(h,k) = (1/2k) sum tan(pi a/k) cot(pi a h/k)", hk, "k odd; h odd; gcd(h,k) = 1", run_cor9_s5},
        {"cor10", "sum_{a=1}^{k-1} (-1)^{floor(a h1/k)} ((a h2/k)) = (1/2k) sum tan(pi a h2/k) cot(pi a h1/k)",
         "k, h1 (2), h2 (1)", "k odd; h1 even; gcd(h_i,k) = 1", run_cor10},
        {"cor11", "s1(h,k) = (1/2k) sum tan(pi a/k) cot(pi a h/k)", "h (2), k", "k odd; h even; gcd(h,k) = 1",
         run_cor11},
        {"eq14", "sum_{a=1}^{k-1} (-1)^{(a h1 mod k) + (a h2 mod k)} = (1/k) sum tan(pi a h1/k) tan(pi a h2/k)",
         "k, h1 (1), h2 (1)", "k odd; gcd(h_i,k) = 1", run_eq14},
        {"tan-sq", "sum_{a=1}^{k-1} tan^2(pi a/k) = k^2 - k", "k", "k odd", run_tan_sq},
        {"remark1", "s1(h,k) = (1/k) sum_{j=1}^{(k-1)/2} tan(pi j/k) cot(pi h j/k)", "h (2), k",
         "k odd; h even; gcd(h,k) = 1", run_remark1},
        {"th9",
         "sum_{a=1}^{k-1} zeta(s1,{a h1/k}) zeta(s2,{a h2/k}) = (k^{s1+s2-1}-1) zeta(s1) zeta(s2) + k^{s1+s2-1} "
         "sum F(s1, a h2/k) F(s2, -a h1/k)",
         "k, h1 (1), h2 (1), s1 (2), s2 (2)", "Re s_i > 1; gcd(h_i,k) = 1", run_th9},
        {"lemma3-a", "sum_{r>=1} f(r)/r = (pi/2k) sum_{r=1}^{k-1} f(r) cot(pi r/k)",
         "f (0,1,-1), k (from f), terms (config)", "f odd", run_lemma3_a},
        {"lemma3-b", "(pi/2k) sum f(r) cot(pi r/k) = -(pi i/k^2) sum_{r=1}^{k-1} r F(f)(r)", "f (0,1,-1), k (from f)",
         "f odd", run_lemma3_b},
        {"lehmer-th8", "S(f) = sum_{r=1}^{k} f(r) gamma(r,k)", "f (0,1,-1), k (from f)", "f odd (mean zero)",
         run_lehmer},
        {"cor12", "S(f) = -(1/k) sum_{r=1}^{k-1} F(f)(r) F(1, -r/k)", "f (0,1,-1), k (from f)", "f odd", run_cor12},
        {"gamma-dft", "F(gamma(., k))(n) = F(1, -n/k), Euler's constant on multiples of k", "k, n (1)", "k >= 1",
         run_gamma_dft},
    };
}

// ---- sweep expansion ------------------------------------------------------------

std::vector<std::int64_t> coprime_residues(std::int64_t k) {
    std::vector<std::int64_t> out;
    for (std::int64_t h = 1; h <= std::max<std::int64_t>(k - 1, 1); ++h)
        if (gcd(h, k) == 1) out.push_back(h);
    return out;
}

std::vector<std::int64_t> expand_int(const std::string& raw, const std::optional<std::int64_t>& k,
                                     const std::string& name) {
    std::string text = trim(raw);
    if (text == "all-coprime") {
        if (!k) throw std::invalid_argument(name + ": all-coprime needs k");
        return coprime_residues(*k);
    }
    int parity = -1;
    if (text.rfind("odd ", 0) == 0) {
        parity = 1;
        text = trim(text.substr(4));
    } else if (text.rfind("even ", 0) == 0) {
        parity = 0;
        text = trim(text.substr(5));
    }
    std::vector<std::int64_t> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::int64_t lo = parse_int(trim(text.substr(0, dots)), name);
        const std::int64_t hi = parse_int(trim(text.substr(dots + 2)), name);
        if (hi < lo) throw std::invalid_argument(name + ": empty range " + raw);
        if (hi - lo > 10'000'000) throw std::invalid_argument(name + ": range too large");
        for (std::int64_t v = lo; v <= hi; ++v)
            if (parity < 0 || mod(v, 2) == parity) out.push_back(v);
        return out;
    }
    for (std::int64_t v : parse_int_list(text))
        if (parity < 0 || mod(v, 2) == parity) out.push_back(v);
    return out;
}

std::vector<std::string> expand_tuples(const std::string& raw, const Params& partial) {
    const std::string text = trim(raw);
    const auto k_text = lookup(partial, "k");
    auto join = [](const std::vector<std::int64_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    if (text == "all-coprime" || text.rfind("random:", 0) == 0) {
        if (!k_text) throw std::invalid_argument("hs: " + text + " needs k");
        const std::int64_t k = parse_int(*k_text, "k");
        const auto m_text = lookup(partial, "m");
        const std::int64_t m = m_text ? parse_int(*m_text, "m") : 2;
        if (m < 1 || m > 12) throw std::invalid_argument("m must lie in 1..12");
        const auto residues = coprime_residues(k);
        std::vector<std::string> out;
        if (text == "all-coprime") {
            std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
            while (true) {
                std::vector<std::int64_t> tuple;
                for (std::size_t i : idx) tuple.push_back(residues[i]);
                out.push_back(join(tuple));
                if (out.size() > 1'000'000) throw std::invalid_argument("hs: all-coprime expansion too large");
                std::size_t j = 0;
                while (j < idx.size() && ++idx[j] == residues.size()) idx[j++] = 0;
                if (j == idx.size()) break;
            }
            return out;
        }
        const std::int64_t count = parse_int(text.substr(7), "hs random count");
        std::mt19937_64 rng(static_cast<std::uint64_t>(0x5eed + 7919 * k + 104729 * m));
        std::uniform_int_distribution<std::size_t> pick(0, residues.size() - 1);
        for (std::int64_t i = 0; i < count; ++i) {
            std::vector<std::int64_t> tuple;
            for (std::int64_t j = 0; j < m; ++j) tuple.push_back(residues[pick(rng)]);
            out.push_back(join(tuple));
        }
        return out;
    }
    return split(text, ';');
}

const std::set<std::string>& int_range_params() {
    static const std::set<std::string> names{"h", "h1", "h2", "r", "r1", "r2", "n", "seed", "m", "terms"};
    return names;
}

}  // namespace

// ---- public helpers ----------------------------------------------------------------

std::int64_t param_int(const Params& p, const std::string& name) {
    const auto text = lookup(p, name);
    if (!text) throw std::invalid_argument("missing parameter --" + name);
    return parse_int(*text, name);
}

std::int64_t param_int(const Params& p, const std::string& name, std::int64_t fallback) {
    const auto text = lookup(p, name);
    return text ? parse_int(*text, name) : fallback;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& piece : split(text, ',')) {
        if (piece.empty()) continue;
        out.push_back(parse_int(piece, "list entry"));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

ExactMap parse_map(const std::string& raw, std::optional<std::int64_t> k) {
    const std::string spec = trim(raw);
    if (spec.empty()) throw std::invalid_argument("empty map spec");
    const char c0 = spec.front();
    if (std::isdigit(static_cast<unsigned char>(c0)) || c0 == '-' || c0 == '+') {
        std::vector<Rational> values;
        for (const auto& piece : split(spec, ',')) {
            try {
                values.emplace_back(piece);
            } catch (const std::exception&) {
                throw std::invalid_argument("map value '" + piece + "' is not a rational p/q");
            }
        }
        if (k && *k != static_cast<std::int64_t>(values.size()))
            throw PeriodMismatch("map has " + std::to_string(values.size()) + " values but k = " + std::to_string(*k));
        const Parity parity = detect_parity(values);
        return ExactMap(std::move(values), parity);
    }
    if (!k) throw std::invalid_argument("map '" + spec + "' needs --k");
    if (*k < 1) throw OutOfRange("k must be positive");
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "sawtooth") return sawtooth_map(*k);
    if (name == "alt-sawtooth") return alt_sawtooth_map(*k);
    if (name == "alt-sign") return alt_sign_map(*k);
    if (name == "delta") return delta_map(*k);
    if (name == "bernoulli") {
        const std::int64_t r = parse_int(arg, "bernoulli order");
        if (r < 1) throw OutOfRange("Bernoulli orders must be positive");
        return bernoulli_map(static_cast<unsigned>(r), *k);
    }
    if (name == "const") return constant_map(*k, Rational(arg));
    if (name == "random" || name == "odd-random" || name == "even-random") {
        std::mt19937_64 rng(static_cast<std::uint64_t>(parse_int(arg, "seed")));
        const std::int64_t n = *k;
        std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
        if (name == "random") {
            for (auto& x : v) x = random_value(rng);
            return ExactMap(std::move(v));
        }
        const bool odd = name == "odd-random";
        if (!odd) v[0] = random_value(rng);
        for (std::int64_t i = 1; 2 * i <= n; ++i) {
            const std::int64_t j = n - i;
            if (i == j) {
                v[i] = odd ? Rational(0) : random_value(rng);
            } else {
                v[i] = random_value(rng);
                v[j] = odd ? Rational(-v[i]) : v[i];
            }
        }
        return ExactMap(std::move(v), odd ? Parity::odd : Parity::even);
    }
    throw std::invalid_argument("unknown map '" + spec + "'");
}

// ---- config ----------------------------------------------------------------------

Real RunConfig::tolerance_value() const {
    const std::string t = trim(tolerance);
    if (t.empty()) return default_tolerance();
    if (t.rfind("2^", 0) == 0) return pow2(static_cast<long>(parse_int(t.substr(2), "tolerance exponent")));
    try {
        const Real v = parse_real(t);
        if (!(v > 0)) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("tolerance: expected a positive decimal or 2^-N, got '" + t + "'");
    }
}

void RunConfig::apply() const {
    if (precision < 32 || precision > 1u << 20)
        throw std::invalid_argument("precision must lie in [32, 2^20] bits, got " + std::to_string(precision));
    set_working_precision(precision);
    const Real floor = pow2(-static_cast<long>(precision) + 16);
    if (tolerance_value() < floor)
        throw std::invalid_argument("tolerance " + format_scientific(tolerance_value(), 6) +
                                    " is below 2^-(precision-16) = " + format_scientific(floor, 6) +
                                    "; raise --precision or loosen --tolerance");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (terms < 1) throw std::invalid_argument("terms must be positive");
}

// ---- registry --------------------------------------------------------------------

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = build_registry();
    return entries;
}

const RegistryEntry* find_identity(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

IdentityReport verify(const std::string& id, const Params& params, const RunConfig& config) {
    const RegistryEntry* entry = find_identity(id);
    if (!entry) throw std::invalid_argument("unknown identity '" + id + "'");
    IdentityReport r = entry->run(params, config);
    r.id = entry->id;
    r.anchor = entry->anchor;
    r.params.assign(params.begin(), params.end());
    return r;
}

std::vector<Params> expand_sweep(const Params& input) {
    Params ranges = input;
    // --m without --hs: ten seeded tuples per k
    if (ranges.count("m") && !ranges.count("hs")) ranges["hs"] = "random:10";
    std::vector<Params> partial{Params{}};
    // k first: other expansions depend on it; m before hs
    std::vector<std::string> order;
    if (ranges.count("k")) order.push_back("k");
    if (ranges.count("m")) order.push_back("m");
    for (const auto& [name, value] : ranges)
        if (name != "k" && name != "m") order.push_back(name);

    for (const auto& name : order) {
        const std::string& text = ranges.at(name);
        std::vector<Params> next;
        for (const auto& base : partial) {
            std::vector<std::string> values;
            if (name == "k" || int_range_params().count(name)) {
                std::optional<std::int64_t> k;
                if (auto kt = lookup(base, "k")) k = parse_int(*kt, "k");
                for (std::int64_t v : expand_int(text, k, name)) values.push_back(std::to_string(v));
            } else if (name == "hs" || name == "rs") {
                values = expand_tuples(text, base);
            } else {
                values.push_back(text);
            }
            for (const auto& v : values) {
                Params p = base;
                p[name] = v;
                next.push_back(std::move(p));
            }
        }
        partial = std::move(next);
    }
    return partial;
}

double SweepSummary::speedup() const {
    if (rhs_micros <= 0) return 0.0;
    return static_cast<double>(lhs_micros) / static_cast<double>(rhs_micros);
}

SweepSummary sweep(const std::string& id, const Params& ranges, const RunConfig& config) {
    if (!find_identity(id)) throw std::invalid_argument("unknown identity '" + id + "'");
    const auto t0 = Clock::now();
    SweepSummary out;
    out.id = id;
    out.max_residual = Real(0);
    const std::vector<Params> instances = expand_sweep(ranges);
    out.rows.resize(instances.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            SweepRow& row = out.rows[i];
            row.params = instances[i];
            try {
                row.report = verify(id, instances[i], config);
            } catch (const PreconditionError& e) {
                row.skip_reason = e.what();
            } catch (const WorkLimitExceeded& e) {
                row.skip_reason = e.what();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(instances.size());
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(instances.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& row : out.rows) {
        if (!row.report) {
            ++out.skipped;
            continue;
        }
        (row.report->pass ? out.passed : out.failed) += 1;
        out.max_residual = std::max<Real>(out.max_residual, row.report->residual);
        out.lhs_micros += row.report->lhs_micros;
        out.rhs_micros += row.report->rhs_micros;
    }
    out.wall_micros = micros_since(t0);
    return out;
}

// ---- compute ------------------------------------------------------------------------

const std::vector<std::string>& compute_targets() {
    static const std::vector<std::string> names{
        "dedekind", "hardy",  "gamma-rk",      "digamma",   "hurwitz",  "periodic-zeta",
        "bernoulli-number",   "bernoulli-bar", "sawtooth",  "zagier",   "bernoulli-sum",
        "hardy-A",  "hardy-B", "cot-deriv",    "dft",       "series-S", "mod-inverse"};
    return names;
}

ComputeResult compute(const std::string& target, const Params& p, const RunConfig& config) {
    auto finish = [](Value v) {
        ComputeResult r{std::move(v), {}};
        r.text = format_value(r.value);
        return r;
    };
    // imaginary parts at rounding level are dropped for display
    auto as_value = [](const Complex& z) {
        const Real noise = pow2(-static_cast<long>(working_precision()) + 16) * std::max<Real>(Real(1), abs(z.re));
        return is_real(z) || abs(z.im) <= noise ? Value(z.re) : Value(z);
    };

    if (target == "dedekind") return finish(dedekind_s(param_int(p, "h", 1), positive_k(p)));
    if (target == "hardy") {
        static const std::map<std::string, HardyKind> kinds{{"S", HardyKind::S},   {"s1", HardyKind::s1},
                                                             {"s2", HardyKind::s2}, {"s3", HardyKind::s3},
                                                             {"s4", HardyKind::s4}, {"s5", HardyKind::s5}};
        const std::string which = param_text(p, "which", "s1");
        const auto it = kinds.find(which);
        if (it == kinds.end()) throw std::invalid_argument("--which must be one of S, s1..s5");
        return finish(hardy_sum(it->second, param_int(p, "h", 1), positive_k(p), config.zero_residue));
    }
    if (target == "gamma-rk") return finish(euler_constant_gamma(param_int(p, "r", 1), positive_k(p)));
    if (target == "digamma") return finish(digamma(param_rational(p, "x")));
    if (target == "hurwitz") return finish(as_value(hurwitz_zeta(param_complex(p, "s", "2"), param_rational(p, "x"))));
    if (target == "periodic-zeta")
        return finish(as_value(periodic_zeta(param_complex(p, "s", "2"), param_rational(p, "x"))));
    if (target == "bernoulli-number") {
        const std::int64_t r = param_int(p, "r");
        if (r < 0) throw OutOfRange("r must be nonnegative");
        return finish(bernoulli_number(static_cast<unsigned>(r)));
    }
    if (target == "bernoulli-bar") {
        const std::int64_t r = param_int(p, "r");
        if (r < 0) throw OutOfRange("r must be nonnegative");
        return finish(bernoulli_bar(static_cast<unsigned>(r), param_rational(p, "x")));
    }
    if (target == "sawtooth") return finish(sawtooth(param_rational(p, "x")));
    if (target == "zagier") return finish(zagier_sum_lhs(sum_params(p, config, false), config.work_limit));
    if (target == "bernoulli-sum") return finish(bernoulli_sum_lhs(sum_params(p, config, true), config.work_limit));
    if (target == "hardy-A") return finish(hardy_A_lhs(sum_params(p, config, false), config.work_limit));
    if (target == "hardy-B") return finish(hardy_B_lhs(sum_params(p, config, false), config.work_limit));
    if (target == "cot-deriv") {
        const std::int64_t m = param_int(p, "m", 0);
        if (m < 0) throw OutOfRange("m must be nonnegative");
        return finish(cot_deriv_at(static_cast<unsigned>(m), param_int(p, "a", 1), positive_k(p)));
    }
    if (target == "dft") {
        const ExactMap f = map_param(p, "f", "sawtooth", optional_k(p));
        return finish(as_value(dft(f)(param_int(p, "n", 1))));
    }
    if (target == "series-S") return finish(as_value(series_S(series_map(p)).cot_form));
    if (target == "mod-inverse") return finish(Rational(mod_inverse(param_int(p, "h"), positive_k(p))));
    throw std::invalid_argument("unknown compute target '" + target + "'");
}

// ---- serialization -------------------------------------------------------------------

namespace {

std::string residual_text(const Real& r, int digits) {
    if (r == 0) return "0";
    return format_scientific(r, digits > 0 ? digits : decimal_digits());
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

nlohmann::json to_json(const IdentityReport& r, int digits) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {
        {"id", r.id},
        {"anchor", r.anchor},
        {"params", params},
        {"lhs", format_value(r.lhs, digits)},
        {"rhs", format_value(r.rhs, digits)},
        {"lhs_exact", is_exact(r.lhs)},
        {"rhs_exact", is_exact(r.rhs)},
        {"residual", residual_text(r.residual, digits)},
        {"tolerance", residual_text(r.tolerance, 6)},
        {"pass", r.pass},
        {"note", r.note},
        {"lhs_micros", r.lhs_micros},
        {"rhs_micros", r.rhs_micros},
    };
}

nlohmann::json to_json(const SweepSummary& s, int digits) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : s.rows) {
        if (row.report) {
            rows.push_back(to_json(*row.report, digits));
        } else {
            nlohmann::json params = nlohmann::json::object();
            for (const auto& [k, v] : row.params) params[k] = v;
            rows.push_back({{"id", s.id}, {"params", params}, {"skipped", row.skip_reason}});
        }
    }
    return {
        {"id", s.id},
        {"instances", s.rows.size()},
        {"passed", s.passed},
        {"failed", s.failed},
        {"skipped", s.skipped},
        {"max_residual", residual_text(s.max_residual, 6)},
        {"lhs_micros", s.lhs_micros},
        {"rhs_micros", s.rhs_micros},
        {"speedup", s.speedup()},
        {"wall_micros", s.wall_micros},
        {"rows", rows},
    };
}

IdentityReport replay(const nlohmann::json& j, const RunConfig& config) {
    Params params;
    for (const auto& [k, v] : j.at("params").items()) params[k] = v.get<std::string>();
    return verify(j.at("id").get<std::string>(), params, config);
}

std::string to_csv(const SweepSummary& s, int digits) {
    std::vector<std::string> names;
    for (const auto& row : s.rows)
        for (const auto& [k, v] : row.params)
            if (std::find(names.begin(), names.end(), k) == names.end()) names.push_back(k);
    std::ostringstream out;
    out << "id";
    for (const auto& n : names) out << ',' << csv_field(n);
    out << ",lhs,rhs,residual,pass,micros,lhs_micros,rhs_micros\n";
    for (const auto& row : s.rows) {
        out << csv_field(s.id);
        for (const auto& n : names) out << ',' << csv_field(lookup(row.params, n).value_or(""));
        if (row.report) {
            const auto& r = *row.report;
            out << ',' << csv_field(format_value(r.lhs, digits)) << ',' << csv_field(format_value(r.rhs, digits)) << ','
                << residual_text(r.residual, digits) << ',' << (r.pass ? "true" : "false") << ','
                << r.lhs_micros + r.rhs_micros << ',' << r.lhs_micros << ',' << r.rhs_micros << '\n';
        } else {
            out << ",,,,skipped,,,\n";
        }
    }
    return out.str();
}

std::string format_summary(const SweepSummary& s) {
    std::ostringstream out;
    out << s.id << ": " << s.rows.size() << " instances, " << s.passed << " pass, " << s.failed << " fail, "
        << s.skipped << " skipped\n";
    out << "max residual: " << residual_text(s.max_residual, 6) << '\n';
    out << "time: lhs " << s.lhs_micros << " us, rhs " << s.rhs_micros << " us";
    if (s.rhs_micros > 0) {
        std::ostringstream ratio;
        ratio.precision(1);
        ratio << std::fixed << s.speedup();
        out << ", lhs/rhs " << ratio.str() << "x";
    }
    out << ", wall " << s.wall_micros << " us\n";
    std::size_t shown = 0;
    for (const auto& row : s.rows) {
        if (!row.report || row.report->pass) continue;
        if (shown++ == 10) {
            out << "  ...\n";
            break;
        }
        out << "  FAIL";
        for (const auto& [k, v] : row.params) out << ' ' << k << '=' << v;
        out << ": lhs " << format_value(row.report->lhs, 20) << ", rhs " << format_value(row.report->rhs, 20)
            << ", residual " << residual_text(row.report->residual, 6);
        if (!row.report->note.empty()) out << " (" << row.report->note << ')';
        out << '\n';
    }
    return out.str();
}

}  // namespace dedekind
