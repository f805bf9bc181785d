#include "dedekind/numeric.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace dedekind {

namespace {

std::atomic<unsigned> g_bits{0};

// Boost sizes mpfr values from a decimal digit count; pick the smallest one
// that yields at least `bits` of mantissa.
unsigned digits10_for(unsigned bits) {
    unsigned d = 1;
    while (mp::detail::digits10_2_2(d) < bits) ++d;
    return d;
}

void ensure_initialized() {
    if (g_bits.load(std::memory_order_acquire) == 0) set_working_precision(kDefaultPrecisionBits);
}

}  // namespace

void set_working_precision(unsigned bits) {
    if (bits < 32) throw std::invalid_argument("precision must be at least 32 bits");
    Real::default_precision(digits10_for(bits));
    g_bits.store(bits, std::memory_order_release);
}

unsigned working_precision() {
    ensure_initialized();
    return g_bits.load(std::memory_order_acquire);
}

namespace {
const bool g_default_precision_set = (ensure_initialized(), true);
}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_(working_precision()) {
    set_working_precision(bits);
}

PrecisionScope::~PrecisionScope() { set_working_precision(saved_); }

Real pow2(long e) {
    ensure_initialized();
    Real r;
    mpfr_set_ui_2exp(r.backend().data(), 1, e, MPFR_RNDN);
    return r;
}

Real to_real(const Rational& q) {
    ensure_initialized();
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& z) {
    ensure_initialized();
    Real r;
    mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
    return r;
}

Real parse_real(const std::string& text) {
    ensure_initialized();
    Real r;
    if (text.empty() || mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    return r;
}

const Real& pi() {
    static std::mutex mutex;
    static std::map<unsigned, Real> cache;
    const unsigned bits = working_precision();
    std::lock_guard lock(mutex);
    auto it = cache.find(bits);
    if (it == cache.end()) {
        Real value;
        mpfr_const_pi(value.backend().data(), MPFR_RNDN);
        it = cache.emplace(bits, std::move(value)).first;
    }
    return it->second;
}

int decimal_digits() {
    return static_cast<int>(std::floor(working_precision() * 0.30102999566398120)) - 2;
}

std::string format_real(const Real& x, int digits) {
    if (digits <= 0) digits = decimal_digits();
    return x.str(digits, std::ios_base::fmtflags(0));
}

std::string format_scientific(const Real& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

Complex::Complex() : re(0), im(0) { ensure_initialized(); }
Complex::Complex(Real r) : re(std::move(r)), im(0) {}
Complex::Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

Complex Complex::from(const Rational& q) { return Complex(to_real(q)); }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
}

Complex& Complex::operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(const Complex& a, const Complex& b) {
    Complex r = a;
    return r *= b;
}
Complex operator*(Complex a, const Real& s) { return a *= s; }
Complex operator*(const Real& s, Complex a) { return a *= s; }
Complex operator/(Complex a, const Real& s) { return a /= s; }

Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return r;
}

bool is_real(const Complex& z) { return z.im == 0; }

Complex unit_phase(const Real& theta) {
    Complex z;
    mpfr_sin_cos(z.im.backend().data(), z.re.backend().data(), theta.backend().data(), MPFR_RNDN);
    return z;
}

Complex exp(const Complex& z) {
    const Real m = mp::exp(z.re);
    if (z.im == 0) return Complex(m);
    return unit_phase(z.im) * m;
}

Complex pow(const Real& base, const Complex& z) {
    if (base <= 0) throw std::domain_error("pow: base must be positive");
    const Real l = mp::log(base);
    return exp(Complex(z.re * l, z.im * l));
}

Complex parse_complex(const std::string& input) {
    std::string text;
    for (char c : input)
        if (c != ' ') text += c;
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    if (text.back() != 'i') return Complex(parse_real(text));
    text.pop_back();
    // split at the last sign that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+") return Real(1);
        if (s == "-") return Real(-1);
        return parse_real(s);
    };
    if (split == std::string::npos) return Complex(Real(0), imag_of(text));
    return Complex(parse_real(text.substr(0, split)), imag_of(text.substr(split)));
}

std::string format_complex(const Complex& z, int digits) {
    if (z.im == 0) return format_real(z.re, digits);
    std::string s = format_real(z.re, digits);
    const std::string im = format_real(z.im, digits);
    if (im.front() == '-')
        s += " - " + im.substr(1) + "i";
    else
        s += " + " + im + "i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << format_complex(z, 20); }

}  // namespace dedekind
