#pragma once

// Arbitrary-precision real and complex scalars used on the transcendental
// side of every identity.
//
// The working precision is process-wide: set it once (before spawning
// workers) with set_working_precision(). Every Real created afterwards,
// including temporaries, carries that precision.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dedekind {

namespace mp = boost::multiprecision;

using Integer = mp::mpz_int;
using Rational = mp::mpq_rational;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 256;

void set_working_precision(unsigned bits);
unsigned working_precision();

/// Restores the previous working precision on scope exit. Single-threaded
/// use only (tests, CLI setup).
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// 2^e exactly.
Real pow2(long e);
Real to_real(const Rational& q);
Real to_real(const Integer& z);
/// Parses a decimal literal ("2", "-0.25", "1e-30") at working precision.
Real parse_real(const std::string& text);

/// pi at the working precision; computed once per precision level.
const Real& pi();

/// Decimal rendering with `digits` significant digits (0 = derived from
/// the working precision).
std::string format_real(const Real& x, int digits = 0);
std::string format_scientific(const Real& x, int digits);
int decimal_digits();

struct Complex {
    Real re;
    Real im;

    Complex();
    Complex(Real r);  // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i);
    static Complex from(const Rational& q);
    static Complex from(const Complex& z) { return z; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator*=(const Real& s);
    Complex& operator/=(const Real& s);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(Complex a, const Real& s);
Complex operator*(const Real& s, Complex a);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(Complex a, const Real& s);

Complex conj(const Complex& z);
Real abs(const Complex& z);
bool is_real(const Complex& z);
/// e^{i theta}
Complex unit_phase(const Real& theta);
Complex exp(const Complex& z);
/// base^z for real base > 0.
Complex pow(const Real& base, const Complex& z);
/// Parses "2", "2.5", "2+1i", "-1.5-0.5i", "3i".
Complex parse_complex(const std::string& text);
std::string format_complex(const Complex& z, int digits = 0);
std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace dedekind
