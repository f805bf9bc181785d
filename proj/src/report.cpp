#include "dedekind/report.hpp"

namespace dedekind {

bool is_exact(const Value& v) { return std::holds_alternative<Rational>(v); }

Complex to_complex(const Value& v) {
    return std::visit(
        [](const auto& x) -> Complex {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return Complex::from(x);
            else
                return Complex(x);
        },
        v);
}

Real distance(const Value& a, const Value& b) {
    if (is_exact(a) && is_exact(b)) return to_real(Rational(mp::abs(std::get<Rational>(a) - std::get<Rational>(b))));
    return abs(to_complex(a) - to_complex(b));
}

std::string format_value(const Value& v, int digits) {
    return std::visit(
        [digits](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return x.str();
            else if constexpr (std::is_same_v<T, Real>)
                return format_real(x, digits);
            else
                return format_complex(x, digits);
        },
        v);
}

Real default_tolerance() { return pow2(-128); }

IdentityReport IdentityReport::compare(std::string id, ParamList params, Value lhs, Value rhs,
                                       const Real& tolerance, std::string note) {
    IdentityReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.tolerance = tolerance;
    r.note = std::move(note);
    r.set_residual(distance(r.lhs, r.rhs));
    return r;
}

void IdentityReport::set_residual(Real value) {
    residual = std::move(value);
    pass = residual < tolerance;
}

}  // namespace dedekind
