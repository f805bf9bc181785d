#pragma once

#include "dedekind/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dedekind {

/// One side of an identity: exact when it came from a definitional sum.
using Value = std::variant<Rational, Real, Complex>;

bool is_exact(const Value& v);
Complex to_complex(const Value& v);
/// |a - b|; exactly zero for equal exact values.
Real distance(const Value& a, const Value& b);
/// "p/q" for exact values, decimals otherwise.
std::string format_value(const Value& v, int digits = 0);

/// 2^-128, the default comparison tolerance at 256 bits.
Real default_tolerance();

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct IdentityReport {
    std::string id;
    std::string anchor;
    ParamList params;
    Value lhs;
    Value rhs;
    Real residual;
    Real tolerance;
    bool pass = false;
    std::string note;
    std::int64_t lhs_micros = 0;
    std::int64_t rhs_micros = 0;

    /// Fills residual = |lhs - rhs| and pass = residual < tolerance.
    static IdentityReport compare(std::string id, ParamList params, Value lhs, Value rhs,
                                  const Real& tolerance, std::string note = {});
    void set_residual(Real r);
};

}  // namespace dedekind
