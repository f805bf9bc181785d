#pragma once

// Identity registry, verify/sweep drivers and report serialization behind
// the command-line tool.

#include "dedekind/periodic.hpp"
#include "dedekind/report.hpp"
#include "dedekind/sums.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

struct RunConfig {
    unsigned precision = kDefaultPrecisionBits;
    /// Decimal or "2^-N"; empty means 2^-128.
    std::string tolerance;
    std::uint64_t terms = 100'000;
    std::uint64_t work_limit = kDefaultWorkLimit;
    BernoulliConvention bernoulli = BernoulliConvention::paper;
    ZeroResidue zero_residue = ZeroResidue::exclude;
    unsigned jobs = 1;

    /// Sets the working precision, then checks tolerance >= 2^{-precision+16}.
    /// Throws std::invalid_argument.
    void apply() const;
    Real tolerance_value() const;
};

/// Parameter name -> textual value, e.g. {"k", "7"}, {"hs", "1,3"}.
using Params = std::map<std::string, std::string>;

struct RegistryEntry {
    std::string id;
    std::string anchor;        ///< the identity in words
    std::string schema;        ///< parameter names with defaults
    std::string precondition;  ///< hypotheses checked before evaluation
    std::function<IdentityReport(const Params&, const RunConfig&)> run;
};

const std::vector<RegistryEntry>& registry();
/// nullptr when unknown.
const RegistryEntry* find_identity(const std::string& id);

/// Evaluates one instance. Precondition violations propagate as
/// PreconditionError; malformed parameters as std::invalid_argument.
IdentityReport verify(const std::string& id, const Params& params, const RunConfig& config);

// ---- sweep ---------------------------------------------------------------

/// Range grammar for integer parameters:
///   "7", "1..50", "odd 3..49", "even 2..48", "1,4,9",
///   "all-coprime" (1 <= h <= max(k-1, 1), gcd(h, k) = 1; needs k).
/// For the tuple parameter "hs": "all-coprime" (every tuple of length m),
///   "random:N" (N seeded tuples of length m), or tuples separated by ';'.
/// With m given and hs absent, hs defaults to "random:10".
/// Every other parameter is passed through unchanged.
std::vector<Params> expand_sweep(const Params& ranges);

struct SweepRow {
    Params params;
    std::optional<IdentityReport> report;  ///< empty when skipped
    std::string skip_reason;
};

struct SweepSummary {
    std::string id;
    std::vector<SweepRow> rows;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    Real max_residual;
    std::int64_t lhs_micros = 0;
    std::int64_t rhs_micros = 0;
    std::int64_t wall_micros = 0;

    bool all_pass() const { return failed == 0; }
    /// lhs_micros / rhs_micros, 0 when nothing was timed.
    double speedup() const;
};

/// Instances are evaluated on config.jobs workers; rows keep expansion order.
SweepSummary sweep(const std::string& id, const Params& ranges, const RunConfig& config);

// ---- compute ---------------------------------------------------------------

struct ComputeResult {
    Value value;
    std::string text;
};

/// Targets: dedekind, hardy, gamma-rk, digamma, hurwitz, periodic-zeta,
/// bernoulli-number, bernoulli-bar, sawtooth, zagier, bernoulli-sum,
/// hardy-A, hardy-B, cot-deriv, dft, series-S, mod-inverse.
ComputeResult compute(const std::string& target, const Params& params, const RunConfig& config);
const std::vector<std::string>& compute_targets();

// ---- serialization -----------------------------------------------------------

nlohmann::json to_json(const IdentityReport& report, int digits = 0);
nlohmann::json to_json(const SweepSummary& summary, int digits = 0);
/// Re-runs the identity named in a serialized report with its parameters.
IdentityReport replay(const nlohmann::json& report, const RunConfig& config);
/// Header: id, parameter names..., lhs, rhs, residual, pass, micros, lhs_micros, rhs_micros.
std::string to_csv(const SweepSummary& summary, int digits = 0);
std::string format_summary(const SweepSummary& summary);

// ---- parameter helpers (shared with the CLI) -------------------------------------

std::int64_t param_int(const Params& p, const std::string& name);
std::int64_t param_int(const Params& p, const std::string& name, std::int64_t fallback);
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// Map specs: "sawtooth", "bernoulli:R", "alt-sawtooth", "alt-sign", "delta",
/// "const:C", "random:SEED", "odd-random:SEED", "even-random:SEED", or the
/// explicit values f(0),...,f(k-1) as "0,1,-1".
ExactMap parse_map(const std::string& spec, std::optional<std::int64_t> k);

}  // namespace dedekind
