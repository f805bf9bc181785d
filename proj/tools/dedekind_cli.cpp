// dedekind: compute sums, verify identities, sweep parameter ranges.

#include "dedekind/errors.hpp"
#include "dedekind/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using dedekind::Params;

// Parameter flags shared by all subcommands. A flag may take two tokens so
// that `--k odd 3..49` works without quoting.
const std::vector<std::string> kParamNames{"h",  "k",  "h1", "h2", "hs",   "rs",   "r",     "r1", "r2",
                                           "n",  "m",  "s",  "s1", "s2",   "f",    "f1",    "f2", "maps",
                                           "seed", "which", "x", "a", "terms"};

struct Options {
    std::string name;
    std::map<std::string, std::vector<std::string>> raw;
    unsigned precision = dedekind::kDefaultPrecisionBits;
    std::string tolerance;
    std::uint64_t terms = 100'000;
    std::uint64_t work_limit = dedekind::kDefaultWorkLimit;
    std::vector<std::string> conventions;
    bool json = false;
    std::string csv;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Options& o, const std::string& positional) {
    cmd->set_help_flag("--help", "print this help");
    cmd->add_option(positional, o.name)->required();
    for (const auto& p : kParamNames) {
        if (p == "terms") continue;
        cmd->add_option("--" + p, o.raw[p])->expected(1, 2)->allow_extra_args(false);
    }
    cmd->add_option("--precision", o.precision, "working precision in bits");
    cmd->add_option("--tolerance", o.tolerance, "decimal or 2^-N (default 2^-128)");
    cmd->add_option("--terms", o.terms, "series terms");
    cmd->add_option("--work-limit", o.work_limit, "brute-force term limit");
    cmd->add_option("--convention", o.conventions)
        ->check(CLI::IsMember({"paper", "corrected", "include-zero", "exclude-zero"}))
        ->take_all();
    cmd->add_flag("--json", o.json);
    cmd->add_option("--csv", o.csv, "write sweep rows to PATH");
    cmd->add_option("--jobs", o.jobs, "sweep workers");
}

Params collect(const Options& o) {
    Params p;
    for (const auto& [name, tokens] : o.raw) {
        if (tokens.empty()) continue;
        std::string joined;
        for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
        p[name] = joined;
    }
    return p;
}

dedekind::RunConfig config_of(const Options& o) {
    dedekind::RunConfig c;
    c.precision = o.precision;
    c.tolerance = o.tolerance;
    c.terms = o.terms;
    c.work_limit = o.work_limit;
    c.jobs = o.jobs;
    for (const auto& v : o.conventions) {
        if (v == "paper") c.bernoulli = dedekind::BernoulliConvention::paper;
        if (v == "corrected") c.bernoulli = dedekind::BernoulliConvention::corrected;
        if (v == "include-zero") c.zero_residue = dedekind::ZeroResidue::include;
        if (v == "exclude-zero") c.zero_residue = dedekind::ZeroResidue::exclude;
    }
    c.apply();
    return c;
}

int run_compute(const Options& o) {
    const auto config = config_of(o);
    const Params params = collect(o);
    const auto result = dedekind::compute(o.name, params, config);
    if (o.json) {
        nlohmann::json j{{"target", o.name},
                         {"params", params},
                         {"value", result.text},
                         {"exact", dedekind::is_exact(result.value)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << result.text << '\n';
    }
    return 0;
}

int run_verify(const Options& o) {
    const auto config = config_of(o);
    const auto report = dedekind::verify(o.name, collect(o), config);
    std::cout << dedekind::to_json(report).dump(2) << '\n';
    if (!report.pass) std::cerr << "FAIL " << report.id << ": " << report.anchor << '\n';
    return report.pass ? 0 : 1;
}

int run_sweep(const Options& o) {
    const auto config = config_of(o);
    const auto summary = dedekind::sweep(o.name, collect(o), config);
    if (!o.csv.empty()) {
        std::ofstream out(o.csv);
        if (!out) throw std::invalid_argument("cannot open " + o.csv + " for writing");
        out << dedekind::to_csv(summary);
    }
    if (o.json)
        std::cout << dedekind::to_json(summary).dump(2) << '\n';
    else
        std::cout << dedekind::format_summary(summary);
    return summary.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dedekind-type sums: exact values, trigonometric forms and identity checks"};
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);
    Options o;
    auto* compute = app.add_subcommand("compute", "evaluate a sum or special value");
    auto* verify = app.add_subcommand("verify", "check one identity instance");
    auto* sweep = app.add_subcommand("sweep", "check an identity over parameter ranges");
    add_common(compute, o, "target");
    add_common(verify, o, "id");
    add_common(sweep, o, "id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(o);
        if (verify->parsed()) return run_verify(o);
        return run_sweep(o);
    } catch (const dedekind::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const dedekind::WorkLimitExceeded& e) {
        std::cerr << "work limit exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
