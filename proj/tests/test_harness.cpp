#include <doctest.h>

#include "dedekind/errors.hpp"
#include "dedekind/harness.hpp"
#include "test_support.hpp"

#include <set>

using namespace dedekind;
using namespace dedekind::testing;

namespace {

RunConfig default_config() {
    RunConfig c;
    c.apply();
    return c;
}

}  // namespace

TEST_CASE("registry lists every identity exactly once") {
    const std::vector<std::string> ids{"eq1",       "eq2",      "parseval",   "th1",       "cor1",    "cor2",
                                       "lemma1-i",  "lemma1-ii", "lemma1-iii", "lemma1-iv", "lemma1-v", "th2",
                                       "cor3",      "th4",      "cor5",       "th5",       "cor6",    "cor7",
                                       "th7",       "cor8",     "cor9-s3",    "cor9-s5",   "cor10",   "cor11",
                                       "eq14",      "tan-sq",   "remark1",    "th9",       "lemma3-a", "lemma3-b",
                                       "lehmer-th8", "cor12",   "gamma-dft"};
    CHECK(registry().size() == ids.size());
    std::set<std::string> seen;
    for (const auto& e : registry()) {
        CHECK(seen.insert(e.id).second);
        CHECK_FALSE(e.anchor.empty());
        CHECK_FALSE(e.precondition.empty());
        CHECK(e.run);
    }
    for (const auto& id : ids) CHECK_MESSAGE(find_identity(id) != nullptr, id);
    CHECK(find_identity("nope") == nullptr);
}

TEST_CASE("every identity passes at its default-ish parameters") {
    const auto c = default_config();
    const std::vector<std::pair<std::string, Params>> cases{
        {"eq1", {{"h", "3"}, {"k", "7"}}},
        {"eq2", {{"h", "3"}, {"k", "7"}}},
        {"parseval", {{"f1", "sawtooth"}, {"f2", "bernoulli:3"}, {"k", "6"}}},
        {"th1", {{"k", "7"}, {"hs", "1,2,3"}, {"maps", "random"}, {"seed", "4"}}},
        {"cor1", {{"k", "9"}, {"h1", "2"}, {"h2", "4"}, {"f1", "random:1"}, {"f2", "random:2"}}},
        {"cor2", {{"k", "9"}, {"h1", "2"}, {"h2", "4"}, {"f1", "odd-random:1"}, {"f2", "random:2"}}},
        {"cor2", {{"k", "9"}, {"h1", "2"}, {"h2", "4"}, {"f1", "even-random:1"}, {"f2", "random:2"}}},
        {"lemma1-i", {{"k", "9"}}},
        {"lemma1-ii", {{"k", "9"}, {"r", "4"}}},
        {"lemma1-iii", {{"k", "10"}}},
        {"lemma1-iv", {{"k", "9"}}},
        {"lemma1-v", {{"k", "6"}, {"s", "3"}}},
        {"th2", {{"k", "11"}, {"hs", "1,2,3,4"}}},
        {"cor3", {{"k", "11"}, {"h1", "2"}, {"h2", "5"}}},
        {"th4", {{"k", "7"}, {"hs", "1,3"}, {"rs", "2,4"}}},
        {"cor5", {{"k", "7"}, {"h1", "1"}, {"h2", "3"}, {"r1", "2"}, {"r2", "2"}}},
        {"th5", {{"k", "10"}, {"hs", "3,7"}}},
        {"cor6", {{"k", "10"}, {"h1", "3"}, {"h2", "7"}}},
        {"cor7", {{"k", "10"}, {"h", "3"}}},
        {"th7", {{"k", "9"}, {"hs", "2,4,5,7"}}},
        {"cor8", {{"k", "9"}, {"h1", "5"}, {"h2", "2"}}},
        {"cor9-s3", {{"k", "9"}, {"h", "2"}}},
        {"cor9-s5", {{"k", "9"}, {"h", "5"}}},
        {"cor10", {{"k", "9"}, {"h1", "4"}, {"h2", "7"}}},
        {"cor11", {{"k", "9"}, {"h", "4"}}},
        {"eq14", {{"k", "9"}, {"h1", "2"}, {"h2", "7"}}},
        {"tan-sq", {{"k", "9"}}},
        {"remark1", {{"k", "9"}, {"h", "4"}}},
        {"th9", {{"k", "5"}, {"h1", "1"}, {"h2", "2"}, {"s1", "2"}, {"s2", "3"}}},
        {"lemma3-a", {{"f", "0,1,-1"}, {"terms", "1000"}}},
        {"lemma3-b", {{"f", "odd-random:3"}, {"k", "8"}}},
        {"lehmer-th8", {{"f", "odd-random:3"}, {"k", "8"}}},
        {"cor12", {{"f", "odd-random:3"}, {"k", "8"}}},
        {"gamma-dft", {{"k", "6"}, {"n", "2"}}},
    };
    for (const auto& [id, params] : cases) {
        const auto r = verify(id, params, c);
        CHECK_MESSAGE(r.pass, id << " residual " << format_scientific(r.residual, 6) << " " << r.note);
        CHECK(r.id == id);
        CHECK(r.anchor == find_identity(id)->anchor);
    }
}

TEST_CASE("verify examples") {
    const auto c = default_config();
    const auto th2 = verify("th2", {{"k", "3"}, {"hs", "1,1"}}, c);
    CHECK(th2.pass);
    CHECK(th2.residual < Real("1e-38"));

    const auto tsq = verify("tan-sq", {{"k", "5"}}, c);
    CHECK(tsq.pass);
    CHECK(format_value(tsq.lhs) == "20");
    CHECK(format_value(tsq.rhs) == "20");

    const auto th4 = verify("th4", {{"k", "3"}, {"rs", "1,1"}, {"hs", "1,1"}}, c);
    CHECK_FALSE(th4.pass);
    CHECK(format_value(th4.lhs) == "7/36");
    CHECK(close(std::get<Real>(th4.rhs), Real(1) / 36, Real("1e-70")));
    CHECK(th4.note.find("r = 1") != std::string::npos);

    RunConfig corrected = c;
    corrected.bernoulli = BernoulliConvention::corrected;
    CHECK(verify("th4", {{"k", "3"}, {"rs", "1,1"}, {"hs", "1,1"}}, corrected).pass);

    const auto cor5 = verify("cor5", {{"k", "7"}, {"h1", "1"}, {"h2", "3"}, {"r1", "3"}, {"r2", "5"}}, c);
    CHECK_FALSE(cor5.pass);
    CHECK_FALSE(cor5.note.empty());
    CHECK(verify("cor5", {{"k", "7"}, {"h1", "1"}, {"h2", "3"}, {"r1", "3"}, {"r2", "5"}}, corrected).pass);
}

TEST_CASE("precondition violations surface as typed errors") {
    const auto c = default_config();
    CHECK_THROWS_AS(verify("eq1", {{"h", "2"}, {"k", "4"}}, c), NotCoprime);
    CHECK_THROWS_AS(verify("cor9-s3", {{"h", "1"}, {"k", "4"}}, c), ParityViolation);
    CHECK_THROWS_AS(verify("cor7", {{"h", "1"}, {"k", "5"}}, c), ParityViolation);
    CHECK_THROWS_AS(verify("th4", {{"k", "5"}, {"hs", "1,1"}, {"rs", "2,3"}}, c), ParityViolation);
    CHECK_THROWS_AS(verify("cor2", {{"k", "5"}, {"f1", "random:1"}, {"f2", "random:2"}}, c), ParityViolation);
    CHECK_THROWS_AS(verify("lemma3-b", {{"f", "1,1,1"}}, c), NotOdd);
    CHECK_THROWS_AS(verify("eq1", {{"h", "x"}, {"k", "4"}}, c), std::invalid_argument);
    CHECK_THROWS_AS(verify("missing", {}, c), std::invalid_argument);
    CHECK_THROWS_AS(verify("eq1", {{"h", "1"}}, c), std::invalid_argument);
}

TEST_CASE("run config") {
    RunConfig c;
    CHECK(c.tolerance_value() == pow2(-128));
    c.tolerance = "2^-100";
    CHECK(c.tolerance_value() == pow2(-100));
    c.tolerance = "1e-20";
    CHECK(close(c.tolerance_value(), Real("1e-20"), Real("1e-40")));
    c.tolerance = "-1";
    CHECK_THROWS_AS(c.tolerance_value(), std::invalid_argument);
    c.tolerance = "2^-250";
    CHECK_THROWS_AS(c.apply(), std::invalid_argument);
    c.precision = 512;
    CHECK_NOTHROW(c.apply());
    RunConfig restore;
    restore.apply();
    RunConfig zero_jobs;
    zero_jobs.jobs = 0;
    CHECK_THROWS_AS(zero_jobs.apply(), std::invalid_argument);
}

TEST_CASE("map specs") {
    CHECK(parse_map("sawtooth", 5)(1) == Rational(-3, 10));
    CHECK(parse_map("0,1,-1", std::nullopt).holds(Parity::odd));
    CHECK(parse_map("2,1,1", std::nullopt).holds(Parity::even));
    CHECK(parse_map("1/2,1/3", std::nullopt)(1) == Rational(1, 3));
    CHECK_THROWS_AS(parse_map("0,1,-1", 4), PeriodMismatch);
    CHECK_THROWS_AS(parse_map("sawtooth", std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("wobble", 3), std::invalid_argument);
    for (std::int64_t k = 1; k <= 9; ++k) {
        CHECK(parse_map("odd-random:7", k).holds(Parity::odd));
        CHECK(parse_map("even-random:7", k).holds(Parity::even));
    }
    CHECK(parse_map("random:5", 6)(2) == parse_map("random:5", 6)(2));
    CHECK(parse_map("const:2/3", 4)(3) == Rational(2, 3));
    CHECK(parse_map("delta", 4)(4) == 1);
    CHECK(parse_map("bernoulli:2", 4)(0) == Rational(1, 6));
}

TEST_CASE("sweep expansion grammar") {
    CHECK(expand_sweep({{"k", "1..5"}}).size() == 5);
    CHECK(expand_sweep({{"k", "odd 3..49"}}).size() == 24);
    CHECK(expand_sweep({{"k", "even 2..48"}}).size() == 24);
    CHECK(expand_sweep({{"k", "2,3,5"}}).size() == 3);

    // sum over k <= 50 of phi(k)
    std::size_t phi_total = 0;
    for (std::int64_t k = 1; k <= 50; ++k)
        for (std::int64_t h = 1; h <= std::max<std::int64_t>(k - 1, 1); ++h)
            if (gcd(h, k) == 1) ++phi_total;
    const auto rows = expand_sweep({{"k", "1..50"}, {"h", "all-coprime"}});
    CHECK(rows.size() == phi_total);
    CHECK(rows.front().at("k") == "1");
    CHECK(rows.front().at("h") == "1");

    const auto tuples = expand_sweep({{"k", "5"}, {"hs", "all-coprime"}, {"m", "3"}});
    CHECK(tuples.size() == 64);
    const auto random = expand_sweep({{"k", "7"}, {"hs", "random:6"}, {"m", "4"}});
    CHECK(random.size() == 6);
    for (const auto& p : random) CHECK(parse_int_list(p.at("hs")).size() == 4);
    CHECK(expand_sweep({{"k", "7"}, {"hs", "1,2;3,4;5,6"}}).size() == 3);
    CHECK(expand_sweep({{"k", "7"}, {"m", "4"}}).at(0).at("hs").size() == 7);
    CHECK_THROWS_AS(expand_sweep({{"h", "all-coprime"}}), std::invalid_argument);
    CHECK_THROWS_AS(expand_sweep({{"k", "9..3"}}), std::invalid_argument);
}

TEST_CASE("sweep aggregates, skips and keeps order") {
    RunConfig c = default_config();
    const auto eq1 = sweep("eq1", {{"k", "1..20"}, {"h", "all-coprime"}}, c);
    CHECK(eq1.all_pass());
    CHECK(eq1.skipped == 0);
    CHECK(eq1.passed == eq1.rows.size());

    // k even rows are skipped, not failed
    const auto s3 = sweep("cor9-s3", {{"k", "2..12"}, {"h", "1"}}, c);
    CHECK(s3.skipped == 6);
    CHECK(s3.passed == 5);
    CHECK(s3.all_pass());

    c.jobs = 4;
    const auto parallel = sweep("eq1", {{"k", "1..20"}, {"h", "all-coprime"}}, c);
    REQUIRE(parallel.rows.size() == eq1.rows.size());
    for (std::size_t i = 0; i < eq1.rows.size(); ++i) {
        CHECK(parallel.rows[i].params == eq1.rows[i].params);
        CHECK(format_value(parallel.rows[i].report->lhs) == format_value(eq1.rows[i].report->lhs));
    }

    const auto fails = sweep("th4", {{"k", "3..5"}, {"hs", "1,1"}, {"rs", "1,1"}}, default_config());
    CHECK(fails.failed > 0);
    CHECK_FALSE(fails.all_pass());
    CHECK(format_summary(fails).find("FAIL") != std::string::npos);
    CHECK_THROWS_AS(sweep("nope", {}, c), std::invalid_argument);
}

TEST_CASE("JSON round trip reproduces residual digits") {
    const auto c = default_config();
    const std::vector<std::pair<std::string, Params>> cases{
        {"eq1", {{"h", "5"}, {"k", "12"}}},
        {"th9", {{"k", "5"}, {"h1", "1"}, {"h2", "2"}, {"s1", "2"}, {"s2", "3"}}},
        {"th4", {{"k", "3"}, {"rs", "1,1"}, {"hs", "1,1"}}},
        {"gamma-dft", {{"k", "7"}}},
    };
    for (const auto& [id, params] : cases) {
        const auto first = to_json(verify(id, params, c));
        const auto parsed = nlohmann::json::parse(first.dump());
        const auto again = to_json(replay(parsed, c));
        CHECK(again.at("residual") == first.at("residual"));
        CHECK(again.at("lhs") == first.at("lhs"));
        CHECK(again.at("rhs") == first.at("rhs"));
        CHECK(again.at("pass") == first.at("pass"));
        for (const char* key : {"id", "anchor", "params", "lhs", "rhs", "residual", "pass", "note"})
            CHECK(first.contains(key));
    }
}

TEST_CASE("CSV layout") {
    const auto s = sweep("eq1", {{"k", "3..4"}, {"h", "all-coprime"}}, default_config());
    const std::string csv = to_csv(s);
    CHECK(csv.rfind("id,h,k,lhs,rhs,residual,pass,micros,", 0) == 0);
    CHECK(csv.find("eq1,1,3,1/18,") != std::string::npos);
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 1 + s.rows.size());

    const auto tuples = to_csv(sweep("th2", {{"k", "5"}, {"hs", "1,2"}}, default_config()));
    CHECK(tuples.find("\"1,2\"") != std::string::npos);
}

TEST_CASE("compute targets") {
    const auto c = default_config();
    CHECK(compute("dedekind", {{"h", "1"}, {"k", "3"}}, c).text == "1/18");
    CHECK(compute("hardy", {{"which", "s3"}, {"h", "1"}, {"k", "3"}}, c).text == "1/3");
    CHECK(compute("gamma-rk", {{"r", "1"}, {"k", "1"}}, c).text.rfind("0.5772156649", 0) == 0);
    CHECK(compute("mod-inverse", {{"h", "3"}, {"k", "7"}}, c).text == "5");
    CHECK(compute("bernoulli-number", {{"r", "12"}}, c).text == "-691/2730");
    CHECK(compute("sawtooth", {{"x", "1/3"}}, c).text == "-1/6");
    CHECK(compute("zagier", {{"k", "3"}, {"hs", "1,1"}}, c).text == "-1/18");
    CHECK(compute("hardy-A", {{"k", "4"}, {"hs", "1,1"}}, c).text == "1/8");
    CHECK(compute("hardy-B", {{"k", "3"}, {"hs", "1,1"}}, c).text == "-1/3");
    CHECK(compute("bernoulli-sum", {{"k", "3"}, {"hs", "1,1"}, {"rs", "1,1"}}, c).text == "7/36");
    const auto pz = compute("periodic-zeta", {{"s", "2"}, {"x", "1/2"}}, c);
    CHECK(close(std::get<Real>(pz.value), -mpfr_pi() * mpfr_pi() / 12, Real("1e-60")));
    const auto series = compute("series-S", {{"f", "0,1,-1"}}, c);
    CHECK(close(std::get<Real>(series.value), mpfr_pi() / (3 * sqrt_of(3)), Real("1e-60")));
    CHECK(compute_targets().size() == 17);
    CHECK_THROWS_AS(compute("nope", {}, c), std::invalid_argument);
    CHECK_THROWS_AS(compute("hardy", {{"which", "s9"}, {"h", "1"}, {"k", "3"}}, c), std::invalid_argument);
    CHECK(compute("dedekind", {{"h", "2"}, {"k", "4"}}, c).text == "0");
    CHECK_THROWS_AS(compute("mod-inverse", {{"h", "2"}, {"k", "4"}}, c), NotCoprime);
}
