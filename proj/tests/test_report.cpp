#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "meanineq/errors.hpp"
#include "meanineq/report.hpp"

using namespace meanineq;
using nlohmann::json;

namespace {

InequalityReport sample_report() {
  InequalityReport r;
  r.lhs = 1.0 / 3.0;
  r.rhs = std::sqrt(2.0);
  r.gap = r.rhs - r.lhs;
  r.tol = 1e-10;
  r.verdict = Verdict::kHolds;
  r.function = "wyd:0.25";
  r.mode = Mode::kOperator;
  r.dims = 4;
  r.atoms = 1;
  r.seed = 18446744073709551615ull;
  return r;
}

std::vector<std::string> keys_in_order(const std::string& text) {
  std::vector<std::string> keys;
  const json j = json::parse(text);
  // nlohmann sorts keys; recover document order by scanning for `"key":`.
  std::size_t pos = 0;
  for (;;) {
    const std::size_t q = text.find("\": ", pos);
    if (q == std::string::npos) break;
    const std::size_t start = text.rfind('"', q - 1);
    const std::string key = text.substr(start + 1, q - start - 1);
    if (j.contains(key)) keys.push_back(key);
    pos = q + 3;
  }
  return keys;
}

CampaignSummary empty_summary() {
  CampaignSummary s;
  s.mode = Mode::kScalar;
  s.tol = 1e-10;
  s.seed = 7;
  s.dims = {1, 1};
  s.atoms = {1, 12};
  s.per_function.push_back({"geometric", 0, 0, std::nullopt, 0.0});
  return s;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("format_double uses 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-0.125) == "-0.125");
    CHECK(format_double(1e-10) == "1e-10");
    CHECK(format_double(1.3125) == "1.3125");
  }

  TEST_CASE("report JSON field order and schema") {
    const std::string text = emit_report(sample_report(), Format::kJson);
    CHECK(keys_in_order(text) == std::vector<std::string>{"schema_version", "mode", "function", "lhs", "rhs", "gap",
                                                          "tol", "verdict", "seed", "dims", "atoms"});
    const json j = json::parse(text);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["mode"] == "op");
    CHECK(j["verdict"] == "holds");
    CHECK(j["seed"].get<std::uint64_t>() == 18446744073709551615ull);
    CHECK(text.back() == '\n');
  }

  TEST_CASE("report JSON round trips exactly") {
    InequalityReport r = sample_report();
    CHECK(parse_report_json(emit_report(r, Format::kJson)) == r);
    r.seed.reset();
    r.verdict = Verdict::kViolated;
    r.lhs = std::nextafter(1.0, 2.0);
    r.gap = -std::numeric_limits<double>::denorm_min();
    const InequalityReport back = parse_report_json(emit_report(r, Format::kJson));
    CHECK(back == r);
    CHECK(json::parse(emit_report(r, Format::kJson))["seed"].is_null());
  }

  TEST_CASE("parse_report_json rejects bad input") {
    CHECK_THROWS_AS(parse_report_json("{"), UsageError);
    CHECK_THROWS_AS(parse_report_json("{}"), UsageError);
    std::string text = emit_report(sample_report(), Format::kJson);
    text.replace(text.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
    CHECK_THROWS_AS(parse_report_json(text), UsageError);
  }

  TEST_CASE("report CSV") {
    const std::string text = emit_report(sample_report(), Format::kCsv);
    std::istringstream in(text);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "schema_version,mode,function,lhs,rhs,gap,tol,verdict,seed,dims,atoms");
    CHECK(row == "1,op,wyd:0.25,0.33333333333333331,1.4142135623730951,1.0808802290397619,1e-10,holds,"
                 "18446744073709551615,4,1");
  }

  TEST_CASE("campaign JSON omits worst_gap and worst_case when empty") {
    const json j = json::parse(emit_report(empty_summary(), Format::kJson));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["trials"] == 0);
    CHECK(j["reports"] == 0);
    CHECK(j["violations"] == 0);
    CHECK_FALSE(j.contains("worst_gap"));
    CHECK_FALSE(j.contains("worst_case"));
    CHECK(j["dims"] == json::array({1, 1}));
    CHECK(j["atoms"] == json::array({1, 12}));
    CHECK(j["per_function"][0]["function"] == "geometric");
    CHECK_FALSE(j["per_function"][0].contains("worst_gap"));
  }

  TEST_CASE("campaign JSON includes the worst case") {
    CampaignSummary s = empty_summary();
    s.trials = 1;
    s.reports = 1;
    s.violations = 1;
    s.worst_gap = -0.125;
    s.per_function[0] = {"counterexample-g", 1, 1, -0.125, 0.125};
    InequalityReport r = sample_report();
    r.gap = -0.125;
    s.worst_case = WorstCase{"counterexample-g", 0, r, FiniteJointSpace::scalar({{0.5, 0.5, 1}, {0.5, 2, 1}})};
    const json j = json::parse(emit_report(s, Format::kJson));
    CHECK(j["worst_gap"] == -0.125);
    CHECK(j["worst_case"]["trial"] == 0);
    CHECK(j["worst_case"]["report"]["gap"] == -0.125);
    CHECK(j["worst_case"]["space"].size() == 2);
    CHECK(j["worst_case"]["space"][1]["x"] == 2.0);

    s.worst_case->space = FiniteJointSpace::matrix(
        {{1.0, SymMatrix::identity(2), SymMatrix::diagonal({1, 2}), DensityMatrix::maximally_mixed(2)}});
    const json m = json::parse(emit_report(s, Format::kJson));
    CHECK(m["worst_case"]["space"][0]["y"] == json::parse("[[1,0],[0,2]]"));
    CHECK(m["worst_case"]["space"][0]["rho"] == json::parse("[[0.5,0],[0,0.5]]"));
  }

  TEST_CASE("campaign CSV has one row per function") {
    CampaignSummary s = empty_summary();
    s.per_function.push_back({"harmonic", 0, 0, std::nullopt, 0.0});
    const std::string text = emit_report(s, Format::kCsv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.rfind("schema_version,mode,function,trials,violations,worst_gap,max_abs_gap,tol,seed\n", 0) == 0);
  }

  TEST_CASE("axiom report") {
    const auto f = RepresentingFunction::counterexample_g();
    const auto a = check_axioms(f, default_grid(), 1e-10);
    const auto c = concavity_probe(f, default_grid(), 1e-10);
    const json j = json::parse(emit_report(a, c, Format::kJson));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["all_pass"] == true);
    CHECK(j["axioms"].size() == a.checks.size());
    CHECK(j["concavity"]["verdict"] == "non-concave");
    CHECK(j["concavity"]["witness"].size() == 2);
    const std::string csv = emit_report(a, c, Format::kCsv);
    CHECK(csv.find("counterexample-g,concavity,") != std::string::npos);
  }

  TEST_CASE("parse_format") {
    CHECK(parse_format("json") == Format::kJson);
    CHECK(parse_format("csv") == Format::kCsv);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
  }

  TEST_CASE("strings are escaped") {
    InequalityReport r = sample_report();
    r.function = "we\"ird\\id\n";
    CHECK(parse_report_json(emit_report(r, Format::kJson)).function == r.function);
  }
}
