#include <doctest.h>

#include "lgvar/commands.hpp"
#include "lgvar/error.hpp"

using namespace lgvar;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

bool check_named(const ReportDocument& r, const std::string& name) {
  for (const auto& [n, ok] : r.checks)
    if (n == name) return ok;
  FAIL("no check named " << name);
  return false;
}

}  // namespace

TEST_CASE("job configs round-trip and enforce field presence") {
  const Json j = Json::parse(R"({
    "kind": "weighted_homogeneous",
    "polynomial": "x1^3+x2^3+x3^3",
    "group": {"generators": [["1/3", "1/3", "1/3"]]},
    "options": {"assume_invariant": false, "group_cap": 100, "output": "json"}
  })");
  const JobConfig c = parse_job_config(j);
  CHECK(c.generators.size() == 1);
  CHECK(c.options.group_cap == 100);
  CHECK(parse_job_config(to_json(c)) == c);

  CHECK(kind_of([] { parse_job_config(Json::parse(R"({"kind": "cusp", "alpha": [2,3,7], "polynomial": "x1"})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_job_config(Json::parse(R"({"kind": "weighted_homogeneous"})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_job_config(Json::parse(R"({"kind": "cusp", "alpha": [2,3,7], "extra": 1})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_job_config(Json::parse(R"({"kind": "weighted_homogeneous", "weights": [0.5]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_job_config(Json::parse(R"({"kind": "dedekind", "dedekind": {"r": 5, "a": 1}})")); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("generator syntax") {
  CHECK(parse_angle_list("1/3,1/3,1/3").size() == 3);
  CHECK(kind_of([] { parse_angle_list("1/3,4/3"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_angle_list("-1/3"); }) == ErrorKind::InvalidInput);
  const auto rot = parse_rotation("5:1,2,2");
  CHECK(rot == std::vector<Rational>{make_rational(1, 5), make_rational(2, 5), make_rational(2, 5)});
  CHECK(parse_rotation("4:5,3") == std::vector<Rational>{make_rational(1, 4), make_rational(3, 4)});
  CHECK(kind_of([] { parse_rotation("1,2"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("analyze the Fermat cubic") {
  JobConfig c;
  c.polynomial = "x1^3+x2^3+x3^3";
  c.generators = {parse_angle_list("1/3,1/3,1/3")};
  const ReportDocument r = cmd_analyze(c);
  CHECK(r.passed());
  CHECK(r.results["mu"] == 0);
  CHECK(r.results["variance"] == "0");
  CHECK(r.results["c_hat"] == "1");
  CHECK(r.results["hodge"].size() == 4);
  CHECK(parse_report(to_json(r)) == r);
  CHECK(to_json(parse_report(to_json(r))).dump() == to_json(r).dump());
}

TEST_CASE("analyze rejects non-SL and non-invariant groups") {
  JobConfig c;
  c.polynomial = "x1^3+x2^3+x3^3";
  c.generators = {parse_angle_list("1/2,0,0")};
  CHECK(kind_of([&] { cmd_analyze(c); }) == ErrorKind::NotSpecialLinear);
  CHECK(exit_code_for(ErrorKind::NotSpecialLinear) == kExitInvalidInput);
  c.generators = {parse_angle_list("1/2,1/2,0")};
  CHECK(kind_of([&] { cmd_analyze(c); }) == ErrorKind::InvarianceViolation);
  c.generators = {parse_angle_list("1/7,6/7,0")};
  c.options.group_cap = 3;
  CHECK(kind_of([&] { cmd_analyze(c); }) == ErrorKind::GroupTooLarge);
  CHECK(exit_code_for(ErrorKind::GroupTooLarge) == kExitCapExceeded);
}

TEST_CASE("analyze with weights only and the trivial group") {
  JobConfig c;
  c.weights = {make_rational(1, 3), make_rational(1, 5)};
  const ReportDocument r = cmd_analyze(c);
  CHECK(r.passed());
  CHECK(check_named(r, "trivial_group_formula"));
  CHECK(r.results["mu"] == 8);
  CHECK(r.results["variance"] == "28/45");
  CHECK(r.results["c_hat"] == "14/15");
  CHECK(r.results["exponents"].size() == 8);
}

TEST_CASE("analyze a cusp") {
  JobConfig c;
  c.kind = JobKind::Cusp;
  c.alpha = std::array<int, 3>{2, 3, 7};
  const ReportDocument r = cmd_analyze(c);
  CHECK(r.passed());
  CHECK(check_named(r, "cusp_theorem"));
  CHECK(r.results["mu"] == 11);
  CHECK(r.results["variance"] == "115/126");
  CHECK(r.results["chi"] == "-1/42");
}

TEST_CASE("exponents and efunction commands") {
  JobConfig c;
  c.polynomial = "x1^2*x2 + x2^5";
  const ReportDocument e = cmd_exponents(c);
  CHECK(e.passed());
  CHECK(e.results["mu"] == 6);
  c.polynomial = "x1^3+x2^3+x3^3";
  c.generators = {parse_angle_list("1/3,1/3,1/3")};
  const ReportDocument f = cmd_efunction(c);
  CHECK(f.passed());
  CHECK(f.results["terms"].size() == 4);
  CHECK(f.results["sectors"].size() == 3);
}

TEST_CASE("dedekind command") {
  JobConfig c;
  c.kind = JobKind::Dedekind;
  c.dedekind = DedekindParams{};
  c.dedekind->r = 3;
  ReportDocument r = cmd_dedekind(c);
  CHECK(r.passed());
  CHECK(r.results["cot_square_sum"][0]["value"] == "2/3");

  c.dedekind->r = 5;
  c.dedekind->a = 1;
  c.dedekind->b = 1;
  r = cmd_dedekind(c);
  CHECK(r.results["generalized_dedekind_sum"][0]["value"] == "-1/5");

  c.dedekind = DedekindParams{};
  c.dedekind->r_range = std::pair{2, 12};
  r = cmd_dedekind(c);
  CHECK_FALSE(r.passed());
  const Json& fails = r.results["generalized_dedekind_sum"]["failures"];
  CHECK(r.results["generalized_dedekind_sum"]["pairs"] == 506);
  CHECK_FALSE(fails.empty());
  for (const auto& f : fails) CHECK(f["common_divisor"].get<int>() > 1);
  for (const auto& [name, ok] : r.checks) {
    if (name == "generalized_dedekind_sum") CHECK_FALSE(ok);
    else CHECK(ok);
  }

  // prime moduli never share a factor with both a and b
  c.dedekind->r_range = std::pair{11, 11};
  r = cmd_dedekind(c);
  CHECK(r.passed());
  CHECK(r.results["generalized_dedekind_sum"]["failures"].empty());

  c.dedekind = DedekindParams{};
  c.dedekind->coordinate = 3;
  c.generators = {parse_angle_list("1/3,1/3,1/3"), parse_angle_list("1/2,1/2,0")};
  r = cmd_dedekind(c);
  CHECK(r.passed());
  CHECK(r.results["subgroup_cot_sum"]["value"] == "4/3");
}

TEST_CASE("sweeps are deterministic and replayable") {
  JobConfig c;
  c.kind = JobKind::Sweep;
  c.sweep = SweepParams{};
  c.sweep->n_range = {2, 2};
  c.sweep->a_max = 4;
  const ReportDocument a = cmd_sweep(c);
  const ReportDocument b = cmd_sweep(c, {Execution::Serial, false});
  CHECK(a.passed());
  CHECK(to_json(a).dump() == to_json(b).dump());

  c.sweep->groups = SweepGroups::Random;
  c.sweep->seed = 99;
  c.sweep->n_range = {2, 3};
  CHECK(to_json(cmd_sweep(c)).dump() == to_json(cmd_sweep(c)).dump());

  // n = 3, a_i = 3, the full group of order 9
  c.sweep = SweepParams{};
  c.sweep->n_range = {3, 3};
  c.sweep->a_max = 3;
  c.sweep->groups = SweepGroups::All;
  const ReportDocument full = cmd_sweep(c);
  CHECK(full.passed());
  CHECK(full.results["max_group_order"] == 9);
}

TEST_CASE("a failing case serializes as an analyze input") {
  JobConfig replay;
  replay.polynomial = brieskorn_pham_polynomial({3, 3, 3});
  replay.generators = {parse_angle_list("1/3,1/3,1/3")};
  const JobConfig back = parse_job_config(to_json(replay));
  CHECK(back == replay);
  CHECK(cmd_analyze(back).passed());
}

TEST_CASE("table output mentions every check") {
  JobConfig c;
  c.kind = JobKind::Cusp;
  c.alpha = std::array<int, 3>{2, 3, 7};
  const std::string t = format_table(cmd_analyze(c));
  CHECK(t.find("PASS cusp_theorem") != std::string::npos);
  CHECK(t.find("PASSED") != std::string::npos);
}
