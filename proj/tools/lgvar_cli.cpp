// lgvar: exact exponents, E-functions and variance checks for Landau-Ginzburg orbifolds.

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>

#include "lgvar/commands.hpp"

using namespace lgvar;

namespace {

struct InlineArgs {
  std::string input;
  std::string poly;
  std::string weights;
  std::vector<int> alpha;
  std::vector<std::string> gens;
  std::vector<std::string> rot_gens;
  bool assume_invariant = false;
  std::size_t group_cap = kDefaultGroupCap;
  std::string format = "json";
  bool timing = false;
  bool serial = false;
};

void add_common(CLI::App* cmd, InlineArgs& a, bool model_flags) {
  cmd->add_option("--input", a.input, "JSON job file (- for stdin)");
  if (model_flags) {
    cmd->add_option("--poly", a.poly, "polynomial, e.g. \"x1^3 + x2^3 + x3^3\"");
    cmd->add_option("--weights", a.weights, "comma-separated weights p/q");
    cmd->add_option("--alpha", a.alpha, "cusp exponents a1 a2 a3")->expected(3);
    cmd->add_option("--gen", a.gens, "generator p/q,p/q,... (repeatable)");
    cmd->add_option("--gen-rot", a.rot_gens, "generator r:a1,a2,... meaning (a1/r, a2/r, ...)");
    cmd->add_flag("--assume-invariant", a.assume_invariant, "skip the invariance check of f under G");
    cmd->add_option("--group-cap", a.group_cap, "largest group to enumerate")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--format", a.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--timing", a.timing, "report wall time (output is then not byte-stable)");
  cmd->add_flag("--serial", a.serial, "disable OpenMP parallelism");
}

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

void apply_generators(JobConfig& c, const InlineArgs& a) {
  for (const auto& g : a.gens) c.generators.push_back(parse_angle_list(g));
  for (const auto& g : a.rot_gens) c.generators.push_back(parse_rotation(g));
}

void apply_output(JobConfig& c, const InlineArgs& a) {
  if (a.format == "table") c.options.output = OutputFormat::Table;
}

JobConfig model_config(const InlineArgs& a) {
  JobConfig c;
  if (!a.input.empty()) {
    c = parse_job_config(read_json(a.input));
  } else {
    if (!a.alpha.empty()) {
      c.kind = JobKind::Cusp;
      c.alpha = std::array<int, 3>{a.alpha[0], a.alpha[1], a.alpha[2]};
    } else {
      c.kind = JobKind::WeightedHomogeneous;
    }
    if (!a.poly.empty()) c.polynomial = a.poly;
    if (!a.weights.empty()) {
      std::vector<Rational> w;
      std::stringstream ss(a.weights);
      std::string item;
      while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
      c.weights = w;
    }
    apply_generators(c, a);
    c.options.assume_invariant = a.assume_invariant;
    c.options.group_cap = a.group_cap;
  }
  apply_output(c, a);
  validate(c);
  return c;
}

int emit(const ReportDocument& r, const JobConfig& c) {
  if (c.options.output == OutputFormat::Table) std::cout << format_table(r);
  else std::cout << to_json(r).dump(2) << '\n';
  return r.passed() ? kExitOk : kExitCheckFailed;
}

RunOptions run_options(const InlineArgs& a) {
  return {a.serial ? Execution::Serial : Execution::Parallel, a.timing};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exponents, E-functions and variance identities for Landau-Ginzburg orbifolds"};
  app.require_subcommand(1);

  InlineArgs analyze_args, exp_args, ef_args, sweep_args, ded_args;

  auto* analyze = app.add_subcommand("analyze", "full invariant package for (f, G) or a cusp");
  add_common(analyze, analyze_args, true);

  auto* exponents = app.add_subcommand("exponents", "exponents with the trivial group");
  add_common(exponents, exp_args, true);

  auto* efunction = app.add_subcommand("efunction", "raw E-function and sector series");
  add_common(efunction, ef_args, true);

  SweepParams sweep_params;
  std::string groups = "cyclic";
  auto* sweep = app.add_subcommand("sweep", "verify the identities over Brieskorn-Pham examples");
  add_common(sweep, sweep_args, false);
  sweep->add_option("--n-min", sweep_params.n_range.first)->check(CLI::Range(1, kMaxDimension));
  sweep->add_option("--n-max", sweep_params.n_range.second)->check(CLI::Range(1, kMaxDimension));
  sweep->add_option("--a-max", sweep_params.a_max, "largest exponent a_i")->check(CLI::Range(2, 64));
  sweep->add_option("--order-bound", sweep_params.group_order_bound, "largest subgroup order");
  sweep->add_option("--groups", groups, "trivial, cyclic, all or random")
      ->check(CLI::IsMember({"trivial", "cyclic", "all", "random"}));
  sweep->add_option("--count", sweep_params.count, "random groups per weight system");
  sweep->add_option("--seed", sweep_params.seed, "seed for random groups");

  DedekindParams ded;
  int r = 0, r_min = 0, r_max = 0, coordinate = 0;
  std::int64_t a = 0, b = 0;
  std::vector<std::string> ded_gens;
  auto* dedekind = app.add_subcommand("dedekind", "cotangent and Dedekind sum identities");
  add_common(dedekind, ded_args, false);
  dedekind->add_option("--r", r, "modulus");
  dedekind->add_option("--r-min", r_min);
  dedekind->add_option("--r-max", r_max);
  dedekind->add_option("--a", a);
  dedekind->add_option("--b", b);
  dedekind->add_option("--gen", ded_gens, "subgroup generator p/q,p/q,... (repeatable)");
  dedekind->add_option("--coordinate", coordinate, "1-based coordinate for the subgroup sum");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      const JobConfig c = model_config(analyze_args);
      return emit(cmd_analyze(c, run_options(analyze_args)), c);
    }
    if (*exponents) {
      const JobConfig c = model_config(exp_args);
      return emit(cmd_exponents(c, run_options(exp_args)), c);
    }
    if (*efunction) {
      const JobConfig c = model_config(ef_args);
      return emit(cmd_efunction(c, run_options(ef_args)), c);
    }
    if (*sweep) {
      JobConfig c;
      if (!sweep_args.input.empty()) {
        c = parse_job_config(read_json(sweep_args.input));
      } else {
        c.kind = JobKind::Sweep;
        for (auto g : {SweepGroups::Trivial, SweepGroups::Cyclic, SweepGroups::All, SweepGroups::Random})
          if (groups == to_string(g)) sweep_params.groups = g;
        c.sweep = sweep_params;
      }
      apply_output(c, sweep_args);
      validate(c);
      return emit(cmd_sweep(c, run_options(sweep_args)), c);
    }
    if (*dedekind) {
      JobConfig c;
      if (!ded_args.input.empty()) {
        c = parse_job_config(read_json(ded_args.input));
      } else {
        c.kind = JobKind::Dedekind;
        if (dedekind->count("--r")) ded.r = r;
        if (dedekind->count("--r-min") || dedekind->count("--r-max"))
          ded.r_range = std::pair{dedekind->count("--r-min") ? r_min : 2, dedekind->count("--r-max") ? r_max : r_min};
        if (dedekind->count("--a")) ded.a = a;
        if (dedekind->count("--b")) ded.b = b;
        if (dedekind->count("--coordinate")) ded.coordinate = coordinate;
        for (const auto& g : ded_gens) c.generators.push_back(parse_angle_list(g));
        c.dedekind = ded;
      }
      apply_output(c, ded_args);
      validate(c);
      return emit(cmd_dedekind(c, run_options(ded_args)), c);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
