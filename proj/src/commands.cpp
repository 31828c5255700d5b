#include "lgvar/commands.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "lgvar/cusp.hpp"
#include "lgvar/dedekind.hpp"
#include "lgvar/polynomial.hpp"

namespace lgvar {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(ReportDocument& r, const RunOptions& run, const Stopwatch& clock) {
  if (run.timing) r.timing_seconds = clock.seconds();
}

Json angles_json(const GroupElement& g) {
  Json row = Json::array();
  for (const auto& a : g.angles()) row.push_back(rational_json(a));
  return row;
}

Json exponents_json(const ExponentMultiset& m) {
  Json out = Json::array();
  for (const auto& [q, mult] : m.entries()) out.push_back(Json{{"q", rational_json(q)}, {"mult", mult}});
  return out;
}

Json hodge_json(const HodgeTable& table) {
  Json out = Json::array();
  for (const auto& e : table) out.push_back(Json{{"p", rational_json(e.p)}, {"q", rational_json(e.q)}, {"h", e.h}});
  return out;
}

Json series_json(const FracLaurent1<Rational>& s, const char* exponent_key) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms())
    out.push_back(Json{{exponent_key, rational_json(e)}, {"coefficient", to_int64(c)}});
  return out;
}

struct WeightedModel {
  std::optional<PolynomialExpr> polynomial;
  WeightSystem weights;
};

WeightedModel resolve_weighted(const JobConfig& c, std::vector<std::string>& warnings) {
  if (c.kind != JobKind::WeightedHomogeneous)
    throw Error(ErrorKind::InvalidInput, "this command needs kind weighted_homogeneous");
  std::optional<PolynomialExpr> f;
  if (c.polynomial) f = parse_polynomial(*c.polynomial);
  std::optional<WeightSystem> w;
  if (c.weights) {
    w = WeightSystem(*c.weights);
    if (f) {
      if (f->variables() > w->size())
        throw Error(ErrorKind::InvalidInput, "polynomial uses more variables than there are weights");
      verify_weights(*f, *w);
    }
  } else {
    w = infer_weights(*f);
  }
  // weights that no non-degenerate polynomial has give a non-polynomial product
  milnor_number_trivial(*w);
  for (const auto& msg : w->warnings()) warnings.push_back(msg);
  return {std::move(f), std::move(*w)};
}

DiagonalGroup resolve_group(const JobConfig& c, const WeightedModel& m, std::vector<std::string>& warnings) {
  const int n = m.weights.size();
  DiagonalGroup g = enumerate_group(n, to_generators(c.generators, n), c.options.group_cap);
  if (c.options.assume_invariant) {
    warnings.push_back("invariance of f under G assumed, not checked");
  } else if (m.polynomial) {
    const InvarianceReport inv = check_invariance(*m.polynomial, g);
    if (!inv.ok) throw Error(ErrorKind::InvarianceViolation, inv.message);
  } else if (g.order() > 1) {
    warnings.push_back("no polynomial given; admissibility of G is checked only through sector integrality");
  }
  return g;
}

ReportDocument analyze_weighted(const JobConfig& c, const RunOptions& run) {
  ReportDocument r;
  r.inputs = to_json(c);
  const WeightedModel m = resolve_weighted(c, r.warnings);
  const DiagonalGroup g = resolve_group(c, m, r.warnings);
  const MainTheoremVerdict v = verify_main_theorem(m.weights, g, run.exec);

  r.results["n"] = m.weights.size();
  Json weights = Json::array();
  for (const auto& w : m.weights.weights()) weights.push_back(rational_json(w));
  r.results["weights"] = weights;
  r.results["group_order"] = g.order();
  r.results["juniors"] = junior_count(g);
  r.results["mu"] = v.mu;
  r.results["mu_inclusion_exclusion"] = rational_json(v.mu_inclusion_exclusion);
  r.results["c_hat"] = rational_json(v.c_hat);
  r.results["variance"] = rational_json(v.variance);
  r.results["expected_variance"] = rational_json(v.expected_variance);
  r.results["mean"] = rational_json(v.mean);
  if (!v.error || v.sector_finiteness) {
    r.results["exponents"] = exponents_json(exponent_multiset(v.e));
    r.results["hodge"] = hodge_json(v.hodge);
    r.results["chi_y"] = series_json(chi_y(v.e), "exponent");
  }

  r.check("sector_finiteness", v.sector_finiteness);
  r.check("hodge_signs", v.hodge_signs);
  r.check("main_theorem", v.main_theorem);
  r.check("swap_symmetry", v.swap_symmetry);
  r.check("serre_duality", v.serre_duality);
  r.check("zero_mean", v.zero_mean);
  r.check("mu_routes", v.mu_routes);
  r.check("chi_y_routes", v.chi_y_routes);
  r.check("sector_counts", verify_sector_counts(g));
  if (g.order() == 1 && !v.error) {
    const bool exps = exponent_multiset(v.e) == exponents_trivial(m.weights);
    const std::int64_t mu = milnor_number_trivial(m.weights);
    r.check("trivial_group_formula", exps && mu == v.mu && v.variance == c_hat(m.weights) * mu / 12);
  }
  if (v.error) r.diagnostics["error"] = *v.error;
  return r;
}

ReportDocument analyze_cusp(const JobConfig& c) {
  ReportDocument r;
  r.inputs = to_json(c);
  const CuspModel m = build_cusp(*c.alpha, to_generators(c.generators, 3), c.options.group_cap);
  const CuspVariance v = cusp_variance_sides(m);
  const ExponentMultiset exps = cusp_exponents(m);
  r.results["group_order"] = m.group.order();
  r.results["gammas"] = m.gammas;
  r.results["juniors"] = m.juniors;
  r.results["mu"] = cusp_mu(m);
  r.results["chi"] = rational_json(cusp_chi(m));
  r.results["c_hat"] = "1";
  r.results["variance"] = rational_json(v.direct);
  r.results["variance_formula"] = rational_json(v.formula);
  r.results["exponents"] = exponents_json(exps);
  r.check("cusp_theorem", v.holds());
  r.check("exponent_count", exps.total() == cusp_mu(m));
  r.check("sector_counts", verify_sector_counts(m.group));
  if (m.juniors > 0)
    r.warnings.push_back("j_G = " + std::to_string(m.juniors) +
                         ": exponents 1 and 2 carry the signed multiplicity 1 - j_G");
  return r;
}

std::vector<int> range_of(const DedekindParams& d) {
  std::vector<int> rs;
  if (d.r) rs.push_back(*d.r);
  if (d.r_range)
    for (int r = d.r_range->first; r <= d.r_range->second; ++r) rs.push_back(r);
  return rs;
}

}  // namespace

ReportDocument cmd_analyze(const JobConfig& config, const RunOptions& run) {
  validate(config);
  Stopwatch clock;
  ReportDocument r;
  if (config.kind == JobKind::WeightedHomogeneous) r = analyze_weighted(config, run);
  else if (config.kind == JobKind::Cusp) r = analyze_cusp(config);
  else throw Error(ErrorKind::InvalidInput, "analyze needs kind weighted_homogeneous or cusp");
  finish(r, run, clock);
  return r;
}

ReportDocument cmd_exponents(const JobConfig& config, const RunOptions& run) {
  validate(config);
  Stopwatch clock;
  ReportDocument r;
  r.inputs = to_json(config);
  if (!config.generators.empty()) throw Error(ErrorKind::InvalidInput, "exponents takes no group generators");
  const WeightedModel m = resolve_weighted(config, r.warnings);
  const ExponentMultiset exps = exponents_trivial(m.weights);
  const std::int64_t mu = milnor_number_trivial(m.weights);
  const Rational center = make_rational(m.weights.size(), 2);
  const Rational var = exps.central_second_moment(center);
  r.results["mu"] = mu;
  r.results["c_hat"] = rational_json(c_hat(m.weights));
  r.results["variance"] = rational_json(var);
  r.results["exponents"] = exponents_json(exps);
  r.check("exponent_count", exps.total() == mu);
  r.check("exponent_duality", [&] {
    for (const auto& [q, mult] : exps.entries())
      if (exps.multiplicity(2 * center - q) != mult) return false;
    return true;
  }());
  r.check("trivial_group_formula", var == c_hat(m.weights) * mu / 12);
  finish(r, run, clock);
  return r;
}

ReportDocument cmd_efunction(const JobConfig& config, const RunOptions& run) {
  validate(config);
  Stopwatch clock;
  ReportDocument r;
  r.inputs = to_json(config);
  const WeightedModel m = resolve_weighted(config, r.warnings);
  const DiagonalGroup g = resolve_group(config, m, r.warnings);
  const auto sectors = sector_contributions(m.weights, g, run.exec);
  const EFunction e = assemble_e_function(g.dimension(), sectors);
  Json terms = Json::array();
  for (const auto& [key, c] : e.poly.terms())
    terms.push_back(Json{{"t", rational_json(key.first)}, {"tbar", rational_json(key.second)}, {"c", c}});
  r.results["terms"] = terms;
  Json sj = Json::array();
  for (const auto& s : sectors)
    sj.push_back(Json{{"element", angles_json(s.element)},
                      {"age", rational_json(s.age)},
                      {"fixed_dim", s.fixed_dim},
                      {"sign", s.sign},
                      {"averaged", series_json(s.series.averaged, "exponent")}});
  r.results["sectors"] = sj;
  r.check("swap_symmetry", e.poly.swapped() == e.poly);
  r.check("serre_duality", e.poly.inverted() == e.poly);
  finish(r, run, clock);
  return r;
}

ReportDocument cmd_dedekind(const JobConfig& config, const RunOptions& run) {
  validate(config);
  if (config.kind != JobKind::Dedekind) throw Error(ErrorKind::InvalidInput, "dedekind needs kind dedekind");
  Stopwatch clock;
  ReportDocument r;
  r.inputs = to_json(config);
  const DedekindParams& d = *config.dedekind;
  const std::vector<int> rs = range_of(d);

  if (!rs.empty()) {
    Json rows = Json::array();
    bool ok = true;
    for (int rr : rs) {
      const IdentitySides s = cot_square_sum_sides(rr);
      ok = ok && s.holds();
      rows.push_back(Json{{"r", rr}, {"value", rational_json(s.cyclotomic)}, {"expected", rational_json(s.closed)}});
    }
    r.results["cot_square_sum"] = rows;
    r.check("cot_square_sum", ok);

    if (d.a) {
      Json g = Json::array();
      bool gok = true, rescaled = true;
      for (int rr : rs) {
        const IdentitySides s = generalized_dedekind_sum_sides(*d.a, *d.b, rr, &r.warnings);
        const int cd = dedekind_common_divisor(*d.a, *d.b, rr);
        gok = gok && s.holds();
        rescaled = rescaled && s.closed == cd * s.cyclotomic;
        g.push_back(Json{{"r", rr},
                         {"a", *d.a},
                         {"b", *d.b},
                         {"value", rational_json(s.cyclotomic)},
                         {"sawtooth_sum", rational_json(s.closed)},
                         {"common_divisor", cd}});
      }
      r.results["generalized_dedekind_sum"] = g;
      r.check("generalized_dedekind_sum", gok);
      r.check("generalized_dedekind_sum_rescaled", rescaled);
    } else {
      // every pair 0 < a, b < r
      std::vector<std::vector<Json>> failures(rs.size());
      std::vector<std::size_t> pairs(rs.size(), 0);
      std::vector<char> rescaled(rs.size(), 1);
#pragma omp parallel for schedule(dynamic) if (run.exec == Execution::Parallel)
      for (std::size_t idx = 0; idx < rs.size(); ++idx) {
        const int rr = rs[idx];
        const DedekindTable table(rr);
        for (int a = 1; a < rr; ++a)
          for (int b = 1; b < rr; ++b) {
            const IdentitySides s = table.sides(a, b);
            const int cd = dedekind_common_divisor(a, b, rr);
            ++pairs[idx];
            if (s.closed != cd * s.cyclotomic) rescaled[idx] = 0;
            if (!s.holds())
              failures[idx].push_back(Json{{"r", rr},
                                           {"a", a},
                                           {"b", b},
                                           {"value", rational_json(s.cyclotomic)},
                                           {"sawtooth_sum", rational_json(s.closed)},
                                           {"common_divisor", cd}});
          }
      }
      std::size_t total = 0;
      Json fail = Json::array();
      for (std::size_t idx = 0; idx < rs.size(); ++idx) {
        total += pairs[idx];
        for (auto& f : failures[idx]) fail.push_back(std::move(f));
      }
      r.results["generalized_dedekind_sum"] = Json{{"pairs", total}, {"failures", fail}};
      r.check("generalized_dedekind_sum", fail.empty());
      r.check("generalized_dedekind_sum_rescaled",
              std::all_of(rescaled.begin(), rescaled.end(), [](char c) { return c != 0; }));
    }
  }

  if (d.coordinate) {
    const int n = static_cast<int>(config.generators.front().size());
    const DiagonalGroup h = enumerate_diagonal_group(n, to_generators(config.generators, n), config.options.group_cap);
    if (*d.coordinate < 1 || *d.coordinate > n)
      throw Error(ErrorKind::InvalidInput, "coordinate must lie in 1.." + std::to_string(n));
    const SubgroupCotSum s = subgroup_cot_sum_sides(h, *d.coordinate - 1);
    r.results["subgroup_cot_sum"] = Json{{"coordinate", *d.coordinate},
                                         {"group_order", h.order()},
                                         {"stabilizer_order", s.stabilizer_order},
                                         {"index", s.index},
                                         {"value", rational_json(s.sides.cyclotomic)},
                                         {"expected", rational_json(s.sides.closed)},
                                         {"residue_sum", rational_json(s.residue_sum)}};
    r.check("subgroup_cot_sum", s.sides.holds());
    r.check("residue_vanishing", s.residue_sum == 0);
  }
  finish(r, run, clock);
  return r;
}

DiagonalGroup brieskorn_pham_symmetry_group(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  if (n < 1 || n > kMaxDimension) throw Error(ErrorKind::InvalidInput, "dimension must be in 1..16");
  std::vector<GroupElement> elements;
  std::vector<int> k(exponents.size(), 0);
  while (true) {
    std::vector<Rational> angles;
    for (std::size_t i = 0; i < k.size(); ++i) angles.push_back(make_rational(k[i], exponents[i]));
    GroupElement g(std::move(angles));
    if (is_integer(age(g))) elements.push_back(std::move(g));
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == exponents[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  std::vector<GroupElement> gens(elements.begin() + 1, elements.end());
  return DiagonalGroup(n, std::move(elements), std::move(gens));
}

std::string brieskorn_pham_polynomial(const std::vector<int>& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    s += (i ? " + x" : "x") + std::to_string(i + 1) + "^" + std::to_string(exponents[i]);
  return s;
}

std::vector<SweepCase> sweep_cases(const SweepParams& p) {
  std::vector<SweepCase> out;
  std::mt19937_64 rng(p.seed);
  for (int n = p.n_range.first; n <= p.n_range.second; ++n) {
    std::vector<int> a(static_cast<std::size_t>(n), 2);
    while (true) {
      const DiagonalGroup ambient = brieskorn_pham_symmetry_group(a);
      switch (p.groups) {
        case SweepGroups::Trivial:
          out.push_back({a, enumerate_group(n, {})});
          break;
        case SweepGroups::Cyclic:
          for (auto& g : cyclic_subgroups(ambient, p.group_order_bound)) out.push_back({a, std::move(g)});
          break;
        case SweepGroups::All:
          for (auto& g : all_subgroups(ambient, p.group_order_bound)) out.push_back({a, std::move(g)});
          break;
        case SweepGroups::Random: {
          std::uniform_int_distribution<std::size_t> pick(0, ambient.order() - 1);
          for (std::size_t c = 0; c < p.count; ++c) {
            std::vector<GroupElement> gens{ambient.elements()[pick(rng)]};
            if (rng() % 2) gens.push_back(ambient.elements()[pick(rng)]);
            try {
              out.push_back({a, enumerate_group(n, gens, p.group_order_bound)});
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::GroupTooLarge) throw;
            }
          }
          break;
        }
      }
      // next nondecreasing tuple
      int i = n - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == p.a_max) --i;
      if (i < 0) break;
      const int v = a[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < n; ++j) a[static_cast<std::size_t>(j)] = v;
    }
  }
  return out;
}

ReportDocument cmd_sweep(const JobConfig& config, const RunOptions& run) {
  validate(config);
  if (config.kind != JobKind::Sweep) throw Error(ErrorKind::InvalidInput, "sweep needs kind sweep");
  Stopwatch clock;
  ReportDocument r;
  r.inputs = to_json(config);
  const SweepParams& p = *config.sweep;
  const std::vector<SweepCase> cases = sweep_cases(p);

  struct Outcome {
    bool passed = false;
    std::vector<std::string> failed;
    std::optional<std::string> error;
  };
  std::vector<Outcome> outcomes(cases.size());
  // one case per thread; each case runs its own sectors serially
#pragma omp parallel for schedule(dynamic) if (run.exec == Execution::Parallel)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const SweepCase& c = cases[i];
    const WeightSystem w = brieskorn_pham_weights(c.exponents);
    const MainTheoremVerdict v = verify_main_theorem(w, c.group, Execution::Serial);
    Outcome& o = outcomes[i];
    const std::pair<const char*, bool> named[] = {
        {"sector_finiteness", v.sector_finiteness}, {"hodge_signs", v.hodge_signs},
        {"main_theorem", v.main_theorem},           {"swap_symmetry", v.swap_symmetry},
        {"serre_duality", v.serre_duality},         {"zero_mean", v.zero_mean},
        {"mu_routes", v.mu_routes},                 {"chi_y_routes", v.chi_y_routes}};
    for (const auto& [name, ok] : named)
      if (!ok) o.failed.emplace_back(name);
    if (c.group.order() == 1 && !v.error && v.mu != milnor_number_trivial(w)) o.failed.emplace_back("trivial_group_formula");
    o.error = v.error;
    o.passed = o.failed.empty() && !o.error;
  }

  std::size_t passed = 0;
  std::size_t max_order = 0;
  std::set<std::vector<int>> weight_systems;
  Json failures = Json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const SweepCase& c = cases[i];
    weight_systems.insert(c.exponents);
    max_order = std::max(max_order, c.group.order());
    if (outcomes[i].passed) {
      ++passed;
      continue;
    }
    JobConfig replay;
    replay.kind = JobKind::WeightedHomogeneous;
    replay.polynomial = brieskorn_pham_polynomial(c.exponents);
    for (const auto& g : c.group.generators()) replay.generators.push_back(g.angles());
    Json f{{"config", to_json(replay)}, {"failed_checks", outcomes[i].failed}};
    if (outcomes[i].error) f["error"] = *outcomes[i].error;
    failures.push_back(f);
  }
  r.results["weight_systems"] = weight_systems.size();
  r.results["cases"] = cases.size();
  r.results["passed"] = passed;
  r.results["failed"] = cases.size() - passed;
  r.results["max_group_order"] = max_order;
  r.results["failures"] = failures;
  r.check("all_cases", passed == cases.size());
  finish(r, run, clock);
  return r;
}

ReportDocument run_job(const JobConfig& config, const RunOptions& run) {
  switch (config.kind) {
    case JobKind::WeightedHomogeneous:
    case JobKind::Cusp: return cmd_analyze(config, run);
    case JobKind::Dedekind: return cmd_dedekind(config, run);
    case JobKind::Sweep: return cmd_sweep(config, run);
  }
  throw Error(ErrorKind::InvalidInput, "unknown job kind");
}

}  // namespace lgvar
