#include "lgvar/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lgvar {

const char* to_string(JobKind kind) {
  switch (kind) {
    case JobKind::WeightedHomogeneous: return "weighted_homogeneous";
    case JobKind::Cusp: return "cusp";
    case JobKind::Dedekind: return "dedekind";
    case JobKind::Sweep: return "sweep";
  }
  return "?";
}

const char* to_string(OutputFormat format) { return format == OutputFormat::Json ? "json" : "table"; }

const char* to_string(SweepGroups groups) {
  switch (groups) {
    case SweepGroups::Trivial: return "trivial";
    case SweepGroups::Cyclic: return "cyclic";
    case SweepGroups::All: return "all";
    case SweepGroups::Random: return "random";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      bad("unknown field '" + (where.empty() ? key : where + "." + key) + "'");
  }
}

std::int64_t json_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad("field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

bool json_bool(const Json& j, const std::string& field) {
  if (!j.is_boolean()) bad("field '" + field + "' must be a boolean");
  return j.get<bool>();
}

std::pair<int, int> json_range(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) bad("field '" + field + "' must be a pair [lo, hi]");
  const auto lo = static_cast<int>(json_int(j[0], field));
  const auto hi = static_cast<int>(json_int(j[1], field));
  if (lo > hi) bad("field '" + field + "' has lo > hi");
  return {lo, hi};
}

std::vector<Rational> json_rational_list(const Json& j, const std::string& field) {
  if (!j.is_array()) bad("field '" + field + "' must be a list of \"p/q\" strings");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(json_rational(e, field));
  return out;
}

JobKind parse_kind(const Json& j) {
  if (!j.is_string()) bad("field 'kind' must be a string");
  const auto s = j.get<std::string>();
  for (auto k : {JobKind::WeightedHomogeneous, JobKind::Cusp, JobKind::Dedekind, JobKind::Sweep})
    if (s == to_string(k)) return k;
  bad("unknown kind '" + s + "'");
}

SweepGroups parse_groups(const Json& j) {
  if (!j.is_string()) bad("field 'sweep.groups' must be a string");
  const auto s = j.get<std::string>();
  for (auto g : {SweepGroups::Trivial, SweepGroups::Cyclic, SweepGroups::All, SweepGroups::Random})
    if (s == to_string(g)) return g;
  bad("unknown sweep.groups '" + s + "'");
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational json_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) bad("field '" + field + "' must hold rationals as \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

std::vector<Rational> parse_angle_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational a = parse_rational(item);
    if (a < 0 || a >= 1) bad("generator entry " + item + " is not in [0,1)");
    out.push_back(a);
  }
  if (out.empty()) bad("empty generator '" + text + "'");
  return out;
}

std::vector<Rational> parse_rotation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad("rotation generator must look like r:a1,a2,..., got '" + text + "'");
  const Rational r = parse_rational(text.substr(0, colon));
  if (!is_integer(r) || r < 1) bad("rotation order must be a positive integer in '" + text + "'");
  std::vector<Rational> out;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational a = parse_rational(item);
    if (!is_integer(a)) bad("rotation entries must be integers in '" + text + "'");
    out.push_back(frac(a / r));
  }
  if (out.empty()) bad("empty rotation generator '" + text + "'");
  return out;
}

std::vector<GroupElement> to_generators(const std::vector<std::vector<Rational>>& generators, int n) {
  std::vector<GroupElement> out;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n)
      bad("generator has " + std::to_string(g.size()) + " entries, expected " + std::to_string(n));
    for (const auto& a : g)
      if (a < 0 || a >= 1) bad("generator entry " + to_string(a) + " is not in [0,1)");
    out.emplace_back(g);
  }
  return out;
}

void validate(const JobConfig& c) {
  auto forbid = [&](bool present, const char* field) {
    if (present) bad(std::string("field '") + field + "' is not allowed for kind " + to_string(c.kind));
  };
  switch (c.kind) {
    case JobKind::WeightedHomogeneous:
      if (!c.polynomial && !c.weights) bad("kind weighted_homogeneous needs 'polynomial' or 'weights'");
      forbid(c.alpha.has_value(), "alpha");
      forbid(c.dedekind.has_value(), "dedekind");
      forbid(c.sweep.has_value(), "sweep");
      break;
    case JobKind::Cusp:
      if (!c.alpha) bad("kind cusp needs 'alpha'");
      forbid(c.polynomial.has_value(), "polynomial");
      forbid(c.weights.has_value(), "weights");
      forbid(c.dedekind.has_value(), "dedekind");
      forbid(c.sweep.has_value(), "sweep");
      break;
    case JobKind::Dedekind: {
      if (!c.dedekind) bad("kind dedekind needs 'dedekind'");
      forbid(c.polynomial.has_value(), "polynomial");
      forbid(c.weights.has_value(), "weights");
      forbid(c.alpha.has_value(), "alpha");
      forbid(c.sweep.has_value(), "sweep");
      const auto& d = *c.dedekind;
      if (d.r && d.r_range) bad("give 'dedekind.r' or 'dedekind.r_range', not both");
      if (d.a.has_value() != d.b.has_value()) bad("'dedekind.a' and 'dedekind.b' go together");
      if (d.coordinate.has_value() != !c.generators.empty())
        bad("'dedekind.coordinate' and 'group.generators' go together");
      if (!d.r && !d.r_range && !d.coordinate) bad("kind dedekind needs 'r', 'r_range' or 'coordinate'");
      if (d.a && !d.r && !d.r_range) bad("'dedekind.a' needs 'r' or 'r_range'");
      if (d.r && *d.r < 2) bad("'dedekind.r' must be at least 2");
      if (d.r_range && d.r_range->first < 2) bad("'dedekind.r_range' must start at 2 or above");
      break;
    }
    case JobKind::Sweep: {
      if (!c.sweep) bad("kind sweep needs 'sweep'");
      forbid(c.polynomial.has_value(), "polynomial");
      forbid(c.weights.has_value(), "weights");
      forbid(c.alpha.has_value(), "alpha");
      forbid(c.dedekind.has_value(), "dedekind");
      forbid(!c.generators.empty(), "group.generators");
      const auto& s = *c.sweep;
      if (s.n_range.first < 1 || s.n_range.second > kMaxDimension) bad("'sweep.n_range' must lie in 1..16");
      if (s.a_max < 2) bad("'sweep.a_max' must be at least 2");
      break;
    }
  }
}

JobConfig parse_job_config(const Json& j) {
  only_keys(j, "", {"kind", "polynomial", "weights", "alpha", "group", "options", "dedekind", "sweep"});
  if (!j.contains("kind")) bad("missing field 'kind'");
  JobConfig c;
  c.kind = parse_kind(j["kind"]);
  if (j.contains("polynomial")) {
    if (!j["polynomial"].is_string()) bad("field 'polynomial' must be a string");
    c.polynomial = j["polynomial"].get<std::string>();
  }
  if (j.contains("weights")) c.weights = json_rational_list(j["weights"], "weights");
  if (j.contains("alpha")) {
    const auto& a = j["alpha"];
    if (!a.is_array() || a.size() != 3) bad("field 'alpha' must be an integer triple");
    c.alpha = std::array<int, 3>{static_cast<int>(json_int(a[0], "alpha")), static_cast<int>(json_int(a[1], "alpha")),
                                 static_cast<int>(json_int(a[2], "alpha"))};
  }
  if (j.contains("group")) {
    only_keys(j["group"], "group", {"generators"});
    if (j["group"].contains("generators")) {
      const auto& gens = j["group"]["generators"];
      if (!gens.is_array()) bad("field 'group.generators' must be a list");
      for (const auto& g : gens) c.generators.push_back(json_rational_list(g, "group.generators"));
    }
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    only_keys(o, "options", {"assume_invariant", "group_cap", "output"});
    if (o.contains("assume_invariant")) c.options.assume_invariant = json_bool(o["assume_invariant"], "options.assume_invariant");
    if (o.contains("group_cap")) {
      const auto cap = json_int(o["group_cap"], "options.group_cap");
      if (cap < 1) bad("field 'options.group_cap' must be positive");
      c.options.group_cap = static_cast<std::size_t>(cap);
    }
    if (o.contains("output")) {
      const auto& out = o["output"];
      if (out == "json") c.options.output = OutputFormat::Json;
      else if (out == "table") c.options.output = OutputFormat::Table;
      else bad("field 'options.output' must be \"json\" or \"table\"");
    }
  }
  if (j.contains("dedekind")) {
    const auto& d = j["dedekind"];
    only_keys(d, "dedekind", {"r", "r_range", "a", "b", "coordinate"});
    DedekindParams p;
    if (d.contains("r")) p.r = static_cast<int>(json_int(d["r"], "dedekind.r"));
    if (d.contains("r_range")) p.r_range = json_range(d["r_range"], "dedekind.r_range");
    if (d.contains("a")) p.a = json_int(d["a"], "dedekind.a");
    if (d.contains("b")) p.b = json_int(d["b"], "dedekind.b");
    if (d.contains("coordinate")) p.coordinate = static_cast<int>(json_int(d["coordinate"], "dedekind.coordinate"));
    c.dedekind = p;
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    only_keys(s, "sweep", {"n_range", "a_max", "group_order_bound", "groups", "count", "seed"});
    SweepParams p;
    if (s.contains("n_range")) p.n_range = json_range(s["n_range"], "sweep.n_range");
    if (s.contains("a_max")) p.a_max = static_cast<int>(json_int(s["a_max"], "sweep.a_max"));
    if (s.contains("group_order_bound")) {
      const auto b = json_int(s["group_order_bound"], "sweep.group_order_bound");
      if (b < 1) bad("field 'sweep.group_order_bound' must be positive");
      p.group_order_bound = static_cast<std::size_t>(b);
    }
    if (s.contains("groups")) p.groups = parse_groups(s["groups"]);
    if (s.contains("count")) {
      const auto n = json_int(s["count"], "sweep.count");
      if (n < 0) bad("field 'sweep.count' must be non-negative");
      p.count = static_cast<std::size_t>(n);
    }
    if (s.contains("seed")) {
      if (!s["seed"].is_number_unsigned() && !s["seed"].is_number_integer()) bad("field 'sweep.seed' must be an integer");
      p.seed = s["seed"].get<std::uint64_t>();
    }
    c.sweep = p;
  }
  validate(c);
  return c;
}

Json to_json(const JobConfig& c) {
  Json j = Json::object();
  j["kind"] = to_string(c.kind);
  if (c.polynomial) j["polynomial"] = *c.polynomial;
  if (c.weights) {
    Json w = Json::array();
    for (const auto& q : *c.weights) w.push_back(rational_json(q));
    j["weights"] = w;
  }
  if (c.alpha) j["alpha"] = Json::array({(*c.alpha)[0], (*c.alpha)[1], (*c.alpha)[2]});
  if (!c.generators.empty()) {
    Json gens = Json::array();
    for (const auto& g : c.generators) {
      Json row = Json::array();
      for (const auto& a : g) row.push_back(rational_json(a));
      gens.push_back(row);
    }
    j["group"] = Json{{"generators", gens}};
  }
  j["options"] = Json{{"assume_invariant", c.options.assume_invariant},
                      {"group_cap", c.options.group_cap},
                      {"output", to_string(c.options.output)}};
  if (c.dedekind) {
    const auto& d = *c.dedekind;
    Json dj = Json::object();
    if (d.r) dj["r"] = *d.r;
    if (d.r_range) dj["r_range"] = Json::array({d.r_range->first, d.r_range->second});
    if (d.a) dj["a"] = *d.a;
    if (d.b) dj["b"] = *d.b;
    if (d.coordinate) dj["coordinate"] = *d.coordinate;
    j["dedekind"] = dj;
  }
  if (c.sweep) {
    const auto& s = *c.sweep;
    j["sweep"] = Json{{"n_range", Json::array({s.n_range.first, s.n_range.second})},
                      {"a_max", s.a_max},
                      {"group_order_bound", s.group_order_bound},
                      {"groups", to_string(s.groups)},
                      {"count", s.count},
                      {"seed", s.seed}};
  }
  return j;
}

bool ReportDocument::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

Json to_json(const ReportDocument& r) {
  Json j = Json::object();
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  j["passed"] = r.passed();
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  if (r.timing_seconds) j["timing"] = Json{{"seconds", *r.timing_seconds}};
  return j;
}

ReportDocument parse_report(const Json& j) {
  only_keys(j, "", {"inputs", "results", "checks", "passed", "warnings", "diagnostics", "timing"});
  ReportDocument r;
  if (j.contains("inputs")) r.inputs = j["inputs"];
  if (j.contains("results")) r.results = j["results"];
  if (j.contains("checks")) {
    if (!j["checks"].is_object()) bad("field 'checks' must be an object");
    for (const auto& [name, ok] : j["checks"].items()) r.checks.emplace_back(name, json_bool(ok, "checks." + name));
  }
  if (j.contains("warnings")) r.warnings = j["warnings"].get<std::vector<std::string>>();
  if (j.contains("diagnostics")) r.diagnostics = j["diagnostics"];
  if (j.contains("timing")) r.timing_seconds = j["timing"].at("seconds").get<double>();
  if (j.contains("passed") && json_bool(j["passed"], "passed") != r.passed())
    bad("field 'passed' contradicts the checks");
  return r;
}

namespace {

void render(std::ostringstream& out, const std::string& key, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, e] : v.items()) render(out, k, e, depth + 1);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    out << pad << key << ":\n";
    for (const auto& e : v) {
      out << pad << "  -";
      for (const auto& [k, x] : e.items()) out << ' ' << k << '=' << (x.is_string() ? x.get<std::string>() : x.dump());
      out << '\n';
    }
  } else {
    out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::string format_table(const ReportDocument& r) {
  std::ostringstream out;
  render(out, "inputs", r.inputs, 0);
  render(out, "results", r.results, 0);
  out << "checks:\n";
  for (const auto& [name, ok] : r.checks) out << "  " << (ok ? "PASS " : "FAIL ") << name << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  if (!r.diagnostics.empty()) render(out, "diagnostics", r.diagnostics, 0);
  if (r.timing_seconds) out << "time: " << *r.timing_seconds << " s\n";
  out << (r.passed() ? "PASSED" : "FAILED") << '\n';
  return out.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GroupTooLarge: return kExitCapExceeded;
    case ErrorKind::ConsistencyFailure:
    case ErrorKind::TruncationViolation:
    case ErrorKind::AveragingFailure:
    case ErrorKind::NotRational: return kExitCheckFailed;
    default: return kExitInvalidInput;
  }
}

}  // namespace lgvar
