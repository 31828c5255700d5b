#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgvar/error.hpp"
#include "lgvar/group.hpp"
#include "lgvar/rational.hpp"

namespace lgvar {

// insertion-ordered so that output is byte-stable
using Json = nlohmann::ordered_json;

enum class JobKind { WeightedHomogeneous, Cusp, Dedekind, Sweep };
enum class OutputFormat { Json, Table };

const char* to_string(JobKind kind);
const char* to_string(OutputFormat format);

struct JobOptions {
  bool assume_invariant = false;
  std::size_t group_cap = kDefaultGroupCap;
  OutputFormat output = OutputFormat::Json;

  bool operator==(const JobOptions&) const = default;
};

struct DedekindParams {
  std::optional<int> r;
  std::optional<std::pair<int, int>> r_range;
  /// both or neither; with a range and no (a, b) every pair is checked
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  /// 1-based coordinate for the subgroup sum over group.generators
  std::optional<int> coordinate;

  bool operator==(const DedekindParams&) const = default;
};

enum class SweepGroups { Trivial, Cyclic, All, Random };
const char* to_string(SweepGroups groups);

struct SweepParams {
  std::pair<int, int> n_range{2, 3};
  /// Brieskorn-Pham exponents 2..a_max, i.e. weight denominators up to a_max
  int a_max = 5;
  std::size_t group_order_bound = 50;
  SweepGroups groups = SweepGroups::Cyclic;
  /// random groups per weight system
  std::size_t count = 4;
  std::uint64_t seed = 1;

  bool operator==(const SweepParams&) const = default;
};

/// A job description. Only the fields that the kind uses may be set.
struct JobConfig {
  JobKind kind = JobKind::WeightedHomogeneous;
  std::optional<std::string> polynomial;
  std::optional<std::vector<Rational>> weights;
  std::optional<std::array<int, 3>> alpha;
  std::vector<std::vector<Rational>> generators;
  JobOptions options;
  std::optional<DedekindParams> dedekind;
  std::optional<SweepParams> sweep;

  bool operator==(const JobConfig&) const = default;
};

/// Throws InvalidInput naming the offending field.
JobConfig parse_job_config(const Json& j);
Json to_json(const JobConfig& config);
/// Checks the field-presence rules of the kind.
void validate(const JobConfig& config);

/// Angle vectors in [0,1); InvalidInput otherwise.
std::vector<GroupElement> to_generators(const std::vector<std::vector<Rational>>& generators, int n);
/// "p/q,p/q,..." with every entry in [0,1).
std::vector<Rational> parse_angle_list(const std::string& text);
/// "r:a1,a2,..." meaning (a1/r, a2/r, ...).
std::vector<Rational> parse_rotation(const std::string& text);

Json rational_json(const Rational& q);
Rational json_rational(const Json& j, const std::string& field);

struct ReportDocument {
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> warnings;
  Json diagnostics = Json::object();
  std::optional<double> timing_seconds;

  void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
  bool passed() const;

  bool operator==(const ReportDocument&) const = default;
};

Json to_json(const ReportDocument& report);
ReportDocument parse_report(const Json& j);
/// Human-oriented rendering; not meant to be parsed back.
std::string format_table(const ReportDocument& report);

/// 0 ok, 1 check failure, 2 invalid input, 3 resource cap exceeded.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInvalidInput = 2, kExitCapExceeded = 3 };
int exit_code_for(ErrorKind kind);

}  // namespace lgvar
