#pragma once

#include <vector>

#include "lgvar/group.hpp"
#include "lgvar/orbifold.hpp"
#include "lgvar/report.hpp"

namespace lgvar {

struct RunOptions {
  Execution exec = Execution::Parallel;
  bool timing = false;
};

/// Full invariant package for a weighted homogeneous or cusp job. Failed identities become failed
/// checks; invalid input and cap violations throw.
ReportDocument cmd_analyze(const JobConfig& config, const RunOptions& run = {});

/// Trivial-group exponents, Milnor number and variance.
ReportDocument cmd_exponents(const JobConfig& config, const RunOptions& run = {});

/// E-function terms and the per-sector averaged series.
ReportDocument cmd_efunction(const JobConfig& config, const RunOptions& run = {});

ReportDocument cmd_dedekind(const JobConfig& config, const RunOptions& run = {});

/// Runs verify_main_theorem over Brieskorn-Pham weight systems and their diagonal SL subgroups.
/// Each failure carries an analyze config that replays it.
ReportDocument cmd_sweep(const JobConfig& config, const RunOptions& run = {});

/// Dispatch on config.kind.
ReportDocument run_job(const JobConfig& config, const RunOptions& run = {});

/// prod Z/a_i intersected with SL_n.
DiagonalGroup brieskorn_pham_symmetry_group(const std::vector<int>& exponents);

struct SweepCase {
  std::vector<int> exponents;
  DiagonalGroup group;
};

/// Nondecreasing exponent tuples 2..a_max for each n, with the groups chosen by params.groups.
/// Deterministic for a fixed seed.
std::vector<SweepCase> sweep_cases(const SweepParams& params);

/// "x1^a1 + ... + xn^an"
std::string brieskorn_pham_polynomial(const std::vector<int>& exponents);

}  // namespace lgvar
