#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgvar/group.hpp"
#include "lgvar/polynomial.hpp"
#include "lgvar/qseries.hpp"

namespace lgvar {

enum class Execution { Serial, Parallel };

/// Averaged sector series (1/|G|) sum_{h in G} prod_{i fixed by g} p_i(lambda_i(h); y) together with
/// the bookkeeping that certified it.
struct SectorSeries {
  /// Exponents e in y = tbar/t; coefficients are the certified averages.
  FracLaurent1<Rational> averaged;
  Rational support_lo;
  Rational support_hi;
  Rational window_lo;
  Rational window_hi;
  /// Largest denominator among the averaged coefficients before integrality was required.
  Integer max_denominator{1};
};

/// Fast kernel: per-h products accumulate in Z[C_N] (N = exponent of G) and are reduced to the
/// cyclotomic field once after summing over h. With Execution::Parallel the h-loop runs under OpenMP.
SectorSeries sector_series(const WeightSystem& w, const DiagonalGroup& group, const GroupElement& g,
                           Execution exec = Execution::Parallel);

/// Reference kernel: canonical CyclotomicNumber coefficients throughout, serial.
SectorSeries sector_series_reference(const WeightSystem& w, const DiagonalGroup& group, const GroupElement& g);

struct SectorContribution {
  GroupElement element;
  Rational age;
  int fixed_dim = 0;
  /// (-1)^n; the sign of each factor p_i is already inside the averaged series
  int sign = 1;
  SectorSeries series;
};

/// E(f,G) as a Laurent polynomial in (t, tbar); keys are (p - n/2, q - n/2).
struct EFunction {
  int n = 0;
  FracLaurent2 poly;

  bool operator==(const EFunction& o) const { return n == o.n && poly == o.poly; }
};

enum class Kernel { Fast, Reference };

std::vector<SectorContribution> sector_contributions(const WeightSystem& w, const DiagonalGroup& group,
                                                     Execution exec = Execution::Parallel,
                                                     Kernel kernel = Kernel::Fast);

/// Sum of sign * (t tbar)^{age(g) - (n - n_g)/2} * averaged(tbar/t) over the sectors.
EFunction assemble_e_function(int n, const std::vector<SectorContribution>& sectors);

EFunction e_function(const WeightSystem& w, const DiagonalGroup& group, Execution exec = Execution::Parallel);

struct HodgeEntry {
  Rational p;
  Rational q;
  std::int64_t h = 0;

  bool operator==(const HodgeEntry& o) const = default;
};

using HodgeTable = std::vector<HodgeEntry>;

/// h^{p,q} = (-1)^{p+q-n} * coefficient; throws ConsistencyFailure on a sign violation.
/// Sorted by (q, p).
HodgeTable hodge_table(const EFunction& e);

/// E(1,1)
std::int64_t mu_pair(const EFunction& e);

/// ((-1)^n/|G|) sum_I prod_{i in I}(1 - 1/w_i) sum_{J >= I} (-1)^{|J|-|I|} |G^J|^2
Rational mu_inclusion_exclusion(const WeightSystem& w, const DiagonalGroup& group);

struct Moments {
  /// sum sign*h*(q - n/2)
  Rational mean;
  /// sum sign*h*(q - n/2)^2
  Rational variance;
};

Moments moments(const EFunction& e);
Rational variance(const EFunction& e);

/// Net signed multiset of exponents q.
ExponentMultiset exponent_multiset(const EFunction& e);

/// E(1, y).
FracLaurent1<Rational> chi_y(const EFunction& e);

/// chi_y from the sector formula, averaging by character orthogonality instead of summing roots of unity.
FracLaurent1<Rational> chi_y_closed_form(const WeightSystem& w, const DiagonalGroup& group);

struct MainTheoremVerdict {
  std::int64_t mu = 0;
  Rational mu_inclusion_exclusion;
  Rational c_hat;
  Rational variance;
  Rational mean;
  Rational expected_variance;

  bool main_theorem = false;
  bool swap_symmetry = false;
  bool serre_duality = false;
  bool zero_mean = false;
  bool mu_routes = false;
  bool chi_y_routes = false;
  bool hodge_signs = false;
  bool sector_finiteness = false;

  std::optional<std::string> error;

  EFunction e;
  HodgeTable hodge;
  std::vector<SectorContribution> sectors;

  bool passed() const {
    return !error && main_theorem && swap_symmetry && serre_duality && zero_mean && mu_routes && chi_y_routes &&
           hodge_signs && sector_finiteness;
  }
};

/// Computes everything and checks Var = c_hat * mu / 12, swap symmetry, Serre duality, zero mean,
/// and the agreement of the two mu routes and the two chi_y routes. Never throws on a failed
/// identity; arithmetic errors are captured in `error`.
MainTheoremVerdict verify_main_theorem(const WeightSystem& w, const DiagonalGroup& group,
                                       Execution exec = Execution::Parallel);

/// Checks sector_counts for every nested pair I <= J and sum_J |G_J| = |G|.
bool verify_sector_counts(const DiagonalGroup& group);

}  // namespace lgvar
