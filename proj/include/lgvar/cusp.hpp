#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lgvar/group.hpp"
#include "lgvar/polynomial.hpp"

namespace lgvar {

/// x1^a1 + x2^a2 + x3^a3 - x1 x2 x3 with 1/a1 + 1/a2 + 1/a3 < 1 and a diagonal symmetry group.
struct CuspModel {
  std::array<int, 3> alpha{};
  DiagonalGroup group;
  /// a_i / |G/K_i| repeated |K_i| times, ones dropped; K_i is the stabilizer of coordinate i.
  std::vector<std::int64_t> gammas;
  std::int64_t juniors = 0;
};

/// Throws NonHyperbolic, InvarianceViolation, GroupTooLarge or ConsistencyFailure
/// (a_i / |G/K_i| not an integer).
CuspModel build_cusp(const std::array<int, 3>& alpha, const std::vector<GroupElement>& generators,
                     std::size_t cap = kDefaultGroupCap);

/// 2 - 2 j_G + sum (gamma_i - 1)
std::int64_t cusp_mu(const CuspModel& m);

/// 2 - 2 j_G + sum (1/gamma_i - 1)
Rational cusp_chi(const CuspModel& m);

/// k/gamma + 1 for 1 <= k < gamma, plus 1 and 2 with signed multiplicity 1 - j_G.
ExponentMultiset cusp_exponents(const CuspModel& m);

struct CuspVariance {
  /// sum mult * (q - 3/2)^2
  Rational direct;
  /// mu/12 + chi/6
  Rational formula;

  bool holds() const { return direct == formula; }
};

CuspVariance cusp_variance_sides(const CuspModel& m);
/// Throws ConsistencyFailure if the two routes differ.
Rational cusp_variance(const CuspModel& m);

/// All diagonal g with a_i * angle_i and the age integral: the largest group preserving the cusp polynomial.
DiagonalGroup cusp_symmetry_group(const std::array<int, 3>& alpha);

}  // namespace lgvar
