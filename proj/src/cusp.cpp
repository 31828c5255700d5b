#include "lgvar/cusp.hpp"

#include <string>

#include "lgvar/error.hpp"

namespace lgvar {

namespace {

std::string describe(const std::array<int, 3>& alpha) {
  return "(" + std::to_string(alpha[0]) + "," + std::to_string(alpha[1]) + "," + std::to_string(alpha[2]) + ")";
}

void require_hyperbolic(const std::array<int, 3>& alpha) {
  Rational s(0);
  for (int a : alpha) {
    if (a < 2) throw Error(ErrorKind::InvalidInput, "cusp exponents must be at least 2, got " + describe(alpha));
    s += make_rational(1, a);
  }
  if (s >= 1)
    throw Error(ErrorKind::NonHyperbolic,
                "alpha = " + describe(alpha) + " has 1/a1 + 1/a2 + 1/a3 = " + to_string(s) + ", not below 1");
}

void require_invariant(const std::array<int, 3>& alpha, const GroupElement& g) {
  if (g.dimension() != 3) throw Error(ErrorKind::InvalidInput, "cusp generators must have 3 entries");
  for (int i = 0; i < 3; ++i)
    if (!is_integer(g.angle(i) * alpha[static_cast<std::size_t>(i)]))
      throw Error(ErrorKind::InvarianceViolation, "generator does not fix x" + std::to_string(i + 1) + "^" +
                                                      std::to_string(alpha[static_cast<std::size_t>(i)]));
  if (!is_integer(age(g))) throw Error(ErrorKind::InvarianceViolation, "generator does not fix x1*x2*x3");
}

}  // namespace

CuspModel build_cusp(const std::array<int, 3>& alpha, const std::vector<GroupElement>& generators, std::size_t cap) {
  require_hyperbolic(alpha);
  for (const auto& g : generators) require_invariant(alpha, g);
  CuspModel m{alpha, enumerate_group(3, generators, cap), {}, 0};
  const auto orders = fixed_subgroup_orders(m.group);
  const auto order = static_cast<std::int64_t>(m.group.order());
  for (int i = 0; i < 3; ++i) {
    const auto stabilizer = static_cast<std::int64_t>(orders[CoordSet{1} << i]);
    const std::int64_t quotient = order / stabilizer;
    const int a = alpha[static_cast<std::size_t>(i)];
    if (a % quotient != 0)
      throw Error(ErrorKind::ConsistencyFailure, "a" + std::to_string(i + 1) + " = " + std::to_string(a) +
                                                     " is not divisible by |G/K" + std::to_string(i + 1) +
                                                     "| = " + std::to_string(quotient));
    const std::int64_t gamma = a / quotient;
    if (gamma != 1) m.gammas.insert(m.gammas.end(), static_cast<std::size_t>(stabilizer), gamma);
  }
  m.juniors = static_cast<std::int64_t>(junior_count(m.group));
  return m;
}

std::int64_t cusp_mu(const CuspModel& m) {
  std::int64_t mu = 2 - 2 * m.juniors;
  for (auto g : m.gammas) mu += g - 1;
  return mu;
}

Rational cusp_chi(const CuspModel& m) {
  Rational chi(2 - 2 * m.juniors);
  for (auto g : m.gammas) chi += make_rational(1, g) - 1;
  return chi;
}

ExponentMultiset cusp_exponents(const CuspModel& m) {
  ExponentMultiset out;
  out.add(Rational(1), 1 - m.juniors);
  out.add(Rational(2), 1 - m.juniors);
  for (auto g : m.gammas)
    for (std::int64_t k = 1; k < g; ++k) out.add(make_rational(k, g) + 1, 1);
  return out;
}

CuspVariance cusp_variance_sides(const CuspModel& m) {
  return {cusp_exponents(m).central_second_moment(Rational(3, 2)),
          Rational(cusp_mu(m)) / 12 + cusp_chi(m) / 6};
}

Rational cusp_variance(const CuspModel& m) {
  const CuspVariance v = cusp_variance_sides(m);
  if (!v.holds())
    throw Error(ErrorKind::ConsistencyFailure, "cusp variance " + to_string(v.direct) + " differs from mu/12 + chi/6 = " +
                                                   to_string(v.formula) + " for alpha = " + describe(m.alpha));
  return v.direct;
}

DiagonalGroup cusp_symmetry_group(const std::array<int, 3>& alpha) {
  require_hyperbolic(alpha);
  std::vector<GroupElement> elements;
  for (int k1 = 0; k1 < alpha[0]; ++k1)
    for (int k2 = 0; k2 < alpha[1]; ++k2)
      for (int k3 = 0; k3 < alpha[2]; ++k3) {
        GroupElement g({make_rational(k1, alpha[0]), make_rational(k2, alpha[1]), make_rational(k3, alpha[2])});
        if (is_integer(age(g))) elements.push_back(std::move(g));
      }
  std::vector<GroupElement> gens(elements.begin() + 1, elements.end());
  return DiagonalGroup(3, std::move(elements), std::move(gens));
}

}  // namespace lgvar
