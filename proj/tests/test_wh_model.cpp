#include <doctest.h>

#include <set>

#include "lgvar/error.hpp"
#include "lgvar/polynomial.hpp"
#include "oracles.hpp"

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

std::vector<Rational> rats(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) out.push_back(make_rational(p, q));
  return out;
}

}  // namespace

TEST_CASE("polynomial parsing") {
  const auto f = parse_polynomial("x1^3 + x2^3 + x3^3");
  CHECK(f.variables() == 3);
  CHECK(f.monomials().size() == 3);

  const auto g = parse_polynomial("x1^2*x2 + x2^5");
  CHECK(g.variables() == 2);
  std::set<std::vector<int>> seen;
  for (const auto& m : g.monomials()) seen.insert(m.exponents);
  CHECK(seen == std::set<std::vector<int>>{{2, 1}, {0, 5}});

  const auto c = parse_polynomial("x1^3 + x2^3 + x3^3 - x1*x2*x3");
  CHECK(c.monomials().size() == 4);
  bool found = false;
  for (const auto& m : c.monomials())
    if (m.exponents == std::vector<int>{1, 1, 1}) found = m.coefficient == -1;
  CHECK(found);

  CHECK(parse_polynomial("3/2*x1^2 - 1/2*x1^2 + x2^2").monomials().size() == 2);
  CHECK(parse_polynomial("-x1^2 + 2*x1*x1").monomials().size() == 1);
  CHECK(kind_of([] { parse_polynomial("x1^2 - x1^2"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_polynomial("x1^ + x2"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("y1^2"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x0^2"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x17^2"); }) == ErrorKind::SyntaxError);
  try {
    parse_polynomial("x1^3 + * x2");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("weight inference") {
  CHECK(infer_weights(parse_polynomial("x1^3 + x2^3 + x3^3")).weights() == rats({{1, 3}, {1, 3}, {1, 3}}));
  CHECK(infer_weights(parse_polynomial("x1^2*x2 + x2^5")).weights() == rats({{2, 5}, {1, 5}}));
  CHECK(kind_of([] { infer_weights(parse_polynomial("x1^2 + x2^3 + x3^7 - x1*x2*x3")); }) ==
        ErrorKind::NotWeightedHomogeneous);
  CHECK(kind_of([] { infer_weights(parse_polynomial("x1*x2")); }) == ErrorKind::AmbiguousWeights);
  CHECK(free_weight_coordinates(parse_polynomial("x1*x2")).size() == 1);
  CHECK(kind_of([] { infer_weights(parse_polynomial("x1 + x2^2")); }) == ErrorKind::InvalidWeight);
  CHECK_NOTHROW(verify_weights(parse_polynomial("x1*x2"), WeightSystem(rats({{1, 2}, {1, 2}}))));
  CHECK(kind_of([] { verify_weights(parse_polynomial("x1*x2"), WeightSystem(rats({{1, 3}, {1, 2}}))); }) ==
        ErrorKind::NotWeightedHomogeneous);
  CHECK(WeightSystem(rats({{2, 3}, {1, 3}})).warnings().size() == 1);
  CHECK(kind_of([] { WeightSystem(rats({{1, 1}})); }) == ErrorKind::InvalidWeight);
}

TEST_CASE("invariance check") {
  const auto f = parse_polynomial("x1^3 + x2^3 + x3^3");
  const auto G = enumerate_group(3, {GroupElement(rats({{1, 3}, {1, 3}, {1, 3}}))});
  CHECK(check_invariance(f, G).ok);
  const auto H = enumerate_group(3, {GroupElement(rats({{1, 2}, {1, 2}, {0, 1}}))});
  const auto report = check_invariance(f, H);
  CHECK_FALSE(report.ok);
  REQUIRE(report.monomial.has_value());
  CHECK(report.monomial->exponents[0] + report.monomial->exponents[1] == 3);
}

TEST_CASE("Milnor numbers and c_hat") {
  CHECK(milnor_number_trivial(WeightSystem(rats({{1, 2}, {1, 2}}))) == 1);
  CHECK(milnor_number_trivial(WeightSystem(rats({{1, 3}}))) == 2);
  CHECK(milnor_number_trivial(WeightSystem(rats({{1, 3}, {1, 5}}))) == 8);
  CHECK(kind_of([] { milnor_number_trivial(WeightSystem(rats({{2, 5}, {2, 5}}))); }) ==
        ErrorKind::InvalidWeightSystem);
  CHECK(c_hat(WeightSystem(rats({{1, 2}, {1, 2}}))) == 0);
  CHECK(c_hat(WeightSystem(rats({{1, 3}, {1, 5}}))) == make_rational(14, 15));
  CHECK(c_hat(WeightSystem(rats({{1, 3}, {1, 3}, {1, 3}}))) == 1);
}

TEST_CASE("trivial-group exponents") {
  const auto e1 = exponents_trivial(WeightSystem(rats({{1, 3}})));
  CHECK(e1.entries() == std::map<Rational, std::int64_t>{{make_rational(1, 3), 1}, {make_rational(2, 3), 1}});
  const auto e2 = exponents_trivial(WeightSystem(rats({{1, 2}, {1, 3}})));
  CHECK(e2.entries() == std::map<Rational, std::int64_t>{{make_rational(5, 6), 1}, {make_rational(7, 6), 1}});
  // chain type x1^2 x2 + x2^5: mu = (1 - 5/2)(1 - 5) = 6
  const auto chain = exponents_trivial(WeightSystem(rats({{2, 5}, {1, 5}})));
  CHECK(chain.total() == 6);
}

TEST_CASE("trivial-group exponents match the Brieskorn-Pham spectrum") {
  for (const std::vector<int>& a : std::vector<std::vector<int>>{{3, 5}, {2, 3, 7}, {4, 4}, {2, 2, 2, 3}, {5, 6, 3}}) {
    const WeightSystem w = brieskorn_pham_weights(a);
    const auto exps = exponents_trivial(w);
    CHECK(exps.entries() == oracle::bp_exponents(a));
  }
}

TEST_CASE("Hertling-Dimca and duality on a family of weight systems") {
  const std::vector<std::vector<Rational>> systems = {
      rats({{1, 3}, {1, 5}}), rats({{2, 5}, {1, 5}}), rats({{1, 3}, {1, 3}, {1, 3}}),
      rats({{3, 8}, {1, 4}}),  // x1^2 x2 + x2^4
      rats({{1, 4}, {3, 8}, {1, 4}}), rats({{1, 2}, {1, 3}, {1, 7}})};
  for (const auto& ws : systems) {
    const WeightSystem w(ws);
    const auto exps = exponents_trivial(w);
    const std::int64_t mu = milnor_number_trivial(w);
    const Rational center = make_rational(w.size(), 2);
    CHECK(exps.total() == mu);
    CHECK(exps.first_moment() == center * mu);
    CHECK(exps.central_second_moment(center) == c_hat(w) * mu / 12);
    CHECK(exps.max() - exps.min() == c_hat(w));
    for (const auto& [q, m] : exps.entries()) CHECK(exps.multiplicity(w.size() - q) == m);
  }
}

TEST_CASE("product plans cover the support with guard bands") {
  const auto plan = plan_factor_product(rats({{1, 3}, {1, 5}}));
  CHECK(plan.support_lo == make_rational(1, 3) + make_rational(1, 5) - 1);
  CHECK(plan.support_hi == -plan.support_lo);
  CHECK(plan.factor_windows.size() == 2);
}
