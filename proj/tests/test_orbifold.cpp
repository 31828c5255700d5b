#include <doctest.h>

#include <random>

#include "lgvar/commands.hpp"
#include "lgvar/error.hpp"
#include "lgvar/orbifold.hpp"
#include "oracles.hpp"

using namespace lgvar;

namespace {

GroupElement el(std::initializer_list<std::pair<int, int>> angles) {
  std::vector<Rational> v;
  for (auto [p, q] : angles) v.push_back(make_rational(p, q));
  return GroupElement(v);
}

const DiagonalGroup& fermat_group() {
  static const DiagonalGroup g = enumerate_group(3, {el({{1, 3}, {1, 3}, {1, 3}})});
  return g;
}

}  // namespace

TEST_CASE("Fermat cubic with its junior group") {
  const WeightSystem w = brieskorn_pham_weights({3, 3, 3});
  const EFunction e = e_function(w, fermat_group());
  FracLaurent2 expected;
  const Rational h(1, 2);
  expected.add_term(h, -h, 1);
  expected.add_term(-h, h, 1);
  expected.add_term(-h, -h, -1);
  expected.add_term(h, h, -1);
  CHECK(e.poly == expected);
  const HodgeTable table = hodge_table(e);
  const HodgeTable want = {{Rational(1), Rational(1), 1}, {Rational(2), Rational(1), 1},
                           {Rational(1), Rational(2), 1}, {Rational(2), Rational(2), 1}};
  CHECK(table == want);
  CHECK(mu_pair(e) == 0);
  CHECK(mu_inclusion_exclusion(w, fermat_group()) == 0);
  CHECK(variance(e) == 0);
}

TEST_CASE("trivial group reproduces the classical spectrum") {
  const WeightSystem w = brieskorn_pham_weights({3, 3, 3});
  const EFunction e = e_function(w, enumerate_group(3, {}));
  CHECK(mu_pair(e) == 8);
  CHECK(exponent_multiset(e) == exponents_trivial(w));
  // x^k dx for 0 <= k_i <= 1 lands on four (p, q) slots
  CHECK(hodge_table(e).size() == 4);
}

TEST_CASE("sector formula matches the Milnor-algebra oracle on Brieskorn-Pham examples") {
  const std::vector<std::vector<int>> tuples = {{3, 3, 3}, {2, 4, 4}, {3, 6}, {4, 4}, {5, 5, 5}, {2, 3, 6}, {6, 6}};
  for (const auto& a : tuples) {
    const WeightSystem w = brieskorn_pham_weights(a);
    const DiagonalGroup ambient = brieskorn_pham_symmetry_group(a);
    for (const auto& g : all_subgroups(ambient, 40)) {
      const EFunction e = e_function(w, g);
      CHECK(e.poly.terms() == oracle::bp_e_function(a, g));
    }
  }
}

TEST_CASE("fast, serial and reference kernels agree") {
  const std::vector<std::vector<int>> tuples = {{3, 3, 3}, {2, 4, 4}, {4, 6}, {5, 5, 5}};
  for (const auto& a : tuples) {
    const WeightSystem w = brieskorn_pham_weights(a);
    for (const auto& g : cyclic_subgroups(brieskorn_pham_symmetry_group(a), 30)) {
      const auto fast = sector_contributions(w, g, Execution::Parallel, Kernel::Fast);
      const auto serial = sector_contributions(w, g, Execution::Serial, Kernel::Fast);
      const auto ref = sector_contributions(w, g, Execution::Serial, Kernel::Reference);
      REQUIRE(fast.size() == ref.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].series.averaged == ref[i].series.averaged);
        CHECK(serial[i].series.averaged == ref[i].series.averaged);
        CHECK(fast[i].series.max_denominator == ref[i].series.max_denominator);
      }
    }
  }
}

TEST_CASE("sector averages are integral and their denominators divide |G|") {
  const WeightSystem w = brieskorn_pham_weights({4, 4, 4, 4});
  const DiagonalGroup g = enumerate_group(4, {el({{1, 4}, {1, 4}, {1, 4}, {1, 4}}), el({{1, 2}, {1, 2}, {0, 1}, {0, 1}})});
  for (const auto& s : sector_contributions(w, g)) {
    CHECK(Integer(static_cast<unsigned long>(g.order())) % s.series.max_denominator == 0);
    for (const auto& [e, c] : s.series.averaged.terms()) CHECK(is_integer(c));
  }
}

TEST_CASE("non-admissible group is caught by sector integrality") {
  // (1/2,1/2,0) does not preserve x1^3 + x2^3 + x3^3; the averaged series cannot be integral
  const WeightSystem w = brieskorn_pham_weights({3, 3, 3});
  const DiagonalGroup g = enumerate_group(3, {el({{1, 2}, {1, 2}, {0, 1}})});
  const MainTheoremVerdict v = verify_main_theorem(w, g);
  CHECK_FALSE(v.passed());
  CHECK(v.error.has_value());
}

TEST_CASE("main theorem on non-Brieskorn-Pham weights") {
  // x1^2 x2 + x2^4 + x3^4 with G = <(1/4, 1/2, 1/4)>: 2/4 + 1/2 = 1, 4/2 = 2, 4/4 = 1
  const auto f = parse_polynomial("x1^2*x2 + x2^4 + x3^4");
  const WeightSystem w = infer_weights(f);
  const DiagonalGroup g = enumerate_group(3, {el({{1, 4}, {1, 2}, {1, 4}})});
  REQUIRE(check_invariance(f, g).ok);
  const MainTheoremVerdict v = verify_main_theorem(w, g);
  CHECK(v.passed());
  CHECK(v.variance == v.c_hat * v.mu / 12);
}

TEST_CASE("chi_y closed form agrees with the E-function specialization") {
  const std::vector<std::vector<int>> tuples = {{3, 3, 3}, {2, 6, 6}, {4, 4, 2}};
  for (const auto& a : tuples) {
    const WeightSystem w = brieskorn_pham_weights(a);
    for (const auto& g : all_subgroups(brieskorn_pham_symmetry_group(a), 50))
      CHECK(chi_y(e_function(w, g)) == chi_y_closed_form(w, g));
  }
}

TEST_CASE("random Brieskorn-Pham pairs satisfy every identity") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<int> a;
    for (int i = 0; i < n; ++i) a.push_back(2 + static_cast<int>(rng() % 5));
    const DiagonalGroup ambient = brieskorn_pham_symmetry_group(a);
    const auto& pick = ambient.elements()[rng() % ambient.order()];
    const DiagonalGroup g = enumerate_group(n, {pick});
    const MainTheoremVerdict v = verify_main_theorem(brieskorn_pham_weights(a), g);
    CHECK(v.passed());
    CHECK(verify_sector_counts(g));
    // Hodge symmetries entrywise
    std::map<std::pair<Rational, Rational>, std::int64_t> h;
    for (const auto& e : v.hodge) h[{e.p, e.q}] = e.h;
    for (const auto& [pq, val] : h) {
      const auto swapped = h.find({pq.second, pq.first});
      const auto dual = h.find({n - pq.first, n - pq.second});
      CHECK((swapped != h.end() && swapped->second == val));
      CHECK((dual != h.end() && dual->second == val));
    }
  }
}

TEST_CASE("mismatched dimensions are rejected") {
  CHECK_THROWS_AS(e_function(brieskorn_pham_weights({3, 3}), fermat_group()), Error);
}
