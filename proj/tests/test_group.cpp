#include <doctest.h>

#include <random>

#include "lgvar/error.hpp"
#include "lgvar/group.hpp"

using namespace lgvar;

namespace {

GroupElement el(std::initializer_list<std::pair<int, int>> angles) {
  std::vector<Rational> v;
  for (auto [p, q] : angles) v.push_back(make_rational(p, q));
  return GroupElement(v);
}

}  // namespace

TEST_CASE("ages and junior elements of the Fermat cubic group") {
  const auto g = el({{1, 3}, {1, 3}, {1, 3}});
  CHECK(age(g) == 1);
  CHECK(age(g.inverse()) == 2);
  const DiagonalGroup G = enumerate_group(3, {g});
  CHECK(G.order() == 3);
  CHECK(G.elements().front().is_identity());
  CHECK(junior_count(G) == 1);
  CHECK(G.exponent() == 3);
}

TEST_CASE("enumeration rejects non-SL generators and oversized closures") {
  try {
    enumerate_group(3, {el({{1, 2}, {0, 1}, {0, 1}})});
    FAIL("expected not-special-linear");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSpecialLinear);
  }
  try {
    enumerate_group(2, {el({{1, 7}, {6, 7}})}, 5);
    FAIL("expected group-too-large");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupTooLarge);
  }
  CHECK_THROWS_AS(enumerate_group(2, {el({{1, 3}, {1, 3}, {1, 3}})}), Error);
  CHECK_THROWS_AS(enumerate_group(0, {}), Error);
}

TEST_CASE("cyclic groups have the expected elements") {
  // oracle: <g> = {k g : 0 <= k < ord g}
  for (int r = 2; r <= 12; ++r)
    for (int a = 1; a < r; ++a) {
      const auto g = el({{a, r}, {r - a, r}});
      const DiagonalGroup G = enumerate_group(2, {g});
      CHECK(static_cast<std::int64_t>(G.order()) == g.order());
      GroupElement p = GroupElement::identity(2);
      for (std::int64_t k = 0; k < g.order(); ++k, p = p * g) CHECK(G.contains(p));
    }
}

TEST_CASE("fixed subgroups and sector counts") {
  const DiagonalGroup G = enumerate_group(3, {el({{1, 3}, {1, 3}, {1, 3}}), el({{1, 2}, {1, 2}, {0, 1}})});
  CHECK(G.order() == 6);
  const auto orders = fixed_subgroup_orders(G);
  CHECK(orders[0] == 6);
  CHECK(orders[0b100] == 2);
  CHECK(orders[0b001] == 1);
  CHECK(fixed_subgroup(G, 0b100).order() == 2);
  for (CoordSet j = 0; j < 8; ++j)
    for (CoordSet i = j;; i = (i - 1) & j) {
      CHECK_NOTHROW(sector_counts(G, i, j));
      if (i == 0) break;
    }
}

TEST_CASE("sector counts on the group of order 9") {
  const DiagonalGroup G = enumerate_group(3, {el({{1, 3}, {2, 3}, {0, 1}}), el({{0, 1}, {1, 3}, {2, 3}})});
  CHECK(G.order() == 9);
  // elements fixing x1 only: (0, a, -a) with a != 0
  CHECK(sector_counts(G, 0, 0b001).exact == 2);
  // exact count of elements fixing nothing: 9 - 3 - 3 - 3 + 1 + 1 + 1 - 1 = 2
  CHECK(sector_counts(G, 0, 0).exact == 2);
  // x1 fixed, x2 and x3 moved
  CHECK(sector_counts(G, 0b001, 0b111).relative == 2);
}

TEST_CASE("sector count inclusion-exclusion on random groups") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<GroupElement> gens;
    for (int k = 0; k < 2; ++k) {
      const int r = 2 + static_cast<int>(rng() % 6);
      std::vector<Rational> angles;
      int sum = 0;
      for (int i = 0; i < n - 1; ++i) {
        const int a = static_cast<int>(rng() % r);
        sum += a;
        angles.push_back(make_rational(a, r));
      }
      angles.push_back(make_rational((r - sum % r) % r, r));
      gens.emplace_back(angles);
    }
    const DiagonalGroup G = enumerate_group(n, gens);
    std::size_t total = 0;
    const CoordSet full = full_set(n);
    for (CoordSet j = 0; j <= full; ++j) total += sector_counts(G, 0, j).exact;
    CHECK(total == G.order());
  }
}

TEST_CASE("subgroup lattices") {
  const DiagonalGroup G = enumerate_group(2, {el({{1, 6}, {5, 6}})});
  const auto cyclic = cyclic_subgroups(G, 100);
  // subgroups of Z/6: orders 1, 2, 3, 6
  REQUIRE(cyclic.size() == 4);
  CHECK(cyclic[0].order() == 1);
  CHECK(cyclic[3].order() == 6);
  CHECK(all_subgroups(G, 100).size() == 4);
  CHECK(cyclic_subgroups(G, 3).size() == 3);

  // Z/2 x Z/2 has 5 subgroups, 4 of them cyclic
  const DiagonalGroup K = enumerate_group(3, {el({{1, 2}, {1, 2}, {0, 1}}), el({{0, 1}, {1, 2}, {1, 2}})});
  CHECK(K.order() == 4);
  CHECK(cyclic_subgroups(K, 10).size() == 4);
  CHECK(all_subgroups(K, 10).size() == 5);
}
