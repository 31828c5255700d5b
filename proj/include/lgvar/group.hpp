#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lgvar/cyclotomic.hpp"
#include "lgvar/rational.hpp"

namespace lgvar {

/// Bitmask over coordinates 0..n-1 (n <= 16).
using CoordSet = std::uint32_t;

constexpr int kMaxDimension = 16;
constexpr std::size_t kDefaultGroupCap = 10000;

inline int popcount(CoordSet s) { return __builtin_popcount(s); }
inline CoordSet full_set(int n) { return (CoordSet{1} << n) - 1; }

/// Diagonal element diag(e[angle_1], ..., e[angle_n]) with each angle in [0, 1).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> angles);
  static GroupElement identity(int n) { return GroupElement(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))); }

  int dimension() const { return static_cast<int>(angles_.size()); }
  const std::vector<Rational>& angles() const { return angles_; }
  const Rational& angle(int i) const { return angles_[static_cast<std::size_t>(i)]; }
  RootOfUnity eigenvalue(int i) const { return RootOfUnity(angle(i)); }

  bool is_identity() const;
  /// Least common denominator of the angles.
  std::int64_t order() const;
  /// Coordinates with angle 0.
  CoordSet fixed_coordinates() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

  auto operator<=>(const GroupElement& o) const = default;
  bool operator==(const GroupElement& o) const = default;

 private:
  std::vector<Rational> angles_;
};

/// Sum of the angles; an integer for elements of SL_n.
Rational age(const GroupElement& g);

/// n_g = dim Fix g.
int fix_dimension(const GroupElement& g);

/// Finite abelian diagonal subgroup of SL_n, fully materialized.
class DiagonalGroup {
 public:
  DiagonalGroup(int n, std::vector<GroupElement> elements, std::vector<GroupElement> generators);

  int dimension() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  /// Sorted lexicographically; the identity comes first.
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// lcm of element orders; every eigenvalue is an exponent()-th root of unity.
  std::int64_t exponent() const { return exponent_; }
  bool contains(const GroupElement& g) const;

  bool operator==(const DiagonalGroup& o) const { return n_ == o.n_ && elements_ == o.elements_; }

 private:
  int n_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::int64_t exponent_ = 1;
};

/// Closure of the generators under multiplication. Throws NotSpecialLinear if a generator has
/// non-integral age, GroupTooLarge if the closure exceeds cap.
DiagonalGroup enumerate_group(int n, const std::vector<GroupElement>& generators,
                              std::size_t cap = kDefaultGroupCap);

/// Same as enumerate_group without the SL check; used for groups that are only known to
/// act diagonally (e.g. before validation reports).
DiagonalGroup enumerate_diagonal_group(int n, const std::vector<GroupElement>& generators,
                                       std::size_t cap = kDefaultGroupCap);

/// Number of elements of age 1 with Fix g = {0}.
std::size_t junior_count(const DiagonalGroup& group);

/// G^I: elements fixing every coordinate in I.
DiagonalGroup fixed_subgroup(const DiagonalGroup& group, CoordSet coords);

/// |G^K| for every K, indexed by mask.
std::vector<std::size_t> fixed_subgroup_orders(const DiagonalGroup& group);

struct SectorCounts {
  /// |G_J|: elements fixing exactly J.
  std::size_t exact;
  /// |G_{I,J}|: elements fixing I and moving every coordinate of J \ I.
  std::size_t relative;
};

/// Both counts computed by direct filtering and by inclusion-exclusion over |G^K|.
/// Throws ConsistencyFailure if the routes disagree.
SectorCounts sector_counts(const DiagonalGroup& group, CoordSet inner, CoordSet outer);

/// Every cyclic subgroup, deduplicated, sorted by order then elements.
std::vector<DiagonalGroup> cyclic_subgroups(const DiagonalGroup& group, std::size_t max_order);

/// Every subgroup with at most max_order elements.
std::vector<DiagonalGroup> all_subgroups(const DiagonalGroup& group, std::size_t max_order);

}  // namespace lgvar
