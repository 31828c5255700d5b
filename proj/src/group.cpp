#include "lgvar/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "lgvar/error.hpp"

namespace lgvar {

GroupElement::GroupElement(std::vector<Rational> angles) : angles_(std::move(angles)) {
  for (auto& a : angles_) a = frac(a);
}

bool GroupElement::is_identity() const {
  return std::all_of(angles_.begin(), angles_.end(), [](const Rational& a) { return a == 0; });
}

std::int64_t GroupElement::order() const {
  std::int64_t r = 1;
  for (const auto& a : angles_) r = lcm_int64(r, to_int64(Integer(a.get_den())));
  return r;
}

CoordSet GroupElement::fixed_coordinates() const {
  CoordSet s = 0;
  for (int i = 0; i < dimension(); ++i)
    if (angle(i) == 0) s |= CoordSet{1} << i;
  return s;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (dimension() != o.dimension()) throw Error(ErrorKind::InvalidInput, "group elements of different dimension");
  std::vector<Rational> out(angles_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = angles_[i] + o.angles_[i];
  return GroupElement(std::move(out));
}

GroupElement GroupElement::inverse() const {
  std::vector<Rational> out(angles_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -angles_[i];
  return GroupElement(std::move(out));
}

Rational age(const GroupElement& g) {
  Rational s(0);
  for (const auto& a : g.angles()) s += a;
  return s;
}

int fix_dimension(const GroupElement& g) { return popcount(g.fixed_coordinates()); }

DiagonalGroup::DiagonalGroup(int n, std::vector<GroupElement> elements, std::vector<GroupElement> generators)
    : n_(n), elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  for (const auto& g : elements_) exponent_ = lcm_int64(exponent_, g.order());
}

bool DiagonalGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

namespace {

void validate_generator(int n, const GroupElement& g) {
  if (g.dimension() != n)
    throw Error(ErrorKind::InvalidInput, "generator has " + std::to_string(g.dimension()) +
                                             " entries, expected " + std::to_string(n));
}

DiagonalGroup close(int n, const std::vector<GroupElement>& generators, std::size_t cap) {
  std::set<GroupElement> seen{GroupElement::identity(n)};
  std::deque<GroupElement> frontier{GroupElement::identity(n)};
  while (!frontier.empty()) {
    GroupElement g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      GroupElement h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::GroupTooLarge, "group closure exceeds the cap of " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(h));
      }
    }
  }
  return DiagonalGroup(n, std::vector<GroupElement>(seen.begin(), seen.end()), generators);
}

}  // namespace

DiagonalGroup enumerate_diagonal_group(int n, const std::vector<GroupElement>& generators, std::size_t cap) {
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorKind::InvalidInput, "dimension must be in 1.." + std::to_string(kMaxDimension));
  for (const auto& g : generators) validate_generator(n, g);
  return close(n, generators, cap);
}

DiagonalGroup enumerate_group(int n, const std::vector<GroupElement>& generators, std::size_t cap) {
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorKind::InvalidInput, "dimension must be in 1.." + std::to_string(kMaxDimension));
  for (const auto& g : generators) {
    validate_generator(n, g);
    if (!is_integer(age(g))) {
      std::string desc;
      for (const auto& a : g.angles()) desc += (desc.empty() ? "" : ",") + to_string(a);
      throw Error(ErrorKind::NotSpecialLinear, "generator (" + desc + ") has age " + to_string(age(g)) +
                                                   ", not in SL_n");
    }
  }
  return close(n, generators, cap);
}

std::size_t junior_count(const DiagonalGroup& group) {
  return static_cast<std::size_t>(std::count_if(group.elements().begin(), group.elements().end(), [](const auto& g) {
    return age(g) == 1 && g.fixed_coordinates() == 0;
  }));
}

DiagonalGroup fixed_subgroup(const DiagonalGroup& group, CoordSet coords) {
  std::vector<GroupElement> elems;
  for (const auto& g : group.elements())
    if ((g.fixed_coordinates() & coords) == coords) elems.push_back(g);
  std::vector<GroupElement> gens(elems.begin() + 1, elems.end());
  return DiagonalGroup(group.dimension(), std::move(elems), std::move(gens));
}

std::vector<std::size_t> fixed_subgroup_orders(const DiagonalGroup& group) {
  const CoordSet full = full_set(group.dimension());
  // exact[F] = #elements whose fixed set is F; |G^K| = sum over supersets F of K.
  std::vector<std::size_t> orders(static_cast<std::size_t>(full) + 1, 0);
  for (const auto& g : group.elements()) ++orders[g.fixed_coordinates()];
  for (int i = 0; i < group.dimension(); ++i)
    for (CoordSet k = 0; k <= full; ++k)
      if (!(k & (CoordSet{1} << i))) orders[k] += orders[k | (CoordSet{1} << i)];
  return orders;
}

SectorCounts sector_counts(const DiagonalGroup& group, CoordSet inner, CoordSet outer) {
  const CoordSet full = full_set(group.dimension());
  if ((inner & ~outer) != 0 || (outer & ~full) != 0)
    throw Error(ErrorKind::InvalidInput, "sector_counts needs I subset J subset {1..n}");

  SectorCounts direct{0, 0};
  for (const auto& g : group.elements()) {
    const CoordSet fixed = g.fixed_coordinates();
    if (fixed == outer) ++direct.exact;
    if ((fixed & inner) == inner && (fixed & (outer & ~inner)) == 0) ++direct.relative;
  }

  // Inclusion-exclusion over subgroup orders |G^K|, computed by filtering per K.
  auto order_fixing = [&](CoordSet k) {
    return static_cast<std::int64_t>(std::count_if(group.elements().begin(), group.elements().end(),
                                                   [k](const auto& g) { return (g.fixed_coordinates() & k) == k; }));
  };
  std::int64_t exact = 0;
  const CoordSet above = full & ~outer;
  for (CoordSet extra = above;; extra = (extra - 1) & above) {
    const int sign = popcount(extra) % 2 ? -1 : 1;
    exact += sign * order_fixing(outer | extra);
    if (extra == 0) break;
  }
  std::int64_t relative = 0;
  const CoordSet between = outer & ~inner;
  for (CoordSet extra = between;; extra = (extra - 1) & between) {
    const int sign = popcount(extra) % 2 ? -1 : 1;
    relative += sign * order_fixing(inner | extra);
    if (extra == 0) break;
  }

  if (exact != static_cast<std::int64_t>(direct.exact) || relative != static_cast<std::int64_t>(direct.relative))
    throw Error(ErrorKind::ConsistencyFailure,
                "sector counts disagree: direct (" + std::to_string(direct.exact) + ", " +
                    std::to_string(direct.relative) + ") vs inclusion-exclusion (" + std::to_string(exact) + ", " +
                    std::to_string(relative) + ")");
  return direct;
}

std::vector<DiagonalGroup> cyclic_subgroups(const DiagonalGroup& group, std::size_t max_order) {
  std::set<std::vector<GroupElement>> seen;
  std::vector<DiagonalGroup> out;
  for (const auto& g : group.elements()) {
    if (static_cast<std::size_t>(g.order()) > max_order) continue;
    DiagonalGroup h = enumerate_diagonal_group(group.dimension(), {g}, max_order);
    if (seen.insert(h.elements()).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const DiagonalGroup& a, const DiagonalGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<DiagonalGroup> all_subgroups(const DiagonalGroup& group, std::size_t max_order) {
  const int n = group.dimension();
  std::set<std::vector<GroupElement>> seen;
  std::vector<DiagonalGroup> out;
  std::deque<std::size_t> frontier;
  DiagonalGroup trivial = enumerate_diagonal_group(n, {});
  seen.insert(trivial.elements());
  out.push_back(std::move(trivial));
  frontier.push_back(0);
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    const DiagonalGroup current = out[idx];
    for (const auto& g : group.elements()) {
      if (current.contains(g)) continue;
      std::vector<GroupElement> gens = current.generators();
      gens.push_back(g);
      DiagonalGroup bigger = [&]() -> DiagonalGroup {
        try {
          return enumerate_diagonal_group(n, gens, max_order);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::GroupTooLarge) throw;
          return current;
        }
      }();
      if (bigger.order() == current.order()) continue;
      if (seen.insert(bigger.elements()).second) {
        // keep a short generating set for the next extension
        out.push_back(DiagonalGroup(n, bigger.elements(), gens));
        frontier.push_back(out.size() - 1);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DiagonalGroup& a, const DiagonalGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace lgvar
