#include "lgvar/orbifold.hpp"

#include <omp.h>

#include <exception>
#include <map>
#include <mutex>

#include "lgvar/error.hpp"

namespace lgvar {

namespace {

const Rational kHalf(1, 2);

std::vector<int> coordinates_of(CoordSet s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (s & (CoordSet{1} << i)) out.push_back(i);
  return out;
}

SectorSeries untwisted_constant() {
  SectorSeries s;
  s.averaged.add_term(Rational(0), Rational(1));
  s.support_lo = s.support_hi = 0;
  s.window_lo = -1;
  s.window_hi = 1;
  return s;
}

// Divides the summed series by |G| and requires integral results.
void average_and_certify(SectorSeries& out, const FracLaurent1<Rational>& sums, std::size_t order) {
  const Rational inv_order = 1 / Rational(static_cast<long>(order));
  for (const auto& [e, c] : sums.terms()) {
    if (!is_integer(c))
      throw Error(ErrorKind::AveragingFailure,
                  "sum over the group at exponent " + to_string(e) + " is " + to_string(c) + ", not an integer");
    const Rational avg = c * inv_order;
    if (avg.get_den() > out.max_denominator) out.max_denominator = avg.get_den();
    if (!is_integer(avg))
      throw Error(ErrorKind::AveragingFailure, "averaged coefficient " + to_string(avg) + " at exponent " +
                                                   to_string(e) + " is not an integer; the group does not "
                                                                  "preserve a non-degenerate polynomial with these weights");
    out.averaged.add_term(e, avg);
  }
}

template <class Ring>
using SeriesOf = TruncatedSeries<typename Ring::value_type>;

// Factor expansions for each fixed coordinate and each eigenvalue that occurs on it.
template <class Ring>
std::vector<std::map<Rational, SeriesOf<Ring>>> factor_cache(const WeightSystem& w, const DiagonalGroup& group,
                                                             const std::vector<int>& fixed, const ProductPlan& plan,
                                                             const Ring& ring) {
  std::vector<std::map<Rational, SeriesOf<Ring>>> cache(fixed.size());
  for (std::size_t f = 0; f < fixed.size(); ++f) {
    const int i = fixed[f];
    const auto& [lo, hi] = plan.factor_windows[f];
    for (const auto& h : group.elements()) {
      const Rational& angle = h.angle(i);
      if (cache[f].count(angle)) continue;
      cache[f].emplace(angle, expand_geometric_factor(kHalf, w[i] - kHalf, RootOfUnity(angle), w[i], lo, hi, ring));
    }
  }
  return cache;
}

template <class Ring>
SeriesOf<Ring> product_for(const GroupElement& h, const std::vector<int>& fixed,
                           const std::vector<std::map<Rational, SeriesOf<Ring>>>& cache) {
  SeriesOf<Ring> product = cache[0].at(h.angle(fixed[0]));
  for (std::size_t f = 1; f < fixed.size(); ++f) product = series_mul(product, cache[f].at(h.angle(fixed[f])));
  return product;
}

}  // namespace

SectorSeries sector_series(const WeightSystem& w, const DiagonalGroup& group, const GroupElement& g, Execution exec) {
  const std::vector<int> fixed = coordinates_of(g.fixed_coordinates(), group.dimension());
  if (fixed.empty()) return untwisted_constant();

  std::vector<Rational> fixed_weights;
  for (int i : fixed) fixed_weights.push_back(w[i]);
  const ProductPlan plan = plan_factor_product(fixed_weights);
  const int modulus = static_cast<int>(group.exponent());
  const RootSumRing ring{modulus};
  const auto cache = factor_cache(w, group, fixed, plan, ring);

  const auto& elements = group.elements();
  const long count = static_cast<long>(elements.size());
  std::optional<SeriesOf<RootSumRing>> total;
  std::exception_ptr failure;
  std::mutex merge;

#pragma omp parallel if (exec == Execution::Parallel)
  {
    std::optional<SeriesOf<RootSumRing>> local;
#pragma omp for schedule(static)
    for (long k = 0; k < count; ++k) {
      try {
        auto product = product_for<RootSumRing>(elements[static_cast<std::size_t>(k)], fixed, cache);
        if (local) *local += product;
        else local = std::move(product);
      } catch (...) {
        std::lock_guard<std::mutex> lock(merge);
        if (!failure) failure = std::current_exception();
      }
    }
    // integer sums, so the merge order does not affect the result
    std::lock_guard<std::mutex> lock(merge);
    if (local && !failure) {
      if (total) *total += *local;
      else total = std::move(local);
    }
  }
  if (failure) std::rethrow_exception(failure);

  const FieldPtr field = CyclotomicField::make(modulus);
  const auto reduced = total->map([&](const RootSum& r) { return r.to_field(field); });
  SectorSeries out;
  out.support_lo = plan.support_lo;
  out.support_hi = plan.support_hi;
  out.window_lo = reduced.lower();
  out.window_hi = reduced.upper();
  average_and_certify(out, finite_part_check(reduced, plan.support_lo, plan.support_hi), elements.size());
  return out;
}

SectorSeries sector_series_reference(const WeightSystem& w, const DiagonalGroup& group, const GroupElement& g) {
  const std::vector<int> fixed = coordinates_of(g.fixed_coordinates(), group.dimension());
  if (fixed.empty()) return untwisted_constant();

  std::vector<Rational> fixed_weights;
  for (int i : fixed) fixed_weights.push_back(w[i]);
  const ProductPlan plan = plan_factor_product(fixed_weights);
  const CyclotomicRing ring{CyclotomicField::make(static_cast<int>(group.exponent()))};

  std::optional<SeriesOf<CyclotomicRing>> total;
  for (const auto& h : group.elements()) {
    SeriesOf<CyclotomicRing> product = expand_geometric_factor(kHalf, w[fixed[0]] - kHalf, h.eigenvalue(fixed[0]),
                                                               w[fixed[0]], plan.factor_windows[0].first,
                                                               plan.factor_windows[0].second, ring);
    for (std::size_t f = 1; f < fixed.size(); ++f) {
      const int i = fixed[f];
      product = series_mul(product, expand_geometric_factor(kHalf, w[i] - kHalf, h.eigenvalue(i), w[i],
                                                            plan.factor_windows[f].first,
                                                            plan.factor_windows[f].second, ring));
    }
    if (total) *total += product;
    else total = std::move(product);
  }
  SectorSeries out;
  out.support_lo = plan.support_lo;
  out.support_hi = plan.support_hi;
  out.window_lo = total->lower();
  out.window_hi = total->upper();
  average_and_certify(out, finite_part_check(*total, plan.support_lo, plan.support_hi), group.order());
  return out;
}

std::vector<SectorContribution> sector_contributions(const WeightSystem& w, const DiagonalGroup& group, Execution exec,
                                                     Kernel kernel) {
  if (w.size() != group.dimension())
    throw Error(ErrorKind::InvalidInput, "weight system has " + std::to_string(w.size()) +
                                             " entries but the group acts on C^" + std::to_string(group.dimension()));
  const int n = group.dimension();
  std::vector<SectorContribution> out;
  out.reserve(group.order());
  // sectors in sorted element order; the parallelism is inside each sector
  for (const auto& g : group.elements()) {
    SectorContribution c;
    c.element = g;
    c.age = age(g);
    c.fixed_dim = fix_dimension(g);
    c.sign = n % 2 ? -1 : 1;
    c.series = kernel == Kernel::Fast ? sector_series(w, group, g, exec) : sector_series_reference(w, group, g);
    out.push_back(std::move(c));
  }
  return out;
}

EFunction assemble_e_function(int n, const std::vector<SectorContribution>& sectors) {
  EFunction e;
  e.n = n;
  for (const auto& s : sectors) {
    // (t tbar)^{age - (n - n_g)/2} (tbar/t)^{exponent}
    const Rational prefactor = s.age - make_rational(n - s.fixed_dim, 2);
    for (const auto& [exponent, c] : s.series.averaged.terms())
      e.poly.add_term(prefactor - exponent, prefactor + exponent, s.sign * to_int64(c));
  }
  return e;
}

EFunction e_function(const WeightSystem& w, const DiagonalGroup& group, Execution exec) {
  return assemble_e_function(group.dimension(), sector_contributions(w, group, exec));
}

HodgeTable hodge_table(const EFunction& e) {
  HodgeTable table;
  const Rational half_n = make_rational(e.n, 2);
  for (const auto& [key, c] : e.poly.terms()) {
    const Rational p = key.first + half_n;
    const Rational q = key.second + half_n;
    const Rational parity = key.first + key.second;
    if (!is_integer(parity))
      throw Error(ErrorKind::ConsistencyFailure, "p + q = " + to_string(p + q) + " is not an integer");
    const int sign = mpz_odd_p(parity.get_num_mpz_t()) ? -1 : 1;
    const std::int64_t h = sign * c;
    if (h <= 0)
      throw Error(ErrorKind::ConsistencyFailure, "coefficient " + std::to_string(c) + " at (p,q) = (" + to_string(p) +
                                                     "," + to_string(q) + ") has the wrong sign for a Hodge number");
    table.push_back({p, q, h});
  }
  std::sort(table.begin(), table.end(), [](const HodgeEntry& a, const HodgeEntry& b) {
    return a.q != b.q ? a.q < b.q : a.p < b.p;
  });
  return table;
}

std::int64_t mu_pair(const EFunction& e) { return e.poly.evaluate_at_one(); }

Rational mu_inclusion_exclusion(const WeightSystem& w, const DiagonalGroup& group) {
  const int n = group.dimension();
  const CoordSet full = full_set(n);
  const auto orders = fixed_subgroup_orders(group);
  Rational total(0);
  for (CoordSet inner = 0; inner <= full; ++inner) {
    Rational prod(1);
    for (int i = 0; i < n; ++i)
      if (inner & (CoordSet{1} << i)) prod *= 1 - 1 / w[i];
    Integer bracket(0);
    const CoordSet rest = full & ~inner;
    for (CoordSet extra = rest;; extra = (extra - 1) & rest) {
      const Integer sq = Integer(static_cast<unsigned long>(orders[inner | extra])) *
                         Integer(static_cast<unsigned long>(orders[inner | extra]));
      if (popcount(extra) % 2) bracket -= sq;
      else bracket += sq;
      if (extra == 0) break;
    }
    total += prod * Rational(bracket);
  }
  total /= Rational(static_cast<long>(group.order()));
  if (n % 2) total = -total;
  return total;
}

Moments moments(const EFunction& e) {
  Moments m{Rational(0), Rational(0)};
  for (const auto& [key, c] : e.poly.terms()) {
    const Rational& shifted_q = key.second;
    m.mean += shifted_q * c;
    m.variance += shifted_q * shifted_q * c;
  }
  return m;
}

Rational variance(const EFunction& e) { return moments(e).variance; }

ExponentMultiset exponent_multiset(const EFunction& e) {
  ExponentMultiset out;
  const Rational half_n = make_rational(e.n, 2);
  for (const auto& [key, c] : e.poly.terms()) out.add(key.second + half_n, c);
  return out;
}

FracLaurent1<Rational> chi_y(const EFunction& e) {
  FracLaurent1<Rational> out;
  for (const auto& [key, c] : e.poly.terms()) out.add_term(key.second, Rational(static_cast<long>(c)));
  return out;
}

namespace {

struct SymbolicTerm {
  std::int64_t grid;
  std::int64_t lambda_power;
  int sign;
};

// Terms of (y^A - l y^B) sum_k l^k y^{kC} with l kept symbolic, up to grid index `upper`.
std::vector<SymbolicTerm> symbolic_factor(const Rational& w, std::int64_t den, std::int64_t upper) {
  const std::int64_t ka = to_int64(kHalf * Rational(static_cast<long>(den)));
  const std::int64_t kb = to_int64((w - kHalf) * Rational(static_cast<long>(den)));
  const std::int64_t kc = to_int64(w * Rational(static_cast<long>(den)));
  std::vector<SymbolicTerm> terms;
  for (std::int64_t k = 0; kb + k * kc <= upper || ka + k * kc <= upper; ++k) {
    if (ka + k * kc <= upper) terms.push_back({ka + k * kc, k, 1});
    if (kb + k * kc <= upper) terms.push_back({kb + k * kc, k + 1, -1});
  }
  return terms;
}

}  // namespace

FracLaurent1<Rational> chi_y_closed_form(const WeightSystem& w, const DiagonalGroup& group) {
  const int n = group.dimension();
  const std::int64_t modulus = group.exponent();
  const std::vector<GroupElement>& gens = group.generators().empty() && group.order() > 1
                                              ? group.elements()
                                              : group.generators();
  // integer angles a_i(s) = N * angle_i(s) for each generator s
  std::vector<std::vector<std::int64_t>> gen_angles;
  for (const auto& s : gens) {
    std::vector<std::int64_t> row;
    for (const auto& a : s.angles()) row.push_back(to_int64(a * Rational(static_cast<long>(modulus))));
    gen_angles.push_back(std::move(row));
  }
  const std::int64_t den = w.step_denominator();
  const int sign_n = n % 2 ? -1 : 1;

  FracLaurent1<Rational> out;
  for (const auto& g : group.elements()) {
    const Rational shift = age(g) - make_rational(n - fix_dimension(g), 2);
    const std::vector<int> fixed = coordinates_of(g.fixed_coordinates(), n);
    if (fixed.empty()) {
      out.add_term(shift, Rational(sign_n));
      continue;
    }
    Rational lo_sum(0);
    for (int i : fixed) lo_sum += w[i];
    const Rational support_hi = make_rational(static_cast<std::int64_t>(fixed.size()), 2) - lo_sum;
    const Rational support_lo = -support_hi;
    // exact up to support_hi + 1 once every factor is expanded far enough
    const std::int64_t upper = to_int64((support_hi + 1) * Rational(static_cast<long>(den)));
    std::int64_t min_sum = 0;
    for (int i : fixed) min_sum += to_int64((w[i] - kHalf) * Rational(static_cast<long>(den)));

    // state: (grid index, character values on the generators mod N) -> count
    using State = std::pair<std::int64_t, std::vector<std::int64_t>>;
    std::map<State, std::int64_t> dp{{State{0, std::vector<std::int64_t>(gens.size(), 0)}, 1}};
    std::int64_t remaining_min = min_sum;
    for (int i : fixed) {
      const std::int64_t own_min = to_int64((w[i] - kHalf) * Rational(static_cast<long>(den)));
      remaining_min -= own_min;
      // the other factors can lower the exponent by at most min_sum - own_min
      const auto terms = symbolic_factor(w[i], den, upper - (min_sum - own_min));
      std::map<State, std::int64_t> next;
      for (const auto& [state, count] : dp) {
        for (const auto& t : terms) {
          const std::int64_t grid = state.first + t.grid;
          if (grid + remaining_min > upper) continue;
          std::vector<std::int64_t> chars = state.second;
          for (std::size_t j = 0; j < gens.size(); ++j)
            chars[j] = (chars[j] + t.lambda_power * gen_angles[j][static_cast<std::size_t>(i)]) % modulus;
          next[State{grid, std::move(chars)}] += t.sign * count;
        }
      }
      dp = std::move(next);
    }
    TruncatedSeries<Rational> series(den, to_int64((support_lo - 1) * Rational(static_cast<long>(den))), upper,
                                     Rational(0));
    for (const auto& [state, count] : dp) {
      const bool trivial = std::all_of(state.second.begin(), state.second.end(), [](std::int64_t c) { return c == 0; });
      if (trivial && count != 0) series.add(state.first, Rational(static_cast<long>(count)));
    }
    const FracLaurent1<Rational> averaged = finite_part_check(series, support_lo, support_hi);
    for (const auto& [e, c] : averaged.terms()) out.add_term(shift + e, sign_n * c);
  }
  return out;
}

bool verify_sector_counts(const DiagonalGroup& group) {
  const CoordSet full = full_set(group.dimension());
  std::size_t total = 0;
  for (CoordSet outer = 0; outer <= full; ++outer) {
    for (CoordSet inner = outer;; inner = (inner - 1) & outer) {
      const SectorCounts c = sector_counts(group, inner, outer);
      if (inner == outer) total += c.exact;
      if (inner == 0) break;
    }
  }
  return total == group.order();
}

MainTheoremVerdict verify_main_theorem(const WeightSystem& w, const DiagonalGroup& group, Execution exec) {
  MainTheoremVerdict v;
  try {
    v.sectors = sector_contributions(w, group, exec);
    v.sector_finiteness = true;
    v.e = assemble_e_function(group.dimension(), v.sectors);
    try {
      v.hodge = hodge_table(v.e);
      v.hodge_signs = true;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::ConsistencyFailure) throw;
      v.error = err.what();
    }
    v.mu = mu_pair(v.e);
    v.mu_inclusion_exclusion = mu_inclusion_exclusion(w, group);
    v.mu_routes = v.mu_inclusion_exclusion == Rational(static_cast<long>(v.mu));
    v.c_hat = c_hat(w);
    const Moments m = moments(v.e);
    v.mean = m.mean;
    v.variance = m.variance;
    v.expected_variance = v.c_hat * v.mu / 12;
    v.main_theorem = v.variance == v.expected_variance;
    v.swap_symmetry = v.e.poly.swapped() == v.e.poly;
    v.serre_duality = v.e.poly.inverted() == v.e.poly;
    v.zero_mean = v.mean == 0;
    v.chi_y_routes = chi_y(v.e) == chi_y_closed_form(w, group);
  } catch (const Error& err) {
    v.error = std::string(to_string(err.kind())) + ": " + err.what();
  }
  return v;
}

}  // namespace lgvar
