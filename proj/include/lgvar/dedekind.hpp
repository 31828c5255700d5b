#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgvar/cyclotomic.hpp"
#include "lgvar/group.hpp"
#include "lgvar/rational.hpp"

namespace lgvar {

/// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// Both sides of an identity, computed independently.
struct IdentitySides {
  /// the side evaluated in a cyclotomic field
  Rational cyclotomic;
  /// the closed form or the sawtooth sum
  Rational closed;

  bool holds() const { return cyclotomic == closed; }
};

/// -sum_{k=1}^{r-1} z^k / (1 - z^k)^2 with z = e[1/r], against (r^2 - 1)/12.
IdentitySides cot_square_sum_sides(int r);
/// Throws ConsistencyFailure if the sides differ.
Rational cot_square_sum(int r);

/// Cotangent-side terms c_m = (1 + z^m)/(1 - z^m) and their pairwise products for one r, so that
/// sweeping over all (a, b) costs additions only.
class DedekindTable {
 public:
  explicit DedekindTable(int r);

  int modulus() const { return r_; }
  /// (1/4r) sum_{k: r does not divide ak, bk} c_{ak} c_{bk} against -sum_k ((ak/r))((bk/r)).
  /// a and b must already lie in 1..r-1.
  IdentitySides sides(int a, int b) const;

 private:
  int r_;
  FieldPtr field_;
  // products_[m1 * r + m2] = c_{m1} c_{m2} for 1 <= m1, m2 < r
  std::vector<CyclotomicNumber> products_;
};

/// gcd(a, b, r). The two sides of DedekindTable::sides agree only when it is 1; in general the
/// sawtooth sum equals gcd(a, b, r) times the cotangent side.
int dedekind_common_divisor(std::int64_t a, std::int64_t b, int r);

/// Reduces a, b mod r (appending a warning when that changes them); DomainError if either is 0 mod r.
IdentitySides generalized_dedekind_sum_sides(std::int64_t a, std::int64_t b, int r,
                                             std::vector<std::string>* warnings = nullptr);
Rational generalized_dedekind_sum(std::int64_t a, std::int64_t b, int r,
                                  std::vector<std::string>* warnings = nullptr);

struct SubgroupCotSum {
  /// -sum_{h in H \ H^{i}} l/(1-l)^2 against |H^{i}| (|H/H^{i}|^2 - 1)/12
  IdentitySides sides;
  /// sum_{h in H \ H^{i}} (1+l)/(1-l), which must vanish
  Rational residue_sum;
  std::size_t stabilizer_order = 0;
  std::size_t index = 0;

  bool holds() const { return sides.holds() && residue_sum == 0; }
};

/// l = lambda_i(h), coordinate i is 0-based.
SubgroupCotSum subgroup_cot_sum_sides(const DiagonalGroup& h, int i);
Rational subgroup_cot_sum(const DiagonalGroup& h, int i);

}  // namespace lgvar
