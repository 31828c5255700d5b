#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgvar/group.hpp"
#include "lgvar/qseries.hpp"
#include "lgvar/rational.hpp"

namespace lgvar {

struct Monomial {
  Rational coefficient;
  std::vector<int> exponents;
};

/// Polynomial in x1..xn with distinct exponent vectors and nonzero coefficients.
class PolynomialExpr {
 public:
  PolynomialExpr(int n, std::vector<Monomial> monomials);

  int variables() const { return n_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

 private:
  int n_;
  std::vector<Monomial> monomials_;
};

/// Grammar: terms separated by + or -, each a '*'-product of integer/rational coefficients and
/// factors x<k>[^e]. Repeated monomials are merged; throws SyntaxError with the offending position.
PolynomialExpr parse_polynomial(std::string_view text);

std::string to_string(const PolynomialExpr& f);

/// Rational weights with 0 < w_i < 1.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<Rational> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }
  /// lcm(2, denominators of the weights): every exponent in the sector formulas is a multiple of 1/step.
  std::int64_t step_denominator() const;
  /// Weights above 1/2 do not occur for non-degenerate singularities but are still evaluable.
  std::vector<std::string> warnings() const;

  bool operator==(const WeightSystem& o) const { return weights_ == o.weights_; }

 private:
  std::vector<Rational> weights_;
};

/// Brieskorn-Pham weights (1/a_1, ..., 1/a_n).
WeightSystem brieskorn_pham_weights(const std::vector<int>& exponents);

/// Solves sum_i m_i w_i = 1 over all monomials m. Throws NotWeightedHomogeneous (inconsistent),
/// AmbiguousWeights (underdetermined; message lists the free coordinates) or InvalidWeight.
WeightSystem infer_weights(const PolynomialExpr& f);

/// Free coordinates (0-based) of the weight system of f, empty when it is determined.
std::vector<int> free_weight_coordinates(const PolynomialExpr& f);

/// Throws NotWeightedHomogeneous unless every monomial has weighted degree 1.
void verify_weights(const PolynomialExpr& f, const WeightSystem& w);

struct InvarianceReport {
  bool ok = true;
  std::optional<GroupElement> element;
  std::optional<Monomial> monomial;
  std::string message;
};

/// Checks that every monomial is fixed by every group element.
InvarianceReport check_invariance(const PolynomialExpr& f, const DiagonalGroup& group);

/// Signed multiset of rational exponents.
class ExponentMultiset {
 public:
  void add(const Rational& q, std::int64_t mult);
  const std::map<Rational, std::int64_t>& entries() const { return entries_; }
  std::int64_t total() const;
  bool empty() const { return entries_.empty(); }
  Rational min() const { return entries_.begin()->first; }
  Rational max() const { return entries_.rbegin()->first; }
  std::int64_t multiplicity(const Rational& q) const;
  /// sum of mult * q
  Rational first_moment() const;
  /// sum of mult * (q - center)^2
  Rational central_second_moment(const Rational& center) const;

  bool operator==(const ExponentMultiset& o) const { return entries_ == o.entries_; }

 private:
  std::map<Rational, std::int64_t> entries_;
};

/// Windows for expanding prod_i (y^{1/2} - l_i y^{w_i - 1/2}) / (1 - l_i y^{w_i}) so that the product is
/// exact on [support_lo - 1, support_hi + 1], where support = [sum w - m/2, m/2 - sum w].
struct ProductPlan {
  Rational support_lo;
  Rational support_hi;
  std::vector<std::pair<Rational, Rational>> factor_windows;
};

ProductPlan plan_factor_product(const std::vector<Rational>& weights);

/// (-1)^n prod (1 - 1/w_i); throws InvalidWeightSystem unless a positive integer.
std::int64_t milnor_number_trivial(const WeightSystem& w);

/// (-1)^n prod_i (y^{1/2} - y^{w_i - 1/2}) / (1 - y^{w_i}) certified finite; exponents are q - n/2.
FracLaurent1<Rational> shifted_exponent_polynomial(const WeightSystem& w);

/// Exponents of f with the trivial group.
ExponentMultiset exponents_trivial(const WeightSystem& w);

/// n - 2 sum w_i
Rational c_hat(const WeightSystem& w);

}  // namespace lgvar
