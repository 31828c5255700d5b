#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgvar/cyclotomic.hpp"
#include "lgvar/error.hpp"
#include "lgvar/rational.hpp"

namespace lgvar {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline bool is_zero(const RootSum& x) { return x.is_zero(); }

inline std::optional<Rational> to_rational(const Rational& x) { return x; }
inline std::optional<Rational> to_rational(const CyclotomicNumber& x) { return x.as_rational(); }

/// Coefficient rings usable by expand_geometric_factor.
struct RationalRing {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  /// Only +1 and -1 are rational roots of unity.
  Rational root(const RootOfUnity& r) const;
};

struct CyclotomicRing {
  using value_type = CyclotomicNumber;
  FieldPtr field;
  CyclotomicNumber zero() const { return CyclotomicNumber::zero(field); }
  CyclotomicNumber one() const { return CyclotomicNumber::one(field); }
  CyclotomicNumber root(const RootOfUnity& r) const { return embed_root(r, field); }
};

struct RootSumRing {
  using value_type = RootSum;
  int modulus;
  RootSum zero() const { return RootSum(); }
  RootSum one() const { return RootSum::monomial(modulus, 0); }
  RootSum root(const RootOfUnity& r) const;
};

/// Sparse Laurent polynomial in one variable with rational exponents.
template <class Coeff>
class FracLaurent1 {
 public:
  using Terms = std::map<Rational, Coeff>;

  FracLaurent1() = default;

  void add_term(const Rational& exponent, const Coeff& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Least common denominator of the exponents.
  std::int64_t denominator_bound() const {
    std::int64_t d = 1;
    for (const auto& [e, c] : terms_) d = lcm_int64(d, to_int64(Integer(e.get_den())));
    return d;
  }

  Coeff coefficient(const Rational& exponent, const Coeff& zero) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? zero : it->second;
  }

  FracLaurent1& operator+=(const FracLaurent1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend FracLaurent1 operator*(const FracLaurent1& a, const FracLaurent1& b) {
    FracLaurent1 out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  /// Multiplies every exponent by -1.
  FracLaurent1 inverted() const {
    FracLaurent1 out;
    for (const auto& [e, c] : terms_) out.add_term(-e, c);
    return out;
  }

  bool operator==(const FracLaurent1& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// Value at y = 1, i.e. the sum of coefficients.
template <class Coeff>
Coeff evaluate_at_one(const FracLaurent1<Coeff>& p, Coeff zero) {
  for (const auto& [e, c] : p.terms()) zero += c;
  return zero;
}

/// Sparse Laurent polynomial in (t, tbar) with rational exponents and integer coefficients.
class FracLaurent2 {
 public:
  using Key = std::pair<Rational, Rational>;
  using Terms = std::map<Key, std::int64_t>;

  void add_term(const Rational& et, const Rational& etbar, std::int64_t c);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// E(tbar, t).
  FracLaurent2 swapped() const;
  /// E(1/t, 1/tbar).
  FracLaurent2 inverted() const;
  std::int64_t evaluate_at_one() const;

  bool operator==(const FracLaurent2& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// Power series sum_k c_k y^{k/den} for k in [lo, hi].
/// Coefficients below lo are zero; coefficients above hi are not represented.
template <class Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries(std::int64_t den, std::int64_t lo, std::int64_t hi, Coeff zero)
      : den_(den), lo_(lo), hi_(hi), zero_(zero), coeffs_(static_cast<std::size_t>(hi - lo + 1), zero) {
    if (den <= 0 || lo > hi) throw Error(ErrorKind::InvalidInput, "truncated series needs den > 0 and lo <= hi");
  }

  /// Builds a series from explicit terms; exponents outside [lo, hi] are dropped.
  static TruncatedSeries from_terms(const Rational& lo, const Rational& hi,
                                    const std::vector<std::pair<Rational, Coeff>>& terms, Coeff zero) {
    std::int64_t den = lcm_int64(to_int64(Integer(lo.get_den())), to_int64(Integer(hi.get_den())));
    for (const auto& t : terms) den = lcm_int64(den, to_int64(Integer(t.first.get_den())));
    TruncatedSeries s(den, grid_index(lo, den), grid_index(hi, den), zero);
    for (const auto& [e, c] : terms) s.add(grid_index(e, den), c);
    return s;
  }

  std::int64_t den() const { return den_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  Rational lower() const { return make_rational(lo_, den_); }
  Rational upper() const { return make_rational(hi_, den_); }
  const Coeff& zero() const { return zero_; }

  const Coeff& at(std::int64_t k) const {
    if (k < lo_ || k > hi_) return zero_;
    return coeffs_[static_cast<std::size_t>(k - lo_)];
  }
  Coeff coefficient(const Rational& exponent) const {
    Rational scaled = exponent * Rational(static_cast<long>(den_));
    if (!is_integer(scaled)) return zero_;
    return at(to_int64(scaled));
  }
  void add(std::int64_t k, const Coeff& c) {
    if (k < lo_ || k > hi_) return;
    coeffs_[static_cast<std::size_t>(k - lo_)] += c;
  }

  /// Same series on the finer grid 1/(den*factor).
  TruncatedSeries refined(std::int64_t factor) const {
    if (factor == 1) return *this;
    TruncatedSeries out(den_ * factor, lo_ * factor, hi_ * factor, zero_);
    for (std::int64_t k = lo_; k <= hi_; ++k)
      if (!is_zero(at(k))) out.add(k * factor, at(k));
    return out;
  }

  std::vector<std::int64_t> support_indices() const {
    std::vector<std::int64_t> idx;
    for (std::int64_t k = lo_; k <= hi_; ++k)
      if (!is_zero(at(k))) idx.push_back(k);
    return idx;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    if (o.den_ != den_ || o.lo_ != lo_ || o.hi_ != hi_)
      throw Error(ErrorKind::InvalidInput, "adding truncated series with different windows");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  template <class F>
  auto map(F&& f) const -> TruncatedSeries<decltype(f(std::declval<const Coeff&>()))> {
    using Out = decltype(f(std::declval<const Coeff&>()));
    TruncatedSeries<Out> out(den_, lo_, hi_, f(zero_));
    for (std::int64_t k = lo_; k <= hi_; ++k)
      if (!is_zero(at(k))) out.add(k, f(at(k)));
    return out;
  }

  static std::int64_t grid_index(const Rational& e, std::int64_t den) {
    Rational scaled = e * Rational(static_cast<long>(den));
    if (!is_integer(scaled))
      throw Error(ErrorKind::InvalidInput, "exponent " + to_string(e) + " is not a multiple of 1/" + std::to_string(den));
    return to_int64(scaled);
  }

 private:
  std::int64_t den_;
  std::int64_t lo_;
  std::int64_t hi_;
  Coeff zero_;
  std::vector<Coeff> coeffs_;
};

/// Expansion of (y^A - lambda y^B) / (1 - lambda y^C) = (y^A - lambda y^B) sum_k lambda^k y^{kC}
/// on the window [L, U]. Requires C > 0 and L <= min(A, B).
template <class Ring>
TruncatedSeries<typename Ring::value_type> expand_geometric_factor(const Rational& a, const Rational& b,
                                                                   const RootOfUnity& lambda, const Rational& c,
                                                                   const Rational& window_lo,
                                                                   const Rational& window_hi, const Ring& ring) {
  if (c <= 0) throw Error(ErrorKind::DomainError, "geometric factor needs C > 0, got " + to_string(c));
  if (window_lo > (a < b ? a : b))
    throw Error(ErrorKind::InvalidInput, "window lower bound " + to_string(window_lo) + " cuts off the leading term");
  std::int64_t den = 1;
  for (const Rational* r : {&a, &b, &c, &window_lo, &window_hi}) den = lcm_int64(den, to_int64(Integer(r->get_den())));
  using Series = TruncatedSeries<typename Ring::value_type>;
  Series s(den, Series::grid_index(window_lo, den), Series::grid_index(window_hi, den), ring.zero());
  const std::int64_t ka = Series::grid_index(a, den);
  const std::int64_t kb = Series::grid_index(b, den);
  const std::int64_t kc = Series::grid_index(c, den);
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t ea = ka + k * kc;
    const std::int64_t eb = kb + k * kc;
    if (ea > s.hi() && eb > s.hi()) break;
    // lambda^k y^{A + kC} - lambda^{k+1} y^{B + kC}
    s.add(ea, ring.root(lambda.pow(k)));
    s.add(eb, -ring.root(lambda.pow(k + 1)));
  }
  return s;
}

/// Truncated product on the common grid. The result window is the largest one on which
/// every coefficient is determined by the operands' windows.
template <class Coeff>
TruncatedSeries<Coeff> series_mul(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  const std::int64_t den = lcm_int64(a.den(), b.den());
  const TruncatedSeries<Coeff> ra = a.refined(den / a.den());
  const TruncatedSeries<Coeff> rb = b.refined(den / b.den());
  const std::int64_t lo = ra.lo() + rb.lo();
  const std::int64_t hi = std::min(ra.hi() + rb.lo(), rb.hi() + ra.lo());
  TruncatedSeries<Coeff> out(den, lo, hi, ra.zero());
  const auto ia = ra.support_indices();
  const auto ib = rb.support_indices();
  for (std::int64_t i : ia) {
    for (std::int64_t j : ib) {
      if (i + j > hi) break;
      out.add(i + j, ra.at(i) * rb.at(j));
    }
  }
  return out;
}

/// Certifies that the coefficients of s vanish outside [lo, hi] and are rational, and returns
/// the finite Laurent polynomial. The window of s must extend at least 1 beyond [lo, hi] on both sides.
template <class Coeff>
FracLaurent1<Rational> finite_part_check(const TruncatedSeries<Coeff>& s, const Rational& lo, const Rational& hi) {
  if (s.lower() > lo - 1 || s.upper() < hi + 1)
    throw Error(ErrorKind::InvalidInput, "series window [" + to_string(s.lower()) + ", " + to_string(s.upper()) +
                                             "] does not contain [" + to_string(lo) + ", " + to_string(hi) +
                                             "] with guard margin 1");
  FracLaurent1<Rational> out;
  for (std::int64_t k = s.lo(); k <= s.hi(); ++k) {
    const auto& c = s.at(k);
    if (is_zero(c)) continue;
    const Rational e = make_rational(k, s.den());
    if (e < lo || e > hi)
      throw Error(ErrorKind::TruncationViolation, "nonzero coefficient at exponent " + to_string(e) +
                                                      " outside the support [" + to_string(lo) + ", " +
                                                      to_string(hi) + "]");
    auto r = to_rational(c);
    if (!r) throw Error(ErrorKind::AveragingFailure, "coefficient at exponent " + to_string(e) + " is not rational");
    out.add_term(e, *r);
  }
  return out;
}

}  // namespace lgvar
