#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lgvar/rational.hpp"

namespace lgvar {

/// Integer polynomial, coefficients from low to high degree.
using IntPoly = std::vector<std::int64_t>;

/// Phi_N, computed by exact division of x^N - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/// e[angle] = exp(2 pi i angle), angle kept in [0, 1) in lowest terms.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  explicit RootOfUnity(const Rational& angle);

  const Rational& angle() const { return angle_; }
  /// Order in the unit circle group (denominator of the angle).
  std::int64_t order() const;
  bool is_one() const { return angle_ == 0; }

  RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(angle_ + o.angle_); }
  RootOfUnity inverse() const { return RootOfUnity(-angle_); }
  RootOfUnity pow(std::int64_t k) const { return RootOfUnity(angle_ * Rational(static_cast<long>(k))); }
  bool operator==(const RootOfUnity& o) const { return angle_ == o.angle_; }

 private:
  Rational angle_{0};
};

/// Immutable description of Q(zeta_N): Phi_N and the reductions of x^k mod Phi_N.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> make(int n);

  int modulus() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const IntPoly& minimal_polynomial() const { return phi_; }
  /// Coordinates of zeta_N^k (0 <= k < N) in the power basis.
  const IntPoly& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

  explicit CyclotomicField(int n);

 private:
  int n_;
  IntPoly phi_;
  std::vector<IntPoly> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N) in canonical power-basis form 1, zeta, ..., zeta^{phi(N)-1}.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(FieldPtr field, const Rational& value);
  CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs);

  static CyclotomicNumber zero(FieldPtr field) { return CyclotomicNumber(std::move(field), Rational(0)); }
  static CyclotomicNumber one(FieldPtr field) { return CyclotomicNumber(std::move(field), Rational(1)); }

  int modulus() const { return field_ ? field_->modulus() : 0; }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational value if every coordinate beyond the constant one vanishes.
  std::optional<Rational> as_rational() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  CyclotomicNumber inverse() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  bool operator==(const CyclotomicNumber& o) const;

 private:
  void check_compatible(const CyclotomicNumber& o) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Canonical image of a root of unity in Q(zeta_N); the root's order must divide N.
CyclotomicNumber embed_root(const RootOfUnity& root, const FieldPtr& field);

/// Integer combination of N-th roots of unity, i.e. an element of the group ring Z[C_N].
/// Products of roots stay exact integer counts; reduction to the field happens in to_field().
class RootSum {
 public:
  RootSum() = default;
  explicit RootSum(int modulus) : counts_(static_cast<std::size_t>(modulus), 0) {}
  static RootSum monomial(int modulus, int exponent, std::int64_t count = 1);

  int modulus() const { return static_cast<int>(counts_.size()); }
  bool is_zero() const;
  std::int64_t count(int k) const { return counts_[static_cast<std::size_t>(k)]; }

  RootSum& operator+=(const RootSum& o);
  RootSum& operator-=(const RootSum& o);
  RootSum operator*(const RootSum& o) const;
  RootSum operator-() const;
  RootSum operator+(const RootSum& o) const { RootSum r = *this; return r += o; }
  bool operator==(const RootSum& o) const = default;

  CyclotomicNumber to_field(const FieldPtr& field) const;

 private:
  std::vector<std::int64_t> counts_;
};

}  // namespace lgvar
