#include "lgvar/cyclotomic.hpp"

#include <algorithm>
#include <string>

#include "lgvar/error.hpp"

namespace lgvar {

namespace {

// Exact division of integer polynomials; divisor must be monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error(ErrorKind::ConsistencyFailure, "inexact cyclotomic division");
  return quot;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPoly& p) {
  QPoly q;
  q.reserve(p.size());
  for (auto c : p) q.emplace_back(static_cast<long>(c));
  return q;
}

// a = q*b + r
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "cyclotomic_polynomial needs N >= 1");
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  return num;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

RootOfUnity::RootOfUnity(const Rational& angle) : angle_(frac(angle)) {}

std::int64_t RootOfUnity::order() const { return to_int64(angle_.get_den()); }

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  const int deg = degree();
  IntPoly current(static_cast<std::size_t>(deg), 0);
  if (deg == 0) throw Error(ErrorKind::ConsistencyFailure, "degenerate cyclotomic field");
  current[0] = 1;
  powers_.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    powers_.push_back(current);
    // multiply by x and reduce by the monic Phi_N
    const std::int64_t top = current.back();
    for (int i = deg - 1; i > 0; --i) current[i] = current[i - 1] - top * phi_[i];
    current[0] = -top * phi_[0];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "cyclotomic field modulus must be >= 1");
  return std::make_shared<const CyclotomicField>(n);
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, const Rational& value)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), Rational(0)) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree())
    throw Error(ErrorKind::InvalidInput, "coefficient vector length must equal deg Phi_N");
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void CyclotomicNumber::check_compatible(const CyclotomicNumber& o) const {
  if (modulus() != o.modulus())
    throw Error(ErrorKind::IncompatibleModulus, "cyclotomic moduli differ: " + std::to_string(modulus()) +
                                                    " vs " + std::to_string(o.modulus()));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  check_compatible(o);
  const int deg = field_->degree();
  const int n = field_->modulus();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * deg - 1), Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + deg);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (prod[k] == 0) continue;
    const IntPoly& red = field_->power(k % n);
    for (int i = 0; i < deg; ++i)
      if (red[i] != 0) out[i] += prod[k] * Rational(static_cast<long>(red[i]));
  }
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in cyclotomic field");
  // Extended Euclid: track s with s*a == r (mod Phi_N).
  QPoly r0 = to_qpoly(field_->minimal_polynomial());
  QPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  const Rational c = r1.at(0);
  QPoly q, rem;
  divmod(s1, to_qpoly(field_->minimal_polynomial()), q, rem);
  std::vector<Rational> out(static_cast<std::size_t>(field_->degree()), Rational(0));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return CyclotomicNumber(field_, std::move(out));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  check_compatible(o);
  return *this *= o.inverse();
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  return modulus() == o.modulus() && coeffs_ == o.coeffs_;
}

CyclotomicNumber embed_root(const RootOfUnity& root, const FieldPtr& field) {
  const std::int64_t order = root.order();
  const int n = field->modulus();
  if (n % order != 0)
    throw Error(ErrorKind::IncompatibleModulus, "root of order " + std::to_string(order) +
                                                    " does not lie in Q(zeta_" + std::to_string(n) + ")");
  const std::int64_t k = to_int64(root.angle().get_num()) * (n / order);
  const IntPoly& v = field->power(static_cast<int>(k % n));
  std::vector<Rational> coeffs;
  coeffs.reserve(v.size());
  for (auto c : v) coeffs.emplace_back(static_cast<long>(c));
  return CyclotomicNumber(field, std::move(coeffs));
}

RootSum RootSum::monomial(int modulus, int exponent, std::int64_t count) {
  RootSum r(modulus);
  r.counts_[static_cast<std::size_t>(((exponent % modulus) + modulus) % modulus)] = count;
  return r;
}

bool RootSum::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c == 0; });
}

RootSum& RootSum::operator+=(const RootSum& o) {
  if (o.counts_.empty()) return *this;
  if (counts_.empty()) {
    counts_ = o.counts_;
    return *this;
  }
  if (counts_.size() != o.counts_.size()) throw Error(ErrorKind::IncompatibleModulus, "root sums of different moduli");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& o) { return *this += -o; }

RootSum RootSum::operator-() const {
  RootSum r = *this;
  for (auto& c : r.counts_) c = -c;
  return r;
}

RootSum RootSum::operator*(const RootSum& o) const {
  if (counts_.empty() || o.counts_.empty()) return {};
  if (counts_.size() != o.counts_.size()) throw Error(ErrorKind::IncompatibleModulus, "root sums of different moduli");
  const std::size_t n = counts_.size();
  RootSum r(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (counts_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.counts_[j] != 0) r.counts_[(i + j) % n] += counts_[i] * o.counts_[j];
  }
  return r;
}

CyclotomicNumber RootSum::to_field(const FieldPtr& field) const {
  if (counts_.empty()) return CyclotomicNumber::zero(field);
  if (static_cast<int>(counts_.size()) != field->modulus())
    throw Error(ErrorKind::IncompatibleModulus, "root sum modulus does not match field");
  std::vector<std::int64_t> acc(static_cast<std::size_t>(field->degree()), 0);
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] == 0) continue;
    const IntPoly& v = field->power(static_cast<int>(k));
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += counts_[k] * v[i];
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (auto c : acc) coeffs.emplace_back(static_cast<long>(c));
  return CyclotomicNumber(field, std::move(coeffs));
}

}  // namespace lgvar
