#include "lgvar/dedekind.hpp"

#include <map>
#include <numeric>

#include "lgvar/error.hpp"

namespace lgvar {

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return frac(x) - Rational(1, 2);
}

namespace {

void require_modulus(int r) {
  if (r < 2) throw Error(ErrorKind::DomainError, "r must be at least 2, got " + std::to_string(r));
}

CyclotomicNumber zeta_power(const FieldPtr& field, std::int64_t k) {
  return embed_root(RootOfUnity(make_rational(k, field->modulus())), field);
}

Rational certify_rational(const CyclotomicNumber& x, const std::string& what) {
  auto value = x.as_rational();
  if (!value) throw Error(ErrorKind::NotRational, what + " is not rational");
  return *value;
}

void require(const IdentitySides& s, const std::string& what) {
  if (!s.holds())
    throw Error(ErrorKind::ConsistencyFailure,
                what + ": cyclotomic side " + to_string(s.cyclotomic) + " differs from " + to_string(s.closed));
}

}  // namespace

IdentitySides cot_square_sum_sides(int r) {
  require_modulus(r);
  const FieldPtr field = CyclotomicField::make(r);
  const CyclotomicNumber one = CyclotomicNumber::one(field);
  CyclotomicNumber sum = CyclotomicNumber::zero(field);
  for (int k = 1; k < r; ++k) {
    const CyclotomicNumber z = zeta_power(field, k);
    const CyclotomicNumber d = one - z;
    sum -= z * (d * d).inverse();
  }
  return {certify_rational(sum, "cotangent square sum for r = " + std::to_string(r)),
          make_rational(static_cast<std::int64_t>(r) * r - 1, 12)};
}

Rational cot_square_sum(int r) {
  const IdentitySides s = cot_square_sum_sides(r);
  require(s, "cotangent square sum for r = " + std::to_string(r));
  return s.closed;
}

DedekindTable::DedekindTable(int r) : r_(r) {
  require_modulus(r);
  field_ = CyclotomicField::make(r);
  const CyclotomicNumber one = CyclotomicNumber::one(field_);
  std::vector<CyclotomicNumber> c(static_cast<std::size_t>(r));
  for (int m = 1; m < r; ++m) {
    const CyclotomicNumber z = zeta_power(field_, m);
    c[static_cast<std::size_t>(m)] = (one + z) * (one - z).inverse();
  }
  products_.resize(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (int m1 = 1; m1 < r; ++m1)
    for (int m2 = m1; m2 < r; ++m2) {
      const CyclotomicNumber p = c[static_cast<std::size_t>(m1)] * c[static_cast<std::size_t>(m2)];
      products_[static_cast<std::size_t>(m1 * r + m2)] = p;
      products_[static_cast<std::size_t>(m2 * r + m1)] = p;
    }
}

IdentitySides DedekindTable::sides(int a, int b) const {
  if (a <= 0 || a >= r_ || b <= 0 || b >= r_)
    throw Error(ErrorKind::DomainError, "a and b must lie strictly between 0 and r");
  CyclotomicNumber sum = CyclotomicNumber::zero(field_);
  Rational sawtooth_sum(0);
  for (int k = 1; k < r_; ++k) {
    const int ak = (a * k) % r_;
    const int bk = (b * k) % r_;
    if (ak != 0 && bk != 0) sum += products_[static_cast<std::size_t>(ak * r_ + bk)];
    sawtooth_sum -= sawtooth(make_rational(ak, r_)) * sawtooth(make_rational(bk, r_));
  }
  const Rational lhs = certify_rational(sum, "cotangent double sum") / (4 * r_);
  return {lhs, sawtooth_sum};
}

IdentitySides generalized_dedekind_sum_sides(std::int64_t a, std::int64_t b, int r,
                                             std::vector<std::string>* warnings) {
  require_modulus(r);
  auto reduce = [&](std::int64_t v, const char* name) {
    const std::int64_t red = ((v % r) + r) % r;
    if (red == 0)
      throw Error(ErrorKind::DomainError,
                  std::string(name) + " = " + std::to_string(v) + " is divisible by r = " + std::to_string(r));
    if (red != v && warnings)
      warnings->push_back(std::string(name) + " = " + std::to_string(v) + " reduced mod " + std::to_string(r) +
                          " to " + std::to_string(red));
    return static_cast<int>(red);
  };
  const int ra = reduce(a, "a");
  const int rb = reduce(b, "b");
  return DedekindTable(r).sides(ra, rb);
}

int dedekind_common_divisor(std::int64_t a, std::int64_t b, int r) {
  return static_cast<int>(std::gcd(std::gcd(a, b), static_cast<std::int64_t>(r)));
}

Rational generalized_dedekind_sum(std::int64_t a, std::int64_t b, int r, std::vector<std::string>* warnings) {
  const IdentitySides s = generalized_dedekind_sum_sides(a, b, r, warnings);
  require(s, "generalized Dedekind sum (a, b, r) = (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                 std::to_string(r) + ")");
  return s.closed;
}

SubgroupCotSum subgroup_cot_sum_sides(const DiagonalGroup& h, int i) {
  if (i < 0 || i >= h.dimension())
    throw Error(ErrorKind::InvalidInput, "coordinate " + std::to_string(i + 1) + " out of range");
  const FieldPtr field = CyclotomicField::make(static_cast<int>(h.exponent()));
  const CyclotomicNumber one = CyclotomicNumber::one(field);
  // many elements share an eigenvalue on coordinate i
  std::map<Rational, std::size_t> multiplicity;
  for (const auto& g : h.elements()) ++multiplicity[g.angle(i)];

  CyclotomicNumber cot_sum = CyclotomicNumber::zero(field);
  CyclotomicNumber residue = CyclotomicNumber::zero(field);
  for (const auto& [angle, count] : multiplicity) {
    if (angle == 0) continue;
    const CyclotomicNumber l = embed_root(RootOfUnity(angle), field);
    const CyclotomicNumber inv = (one - l).inverse();
    const CyclotomicNumber weight(field, Rational(static_cast<long>(count)));
    cot_sum -= weight * l * inv * inv;
    residue += weight * (one + l) * inv;
  }
  SubgroupCotSum out;
  out.stabilizer_order = multiplicity.count(Rational(0)) ? multiplicity.at(Rational(0)) : 0;
  out.index = h.order() / out.stabilizer_order;
  const Rational index(static_cast<long>(out.index));
  out.sides = {certify_rational(cot_sum, "subgroup cotangent sum"),
               Rational(static_cast<long>(out.stabilizer_order)) * (index * index - 1) / 12};
  out.residue_sum = certify_rational(residue, "subgroup residue sum");
  return out;
}

Rational subgroup_cot_sum(const DiagonalGroup& h, int i) {
  const SubgroupCotSum s = subgroup_cot_sum_sides(h, i);
  require(s.sides, "subgroup cotangent sum on coordinate " + std::to_string(i + 1));
  if (s.residue_sum != 0)
    throw Error(ErrorKind::ConsistencyFailure,
                "sum of (1+l)/(1-l) on coordinate " + std::to_string(i + 1) + " is " + to_string(s.residue_sum));
  return s.sides.closed;
}

}  // namespace lgvar
