#include "lgvar/qseries.hpp"

namespace lgvar {

Rational RationalRing::root(const RootOfUnity& r) const {
  if (r.is_one()) return Rational(1);
  if (r.angle() == Rational(1, 2)) return Rational(-1);
  throw Error(ErrorKind::NotRational, "root of unity e[" + to_string(r.angle()) + "] is not rational");
}

RootSum RootSumRing::root(const RootOfUnity& r) const {
  const std::int64_t order = r.order();
  if (modulus % order != 0)
    throw Error(ErrorKind::IncompatibleModulus, "root of order " + std::to_string(order) +
                                                    " is not an " + std::to_string(modulus) + "-th root of unity");
  const std::int64_t k = to_int64(Integer(r.angle().get_num())) * (modulus / order);
  return RootSum::monomial(modulus, static_cast<int>(k % modulus));
}

void FracLaurent2::add_term(const Rational& et, const Rational& etbar, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{et, etbar}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FracLaurent2 FracLaurent2::swapped() const {
  FracLaurent2 out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

FracLaurent2 FracLaurent2::inverted() const {
  FracLaurent2 out;
  for (const auto& [k, c] : terms_) out.add_term(-k.first, -k.second, c);
  return out;
}

std::int64_t FracLaurent2::evaluate_at_one() const {
  std::int64_t sum = 0;
  for (const auto& [k, c] : terms_) sum += c;
  return sum;
}

}  // namespace lgvar
