#include <doctest.h>

#include <random>

#include "lgvar/error.hpp"
#include "lgvar/qseries.hpp"

using namespace lgvar;

namespace {

const Rational half(1, 2);

// naive product of two explicit term lists, truncated at hi
std::map<Rational, Rational> naive_product(const std::map<Rational, Rational>& a, const std::map<Rational, Rational>& b,
                                           const Rational& hi) {
  std::map<Rational, Rational> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      if (ea + eb <= hi) out[ea + eb] += ca * cb;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("trivial-eigenvalue factor for w = 1/a is a finite polynomial") {
  // (y^{1/2} - y^{w-1/2}) / (1 - y^w) = -sum_{j=1}^{a-1} y^{j/a - 1/2}
  for (int a = 2; a <= 9; ++a) {
    const Rational w(1, a);
    auto s = expand_geometric_factor(half, w - half, RootOfUnity(Rational(0)), w, w - half - 1, Rational(3),
                                     RationalRing{});
    const auto p = finite_part_check(s, w - half, half - w);
    CHECK(p.size() == static_cast<std::size_t>(a - 1));
    for (int j = 1; j < a; ++j) CHECK(p.coefficient(Rational(j, a) - half, Rational(0)) == -1);
  }
}

TEST_CASE("eigenvalue factor with lambda^a = 1 is finite over Q(zeta)") {
  const int a = 6;
  const Rational w(1, a);
  const CyclotomicRing ring{CyclotomicField::make(a)};
  for (int k = 0; k < a; ++k) {
    const RootOfUnity lambda(make_rational(k, a));
    auto s = expand_geometric_factor(half, w - half, lambda, w, w - half - 1, Rational(2), ring);
    for (std::int64_t i = s.lo(); i <= s.hi(); ++i) {
      const Rational e = make_rational(i, s.den());
      if (e < w - half || e > half - w) CHECK(s.at(i).is_zero());
    }
  }
}

TEST_CASE("series_mul agrees with the naive product on its window") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<Rational, Rational> ta, tb;
    std::vector<std::pair<Rational, Rational>> la, lb;
    const int da = 1 + static_cast<int>(rng() % 4), db = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < 6; ++k) {
      const Rational ea = make_rational(static_cast<int>(rng() % 12), da);
      const Rational eb = make_rational(static_cast<int>(rng() % 12), db);
      const Rational ca(static_cast<int>(rng() % 5) - 2), cb(static_cast<int>(rng() % 5) - 2);
      ta[ea] += ca;
      tb[eb] += cb;
      la.emplace_back(ea, ca);
      lb.emplace_back(eb, cb);
    }
    const auto sa = TruncatedSeries<Rational>::from_terms(Rational(0), Rational(12), la, Rational(0));
    const auto sb = TruncatedSeries<Rational>::from_terms(Rational(0), Rational(12), lb, Rational(0));
    const auto prod = series_mul(sa, sb);
    CHECK(prod.upper() == 12);
    const auto expected = naive_product(ta, tb, Rational(12));
    for (std::int64_t k = prod.lo(); k <= prod.hi(); ++k) {
      const Rational e = make_rational(k, prod.den());
      const auto it = expected.find(e);
      CHECK(prod.at(k) == (it == expected.end() ? Rational(0) : it->second));
    }
  }
}

TEST_CASE("finite_part_check rejects tails, short windows and irrational coefficients") {
  auto s = TruncatedSeries<Rational>::from_terms(Rational(-2), Rational(2), {{Rational(1), Rational(3)}}, Rational(0));
  CHECK_NOTHROW(finite_part_check(s, Rational(-1), Rational(1)));
  try {
    finite_part_check(s, Rational(-1), Rational(1, 2));
    FAIL("expected a truncation violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationViolation);
  }
  CHECK_THROWS_AS(finite_part_check(s, Rational(-1), Rational(3, 2)), Error);

  const FieldPtr f = CyclotomicField::make(3);
  TruncatedSeries<CyclotomicNumber> c(1, -2, 2, CyclotomicNumber::zero(f));
  c.add(0, embed_root(RootOfUnity(Rational(1, 3)), f));
  try {
    finite_part_check(c, Rational(-1), Rational(1));
    FAIL("expected an averaging failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AveragingFailure);
  }
}

TEST_CASE("two-variable Laurent polynomials") {
  FracLaurent2 p;
  p.add_term(Rational(1, 2), Rational(-1, 2), 1);
  p.add_term(Rational(-1, 2), Rational(1, 2), 1);
  p.add_term(Rational(1, 3), Rational(0), 2);
  CHECK(p.evaluate_at_one() == 4);
  CHECK(p.swapped().swapped() == p);
  CHECK(p.inverted().inverted() == p);
  CHECK_FALSE(p.swapped() == p);
  p.add_term(Rational(1, 3), Rational(0), -2);
  CHECK(p.swapped() == p);
  CHECK(p.inverted() == p);
}

TEST_CASE("one-variable Laurent polynomial products") {
  FracLaurent1<Rational> a, b;
  a.add_term(Rational(1, 2), Rational(1));
  a.add_term(Rational(-1, 2), Rational(-1));
  b.add_term(Rational(1, 2), Rational(1));
  b.add_term(Rational(-1, 2), Rational(1));
  const auto p = a * b;  // y - 1/y
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Rational(1), Rational(0)) == 1);
  CHECK(p.coefficient(Rational(-1), Rational(0)) == -1);
  CHECK(evaluate_at_one(p, Rational(0)) == 0);
}
