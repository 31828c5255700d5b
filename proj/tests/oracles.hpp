#pragma once
// Independent reference computations used by the tests. They avoid the library's series,
// cyclotomic and averaging code paths on purpose.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lgvar/group.hpp"
#include "lgvar/rational.hpp"

namespace oracle {

using lgvar::Rational;

// For f = sum x_i^{a_i} the state space of sector g is spanned by x^k dx_F, 0 <= k_i <= a_i - 2
// over the fixed coordinates F, kept when sum_{i in F} (k_i + 1) angle_i(h) is an integer for
// every h. Such a form sits at tbar/t exponent e = sum ((k_i + 1)/a_i - 1/2) in a sector shifted
// by age(g) - (n - n_g)/2, with sign (-1)^{n - n_g}.
inline std::map<std::pair<Rational, Rational>, std::int64_t> bp_e_function(const std::vector<int>& a,
                                                                          const lgvar::DiagonalGroup& group) {
  const int n = static_cast<int>(a.size());
  std::map<std::pair<Rational, Rational>, std::int64_t> out;
  for (const auto& g : group.elements()) {
    std::vector<int> fixed;
    Rational age(0);
    for (int i = 0; i < n; ++i) {
      age += g.angles()[static_cast<std::size_t>(i)];
      if (g.angles()[static_cast<std::size_t>(i)] == 0) fixed.push_back(i);
    }
    const int nf = static_cast<int>(fixed.size());
    Rational shift = age - Rational(n - nf, 2);
    shift.canonicalize();
    const std::int64_t sign = (n - nf) % 2 ? -1 : 1;
    std::vector<int> k(fixed.size(), 0);
    bool more = true;
    while (more) {
      bool invariant = true;
      for (const auto& h : group.elements()) {
        Rational phase(0);
        for (std::size_t j = 0; j < fixed.size(); ++j)
          phase += (k[j] + 1) * h.angles()[static_cast<std::size_t>(fixed[j])];
        if (phase.get_den() != 1) {
          invariant = false;
          break;
        }
      }
      if (invariant) {
        Rational e(0);
        for (std::size_t j = 0; j < fixed.size(); ++j)
          e += Rational(k[j] + 1, a[static_cast<std::size_t>(fixed[j])]) - Rational(1, 2);
        Rational lo = shift - e, hi = shift + e;
        lo.canonicalize();
        hi.canonicalize();
        auto& slot = out[{lo, hi}];
        slot += sign;
        if (slot == 0) out.erase({lo, hi});
      }
      std::size_t j = 0;
      while (j < k.size() && ++k[j] > a[static_cast<std::size_t>(fixed[j])] - 2) k[j++] = 0;
      more = j < k.size();
    }
  }
  return out;
}

// Classical spectrum of sum x_i^{a_i}: sum_i (k_i + 1)/a_i, 0 <= k_i <= a_i - 2.
inline std::map<Rational, std::int64_t> bp_exponents(const std::vector<int>& a) {
  std::map<Rational, std::int64_t> out{{Rational(0), 1}};
  for (int ai : a) {
    std::map<Rational, std::int64_t> next;
    for (const auto& [q, m] : out)
      for (int k = 1; k < ai; ++k) {
        Rational v = q + Rational(k, ai);
        v.canonicalize();
        next[v] += m;
      }
    out = std::move(next);
  }
  return out;
}

// ((p/q)) with integer arithmetic only.
inline Rational sawtooth(std::int64_t p, std::int64_t q) {
  const std::int64_t r = ((p % q) + q) % q;
  if (r == 0) return Rational(0);
  Rational v(static_cast<long>(2 * r - q), static_cast<long>(2 * q));
  v.canonicalize();
  return v;
}

// sum_k 1/(4 sin^2(pi k / r)), the real form of -sum z^k/(1-z^k)^2.
inline long double cot_square_sum_numeric(int r) {
  const long double pi = std::acos(-1.0L);
  long double s = 0;
  for (int k = 1; k < r; ++k) {
    const long double sn = std::sin(pi * k / r);
    s += 1 / (4 * sn * sn);
  }
  return s;
}

// (1/4r) sum (i cot)(i cot) = -(1/4r) sum cot(pi a k/r) cot(pi b k/r).
inline long double dedekind_cot_numeric(int a, int b, int r) {
  const long double pi = std::acos(-1.0L);
  long double s = 0;
  for (int k = 1; k < r; ++k) {
    if ((a * k) % r == 0 || (b * k) % r == 0) continue;
    s -= 1 / std::tan(pi * a * k / r) / std::tan(pi * b * k / r);
  }
  return s / (4 * r);
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace oracle
