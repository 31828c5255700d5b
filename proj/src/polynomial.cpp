#include "lgvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lgvar/error.hpp"

namespace lgvar {

PolynomialExpr::PolynomialExpr(int n, std::vector<Monomial> monomials) : n_(n), monomials_(std::move(monomials)) {
  std::map<std::vector<int>, Rational> merged;
  for (auto& m : monomials_) {
    m.exponents.resize(static_cast<std::size_t>(n_), 0);
    merged[m.exponents] += m.coefficient;
  }
  monomials_.clear();
  for (auto& [e, c] : merged)
    if (c != 0) monomials_.push_back({c, e});
  if (monomials_.empty()) throw Error(ErrorKind::InvalidInput, "polynomial is identically zero");
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolynomialExpr parse() {
    std::vector<Monomial> terms;
    int n = 0;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Monomial m = parse_term(n);
      m.coefficient *= sign;
      terms.push_back(std::move(m));
      skip_space();
    }
    return PolynomialExpr(n, std::move(terms));
  }

 private:
  Monomial parse_term(int& n) {
    Monomial m{Rational(1), {}};
    parse_factor(m, n);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      parse_factor(m, n);
      skip_space();
    }
    return m;
  }

  void parse_factor(Monomial& m, int& n) {
    if (at_end()) fail("unexpected end of input");
    if (peek() == 'x') {
      ++pos_;
      const int index = static_cast<int>(parse_unsigned("variable index"));
      if (index < 1) fail("variable indices start at 1");
      if (index > kMaxDimension) fail("too many variables");
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        power = static_cast<int>(parse_unsigned("exponent"));
      }
      if (static_cast<int>(m.exponents.size()) < index) m.exponents.resize(static_cast<std::size_t>(index), 0);
      m.exponents[static_cast<std::size_t>(index - 1)] += power;
      n = std::max(n, index);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(std::to_string(parse_unsigned("coefficient")));
      Integer den(1);
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        den = Integer(std::to_string(parse_unsigned("denominator")));
        if (den == 0) fail("zero denominator");
      }
      Rational c(num, den);
      c.canonicalize();
      m.coefficient *= c;
      return;
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  unsigned long parse_unsigned(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    if (pos_ - start > 9) fail(std::string(what) + " too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, "position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct LinearSolution {
  bool consistent = true;
  std::vector<int> free;
  std::vector<Rational> values;
};

// Solves sum_i m_i w_i = 1 for each monomial by Gauss-Jordan elimination.
LinearSolution solve_weights(const PolynomialExpr& f) {
  const int n = f.variables();
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : f.monomials()) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) row[i] = m.exponents[i];
    row[n] = 1;
    rows.push_back(std::move(row));
  }
  LinearSolution sol;
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / Rational(rows[r][c]);
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const Rational factor = rows[q][c];
      for (int k = 0; k <= n; ++k) rows[q][k] -= factor * rows[r][k];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows.size(); ++q)
    if (rows[q][n] != 0) sol.consistent = false;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) sol.free.push_back(c);
  sol.values.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t q = 0; q < pivot_col_of_row.size(); ++q) sol.values[pivot_col_of_row[q]] = rows[q][n];
  return sol;
}

}  // namespace

PolynomialExpr parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const PolynomialExpr& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& m : f.monomials()) {
    Rational c = m.coefficient;
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    bool wrote = false;
    if (c != 1) {
      out << to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      out << (wrote ? "*" : "") << "x" << (i + 1);
      if (m.exponents[i] != 1) out << "^" << m.exponents[i];
      wrote = true;
    }
    if (!wrote) out << "1";
    first = false;
  }
  return out.str();
}

WeightSystem::WeightSystem(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty() || static_cast<int>(weights_.size()) > kMaxDimension)
    throw Error(ErrorKind::InvalidInput, "weight system must have 1.." + std::to_string(kMaxDimension) + " entries");
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] <= 0 || weights_[i] >= 1)
      throw Error(ErrorKind::InvalidWeight,
                  "weight w_" + std::to_string(i + 1) + " = " + to_string(weights_[i]) + " is not in (0,1)");
}

std::int64_t WeightSystem::step_denominator() const {
  std::int64_t d = 2;
  for (const auto& w : weights_) d = lcm_int64(d, to_int64(Integer(w.get_den())));
  return d;
}

std::vector<std::string> WeightSystem::warnings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] * 2 > 1)
      out.push_back("weight w_" + std::to_string(i + 1) + " = " + to_string(weights_[i]) + " exceeds 1/2");
  return out;
}

WeightSystem brieskorn_pham_weights(const std::vector<int>& exponents) {
  std::vector<Rational> w;
  for (int a : exponents) w.push_back(make_rational(1, a));
  return WeightSystem(std::move(w));
}

WeightSystem infer_weights(const PolynomialExpr& f) {
  const LinearSolution sol = solve_weights(f);
  if (!sol.consistent)
    throw Error(ErrorKind::NotWeightedHomogeneous, "no weights make every monomial of degree 1: " + to_string(f));
  if (!sol.free.empty()) {
    std::string coords;
    for (int c : sol.free) coords += (coords.empty() ? "x" : ", x") + std::to_string(c + 1);
    throw Error(ErrorKind::AmbiguousWeights, "weights are not determined by the monomials; free coordinates: " + coords);
  }
  return WeightSystem(sol.values);
}

std::vector<int> free_weight_coordinates(const PolynomialExpr& f) { return solve_weights(f).free; }

void verify_weights(const PolynomialExpr& f, const WeightSystem& w) {
  if (f.variables() > w.size())
    throw Error(ErrorKind::InvalidInput, "polynomial uses " + std::to_string(f.variables()) + " variables but " +
                                             std::to_string(w.size()) + " weights were given");
  for (const auto& m : f.monomials()) {
    Rational deg(0);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) deg += m.exponents[i] * w[static_cast<int>(i)];
    if (deg != 1)
      throw Error(ErrorKind::NotWeightedHomogeneous,
                  "monomial of " + to_string(f) + " has weighted degree " + to_string(deg) + ", expected 1");
  }
}

InvarianceReport check_invariance(const PolynomialExpr& f, const DiagonalGroup& group) {
  InvarianceReport report;
  for (const auto& g : group.elements()) {
    for (const auto& m : f.monomials()) {
      Rational phase(0);
      for (std::size_t i = 0; i < m.exponents.size() && i < g.angles().size(); ++i)
        phase += m.exponents[i] * g.angles()[i];
      if (!is_integer(phase)) {
        report.ok = false;
        report.element = g;
        report.monomial = m;
        std::string desc;
        for (const auto& a : g.angles()) desc += (desc.empty() ? "" : ",") + to_string(a);
        report.message = "element (" + desc + ") multiplies a monomial by e[" + to_string(frac(phase)) + "]";
        return report;
      }
    }
  }
  return report;
}

void ExponentMultiset::add(const Rational& q, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(q, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t ExponentMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& [q, m] : entries_) t += m;
  return t;
}

std::int64_t ExponentMultiset::multiplicity(const Rational& q) const {
  auto it = entries_.find(q);
  return it == entries_.end() ? 0 : it->second;
}

Rational ExponentMultiset::first_moment() const {
  Rational s(0);
  for (const auto& [q, m] : entries_) s += q * m;
  return s;
}

Rational ExponentMultiset::central_second_moment(const Rational& center) const {
  Rational s(0);
  for (const auto& [q, m] : entries_) {
    const Rational d = q - center;
    s += d * d * m;
  }
  return s;
}

ProductPlan plan_factor_product(const std::vector<Rational>& weights) {
  ProductPlan plan;
  Rational sum(0);
  for (const auto& w : weights) sum += w;
  const Rational half_m = make_rational(static_cast<std::int64_t>(weights.size()), 2);
  plan.support_lo = sum - half_m;
  plan.support_hi = half_m - sum;
  const Rational half(1, 2);
  // factor i starts at w_i - 1/2; the first one is widened by 1 to give the lower guard band
  std::vector<Rational> lows;
  for (std::size_t i = 0; i < weights.size(); ++i) lows.push_back(weights[i] - half - (i == 0 ? 1 : 0));
  Rational lows_sum(0);
  for (const auto& l : lows) lows_sum += l;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Rational others = lows_sum - lows[i];
    plan.factor_windows.emplace_back(lows[i], plan.support_hi + 1 - others);
  }
  return plan;
}

std::int64_t milnor_number_trivial(const WeightSystem& w) {
  Rational mu(1);
  for (const auto& wi : w.weights()) mu *= (1 - 1 / wi);
  if (w.size() % 2) mu = -mu;
  if (!is_integer(mu) || mu <= 0)
    throw Error(ErrorKind::InvalidWeightSystem,
                "(-1)^n prod(1 - 1/w_i) = " + to_string(mu) + " is not a positive integer; no isolated singularity has these weights");
  return to_int64(mu);
}

FracLaurent1<Rational> shifted_exponent_polynomial(const WeightSystem& w) {
  const ProductPlan plan = plan_factor_product(w.weights());
  const Rational half(1, 2);
  const RationalRing ring;
  const RootOfUnity one;
  std::optional<TruncatedSeries<Rational>> product;
  for (int i = 0; i < w.size(); ++i) {
    const auto& [lo, hi] = plan.factor_windows[static_cast<std::size_t>(i)];
    auto factor = expand_geometric_factor(half, w[i] - half, one, w[i], lo, hi, ring);
    product = product ? series_mul(*product, factor) : factor;
  }
  FracLaurent1<Rational> poly = finite_part_check(*product, plan.support_lo, plan.support_hi);
  if (w.size() % 2) {
    FracLaurent1<Rational> negated;
    for (const auto& [e, c] : poly.terms()) negated.add_term(e, -c);
    poly = negated;
  }
  return poly;
}

ExponentMultiset exponents_trivial(const WeightSystem& w) {
  const FracLaurent1<Rational> poly = shifted_exponent_polynomial(w);
  const Rational shift = make_rational(w.size(), 2);
  ExponentMultiset out;
  for (const auto& [e, c] : poly.terms()) out.add(e + shift, to_int64(c));
  return out;
}

Rational c_hat(const WeightSystem& w) {
  Rational s(w.size());
  for (const auto& wi : w.weights()) s -= 2 * wi;
  return s;
}

}  // namespace lgvar
