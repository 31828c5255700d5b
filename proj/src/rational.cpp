#include "lgvar/rational.hpp"

#include <cctype>
#include <numeric>

#include "lgvar/error.hpp"

namespace lgvar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::SyntaxError: return "syntax-error";
    case ErrorKind::NotWeightedHomogeneous: return "not-weighted-homogeneous";
    case ErrorKind::AmbiguousWeights: return "ambiguous-weights";
    case ErrorKind::InvalidWeight: return "invalid-weight";
    case ErrorKind::InvalidWeightSystem: return "invalid-weight-system";
    case ErrorKind::NotSpecialLinear: return "not-special-linear";
    case ErrorKind::GroupTooLarge: return "group-too-large";
    case ErrorKind::IncompatibleModulus: return "incompatible-modulus";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotRational: return "not-rational";
    case ErrorKind::TruncationViolation: return "truncation-bound-violation";
    case ErrorKind::AveragingFailure: return "averaging-failure";
    case ErrorKind::InvarianceViolation: return "invariance-violation";
    case ErrorKind::NonHyperbolic: return "non-hyperbolic";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::ConsistencyFailure: return "consistency-failure";
  }
  return "unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r{Integer{std::string(num)}, d};
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorKind::DomainError, "integer out of int64 range: " + x.get_str());
  return x.get_si();
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw Error(ErrorKind::NotRational, "expected an integer, got " + to_string(x));
  return to_int64(x.get_num());
}

std::int64_t lcm_int64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace lgvar
