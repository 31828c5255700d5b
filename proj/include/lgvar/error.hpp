#pragma once

#include <stdexcept>
#include <string>

namespace lgvar {

enum class ErrorKind {
  InvalidInput,
  SyntaxError,
  NotWeightedHomogeneous,
  AmbiguousWeights,
  InvalidWeight,
  InvalidWeightSystem,
  NotSpecialLinear,
  GroupTooLarge,
  IncompatibleModulus,
  DivisionByZero,
  NotRational,
  TruncationViolation,
  AveragingFailure,
  InvarianceViolation,
  NonHyperbolic,
  DomainError,
  ConsistencyFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lgvar
