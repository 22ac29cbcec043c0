#pragma once

#include <stdexcept>
#include <string>

namespace qp {

enum class ErrorKind {
  InvalidRing,
  MixedRings,
  DivisionByZero,
  ZeroElement,
  ZeroInput,
  NotPrime,
  OddExponent,
  TooLarge,
  PreconditionFailed,
  Thm23Violation,
  TheoremViolation,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qp
