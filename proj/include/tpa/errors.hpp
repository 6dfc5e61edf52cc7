#ifndef TPA_ERRORS_HPP
#define TPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpa {

// Base class of all library errors. Every failure mode has its own type so
// callers can react to (and tests can assert on) the precise condition.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define TPA_DEFINE_ERROR(NAME, KIND)                                \
  class NAME : public Error {                                       \
   public:                                                          \
    explicit NAME(const std::string& what) : Error(KIND, what) {}   \
  }

TPA_DEFINE_ERROR(FieldMismatchError, "FieldMismatch");
TPA_DEFINE_ERROR(DivisionByZeroError, "DivisionByZero");
TPA_DEFINE_ERROR(ParseError, "ParseError");
TPA_DEFINE_ERROR(DimensionMismatchError, "DimensionMismatch");
TPA_DEFINE_ERROR(NotSquareError, "NotSquare");
TPA_DEFINE_ERROR(UnsupportedFieldError, "UnsupportedField");
TPA_DEFINE_ERROR(CapExceededError, "CapExceeded");
TPA_DEFINE_ERROR(NotADerivationError, "NotADerivation");
TPA_DEFINE_ERROR(NotAnIdealError, "NotAnIdeal");
TPA_DEFINE_ERROR(NotASubalgebraError, "NotASubalgebra");
TPA_DEFINE_ERROR(UnknownNameError, "UnknownName");
TPA_DEFINE_ERROR(NotIdempotentError, "NotIdempotent");
TPA_DEFINE_ERROR(InvalidAlgebraError, "InvalidAlgebra");
TPA_DEFINE_ERROR(UnsupportedError, "Unsupported");
TPA_DEFINE_ERROR(VerificationFailedError, "VerificationFailed");

#undef TPA_DEFINE_ERROR

}  // namespace tpa

#endif  // TPA_ERRORS_HPP
