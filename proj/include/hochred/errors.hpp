#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hochred {

/// Base class of every error raised by the engine. `kind()` is the stable
/// identifier used in reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view kind() const noexcept { return "Error"; }
};

#define HOCHRED_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                            \
   public:                                                               \
    using Error::Error;                                                  \
    std::string_view kind() const noexcept override { return #Name; }    \
  }

HOCHRED_DEFINE_ERROR(NonHomogeneousInput);
HOCHRED_DEFINE_ERROR(TwistMismatch);
HOCHRED_DEFINE_ERROR(OutsideValidityWindow);
HOCHRED_DEFINE_ERROR(NotConcentrated);
HOCHRED_DEFINE_ERROR(NotFiniteDimensional);
HOCHRED_DEFINE_ERROR(CoefficientNotFinitelyGenerated);
HOCHRED_DEFINE_ERROR(TooLarge);
HOCHRED_DEFINE_ERROR(PresentationsNotIsomorphic);
HOCHRED_DEFINE_ERROR(InvariantViolation);
HOCHRED_DEFINE_ERROR(UndefinedName);
HOCHRED_DEFINE_ERROR(InvalidArgument);

#undef HOCHRED_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::string_view kind() const noexcept override { return "ParseError"; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace hochred
