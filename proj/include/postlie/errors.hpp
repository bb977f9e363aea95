#pragma once

#include <stdexcept>
#include <string>

namespace postlie {

/// Base class for every error raised on malformed or out-of-contract input.
/// The CLI maps all of these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define POSTLIE_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* kind() const noexcept override { return #Name; }        \
  }

POSTLIE_DEFINE_ERROR(InputShapeError);
POSTLIE_DEFINE_ERROR(NotASubspaceError);
POSTLIE_DEFINE_ERROR(UncertifiedInputError);
POSTLIE_DEFINE_ERROR(NotClosedError);
POSTLIE_DEFINE_ERROR(SectionError);
POSTLIE_DEFINE_ERROR(CoordinateError);
POSTLIE_DEFINE_ERROR(NotHPreservingError);
POSTLIE_DEFINE_ERROR(NotAutomorphismError);
POSTLIE_DEFINE_ERROR(WitnessInvalidError);
POSTLIE_DEFINE_ERROR(IncompatiblePairError);
POSTLIE_DEFINE_ERROR(NotACocycleError);
POSTLIE_DEFINE_ERROR(SchemaError);

#undef POSTLIE_DEFINE_ERROR

/// Malformed text; carries the 1-based line and column of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace postlie
