#ifndef INVCONN_ERRORS_HPP
#define INVCONN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invconn {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct DivideByZeroError : Error {
  using Error::Error;
};

struct NonSquareError : Error {
  using Error::Error;
};

struct SizeMismatchError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

struct BasisMismatchError : Error {
  using Error::Error;
};

struct NotValidatedError : Error {
  using Error::Error;
};

struct LocallySymmetricError : Error {
  using Error::Error;
};

struct NotLieGroupCaseError : Error {
  using Error::Error;
};

struct NotPositiveDefiniteError : Error {
  using Error::Error;
};

struct UnknownExampleError : Error {
  using Error::Error;
};

struct MissingMetricError : Error {
  using Error::Error;
};

/// Raised when a computed tensor contradicts an identity the theory
/// guarantees; indicates a bug in the engine, never bad user input.
struct InternalCheckError : Error {
  using Error::Error;
};

/// Input-format error; `field` is a path such as "brackets[2].coeffs.3".
struct ParseError : Error {
  std::string field;
  ParseError(const std::string& message, std::string field_path = {})
      : Error(field_path.empty() ? message : message + " (at " + field_path + ")"),
        field(std::move(field_path)) {}
};

}  // namespace invconn

#endif
