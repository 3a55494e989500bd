#pragma once

#include <stdexcept>
#include <string>

namespace coxlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic between Q(sqrt d1) and Q(sqrt d2) with d1 != d2, both irrational.
struct MixedFieldError : Error {
  using Error::Error;
};

struct NonIntegerCoefficient : Error {
  using Error::Error;
};

struct NonIntegerRoots : Error {
  using Error::Error;
};

struct InvalidType : Error {
  using Error::Error;
};

struct NoMatrixModel : Error {
  using Error::Error;
};

struct GroupTooLarge : Error {
  using Error::Error;
};

struct DegreeExtractionError : Error {
  using Error::Error;
};

// A structural identity that must hold failed on concrete data.
struct PropertyViolation : Error {
  using Error::Error;
};

}  // namespace coxlab
