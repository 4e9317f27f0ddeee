#pragma once

#include <stdexcept>

namespace ctcog {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Task algebra.
struct DomainMismatch : Error {
  using Error::Error;
};
struct MultivaluedTranspose : Error {
  using Error::Error;
};
struct ArityError : Error {
  using Error::Error;
};

// Media.
struct NotMeasurable : Error {
  using Error::Error;
};
struct NotPreparable : Error {
  using Error::Error;
};
struct NonBinary : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct NotAMixture : Error {
  using Error::Error;
};
struct ClassicalMediumUnsupported : Error {
  using Error::Error;
};

// Judgement reports.
struct EmptyReport : Error {
  using Error::Error;
};

// Search engine.
struct DimensionError : Error {
  using Error::Error;
};
struct ResourceLimit : Error {
  using Error::Error;
};
struct NoCongruentItems : Error {
  using Error::Error;
};

// Configuration and IO.
struct ConfigInvalid : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace ctcog
