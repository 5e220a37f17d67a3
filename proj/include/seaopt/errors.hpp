#ifndef SEAOPT_ERRORS_HPP_
#define SEAOPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace seaopt {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- task / parameter validation ------------------------------------------

struct NonPositivePeriod : Error {
  using Error::Error;
};
struct OverlappingRestWindows : Error {
  using Error::Error;
};
struct DegenerateWindow : Error {
  using Error::Error;
};
struct InvalidParameter : Error {
  using Error::Error;
};

// -- jet arithmetic ---------------------------------------------------------

struct DivisionByZeroJet : Error {
  using Error::Error;
};

// -- mechanism / kinematics -------------------------------------------------

struct NonPositiveStiffness : Error {
  using Error::Error;
};
struct OutOfWorkspace : Error {
  using Error::Error;
};
struct NearSingular : Error {
  using Error::Error;
};
struct NoIntersection : Error {
  using Error::Error;
};
struct BranchMismatch : Error {
  using Error::Error;
};
struct SingularJacobian : Error {
  using Error::Error;
};
struct SingularReducedCoupling : Error {
  using Error::Error;
};
struct IntegrationDiverged : Error {
  using Error::Error;
};

// -- energy / quadrature ------------------------------------------------------

struct EmptyGrid : Error {
  using Error::Error;
};

// -- transcription / solve ----------------------------------------------------

struct InfeasibleWindows : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct EvaluationDomainError : Error {
  using Error::Error;
};
struct NoSuccessfulPoints : Error {
  using Error::Error;
};
struct AllStartsFailed : Error {
  using Error::Error;
};

// -- configuration files -------------------------------------------------------

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace seaopt

#endif  // SEAOPT_ERRORS_HPP_
