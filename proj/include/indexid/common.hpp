#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace indexid {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Euler-Mascheroni constant, used by the Gumbel closed forms.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Dyadic grids used by the scenario generator. Values drawn on these grids
// make translation and subtraction exact in double precision, which the
// geometry predicates and the shift-equivariance contract rely on.
inline constexpr double kValueLattice = 9.5367431640625e-07;  // 2^-20
inline constexpr double kGeomLattice = 0.015625;              // 2^-6

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown x/z identifier.
struct IdentifierError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Structurally invalid input: bad dimensions, malformed spec, unsupported kind.
struct ConfigError : Error {
  using Error::Error;
};

// Infeasible generator request.
struct GenerationError : Error {
  using Error::Error;
};

// Iterative solver failed to converge; carries the last residual.
struct SolverError : Error {
  SolverError(const std::string& what, double last_residual)
      : Error(what), residual(last_residual) {}
  double residual = 0.0;
};

// Conflicting recovered values for the same x beyond tolerance.
struct InconsistencyError : Error {
  using Error::Error;
};

// Requested value not covered by the recovered supports.
struct CoverageError : Error {
  using Error::Error;
};

// Recovered-h lookup for an x that is not identified.
struct AvailabilityError : Error {
  using Error::Error;
};

// Document format version mismatch.
struct VersionError : Error {
  using Error::Error;
};

}  // namespace indexid
