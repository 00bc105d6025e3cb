#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace grpd {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Tolerance for treating user-given base points as equal (composability,
// chain detection). Flow-derived quantities use the looser tol_base.
inline constexpr double kEpsMatch = 1e-9;

// Default fixed RK4 step for time-1 flows.
inline constexpr double kDefaultStep = 1e-3;

inline constexpr double kDefaultTolBase = 1e-6;
inline constexpr double kDefaultTolFiber = 1e-8;

enum class Family { pair, frame, action };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument values (radii, dimensions, malformed inputs).
struct ParamError : Error {
  using Error::Error;
};

// Tube radius too large for the curve geometry.
struct ReachError : Error {
  using Error::Error;
};

// Curve self-intersects.
struct InjectivityError : Error {
  using Error::Error;
};

// Path planning failed (budget exhausted, region too tight, dim too low).
struct PlanError : Error {
  using Error::Error;
};

// Family mismatch or non-composable pair.
struct ComposeError : Error {
  using Error::Error;
};

// Fiber matrix singular or ill-conditioned, or gauge ball does not fit.
struct GaugeError : Error {
  using Error::Error;
};

// Source/target multiplicity violation for multi-point requests.
struct ConcordanceError : Error {
  ConcordanceError(const std::string& msg, int i_, int j_)
      : Error(msg), i(i_), j(j_) {}
  int i = -1;
  int j = -1;
};

}  // namespace grpd
