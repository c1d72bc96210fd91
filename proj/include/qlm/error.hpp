#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlm {

// Every failure the library reports derives from Error, so callers that only
// care about "did the computation succeed" can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value violates an invariant of its type (off-sheet point, NaN component).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ChartBoundary : public Error {
 public:
  using Error::Error;
};

class DegenerateImmersion : public Error {
 public:
  using Error::Error;
};

class MissingEmbedding : public Error {
 public:
  using Error::Error;
};

class NotNull : public Error {
 public:
  using Error::Error;
};

class CalibrationFailure : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

class NonPositiveMeanCurvature : public Error {
 public:
  NonPositiveMeanCurvature(std::size_t node, double theta, double phi,
                           double value)
      : Error("mean curvature " + std::to_string(value) + " <= 0 at node " +
              std::to_string(node) + " (theta=" + std::to_string(theta) +
              ", phi=" + std::to_string(phi) + ")"),
        node_(node),
        theta_(theta),
        phi_(phi),
        value_(value) {}

  std::size_t node() const noexcept { return node_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t node_;
  double theta_;
  double phi_;
  double value_;
};

class IsometryViolation : public Error {
 public:
  IsometryViolation(double relative_mismatch, double tolerance)
      : Error("induced metrics of the immersion and the hyperbolic embedding "
              "differ by " +
              std::to_string(relative_mismatch) + " (relative), tolerance " +
              std::to_string(tolerance)),
        mismatch_(relative_mismatch) {}

  double mismatch() const noexcept { return mismatch_; }

 private:
  double mismatch_;
};

}  // namespace qlm
