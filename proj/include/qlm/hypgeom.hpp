#pragma once

// Hyperbolic space H^3 of curvature -k^2 in two models: the Poincare ball
// (metric (f/k)^2 |dx|^2, f = 2/(1-|x|^2)) and the upper sheet of the
// hyperboloid <X,X> = -1/k^2 in R^{3,1}. Every point carries its k; mixing
// points of different curvature is an error.

#include "qlm/lorentz.hpp"

namespace qlm {

namespace geometry {
class SurfaceData;
}

class BallPoint {
 public:
  /// Throws DomainError unless |x| < 1 and k > 0.
  BallPoint(const Vec3& x, double k = 1.0);

  const Vec3& coords() const noexcept { return x_; }
  double k() const noexcept { return k_; }

 private:
  Vec3 x_;
  double k_;
};

class HyperboloidPoint {
 public:
  /// Throws InvariantError unless X lies on the upper sheet for curvature k
  /// (relative tolerance 1e-12).
  HyperboloidPoint(const LorentzVector& X, double k = 1.0);

  const LorentzVector& position() const noexcept { return X_; }
  double k() const noexcept { return k_; }

  /// The base point o = (0, 0, 0, 1/k).
  static HyperboloidPoint origin(double k = 1.0);

 private:
  LorentzVector X_;
  double k_;
};

/// f(x) = 2 / (1 - |x|^2); DomainError when |x| >= 1.
double conformal_factor(const Vec3& x);
double conformal_factor(const BallPoint& p);

/// X = (f x, f - 1) / k
HyperboloidPoint ball_to_hyperboloid(const BallPoint& p);

/// x = k X_s / (1 + k t)
BallPoint hyperboloid_to_ball(const HyperboloidPoint& X);

/// Hyperbolic distance (1/k) arcosh(-k^2 <X, Y>).
double geodesic_distance(const HyperboloidPoint& X, const HyperboloidPoint& Y);

struct RadialBounds {
  double inner;  // R1: largest ball about the center inside the domain
  double outer;  // R2: smallest ball about the center containing it
};

/// Min and max geodesic distance from `center` over the quadrature nodes of
/// the surface's hyperbolic embedding. MissingEmbedding if it has none.
RadialBounds radial_bounds(const geometry::SurfaceData& surface,
                           const HyperboloidPoint& center);

}  // namespace qlm
