#pragma once

#include "qlm/lorentz.hpp"

#include <Eigen/Core>

namespace qlm::geometry {

/// p(x) = c + b.x + x^T Q x on R^3, used restricted to the unit sphere.
/// Serves both as a radial profile (geodesic radius as a function of
/// direction) and as a trace profile tr_{g0}(h).
struct SpherePolynomial {
  double constant = 0.0;
  Vec3 linear = Vec3::Zero();
  Eigen::Matrix3d quadratic = Eigen::Matrix3d::Zero();  // symmetrized on use

  double value(const Vec3& x) const;
  Vec3 gradient(const Vec3& x) const;
  Eigen::Matrix3d hessian() const;

  bool is_zero() const;

  static SpherePolynomial constant_value(double c);
};

/// Symmetric 2-tensor h on S^2 of pure-trace form h = (tau / 2) g0, with
/// tau = 2 * g0_multiple + trace_profile. Only tr_{g0}(h) = tau enters the
/// mass and the mean-curvature expansion.
struct AHTensor {
  double g0_multiple = 0.0;
  SpherePolynomial trace_profile;

  double trace(const Vec3& x) const {
    return 2.0 * g0_multiple + trace_profile.value(x);
  }
  bool is_zero() const { return g0_multiple == 0.0 && trace_profile.is_zero(); }

  static AHTensor multiple_of_round(double c) { return {c, {}}; }
  static AHTensor with_trace(const SpherePolynomial& tau) { return {0.0, tau}; }
};

}  // namespace qlm::geometry
