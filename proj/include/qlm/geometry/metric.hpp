#pragma once

#include "qlm/geometry/profile.hpp"
#include "qlm/lorentz.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string_view>

namespace qlm::geometry {

using Mat3 = Eigen::Matrix3d;

enum class MetricKind {
  Euclidean,
  HyperbolicBall,
  AdSSchwarzschild,
  WangAH,
  UserDefined,
};

std::string_view to_string(MetricKind k) noexcept;

enum class ChartKind {
  Cartesian,  // (x1, x2, x3)
  Spherical,  // (r, theta, phi)
};

/// Riemannian 3-metric on a single coordinate chart.
///
/// Builtins:
///  - Euclidean: delta_ij on R^3.
///  - HyperbolicBall(k): (f/k)^2 delta_ij on |x| < 1, f = 2/(1 - |x|^2).
///  - AdSSchwarzschild(m, k): dr^2/V + r^2 g0 with V = 1 + k^2 r^2 - 2m/r,
///    written in Cartesian coordinates, r > r_horizon + margin.
///  - WangAH(h, e): sinh^-2(r) (dr^2 + g0 + r^3/3 h + e) in (r, theta, phi)
///    for h = (tau/2) g0 and e = e_scale r^4 g0.
class MetricField {
 public:
  using ComponentFn = std::function<Mat3(const Vec3&)>;
  using ScalarFn = std::function<double(const Vec3&)>;

  struct Definition {
    MetricKind kind = MetricKind::UserDefined;
    ChartKind chart = ChartKind::Cartesian;
    ComponentFn components;
    /// Coordinate distance to the chart boundary; positive inside.
    ScalarFn margin;
    /// Length scale that the finite-difference step is measured against.
    ScalarFn local_scale;
    /// Analytic scalar curvature, when known.
    std::optional<ScalarFn> scalar_curvature;
  };

  explicit MetricField(Definition def);

  static MetricField euclidean();
  static MetricField hyperbolic_ball(double k);
  static MetricField ads_schwarzschild(double m, double k,
                                       double horizon_margin = 1e-2);
  static MetricField wang_ah(const AHTensor& h, double e_scale = 0.0);

  /// g_ij(p). Throws ChartBoundary outside the chart and InvariantError when
  /// the matrix is not symmetric positive definite.
  Mat3 components(const Vec3& p) const;

  double chart_margin(const Vec3& p) const { return def_.margin(p); }
  double local_scale(const Vec3& p) const { return def_.local_scale(p); }
  std::optional<double> analytic_scalar_curvature(const Vec3& p) const;

  MetricKind kind() const noexcept { return def_.kind; }
  ChartKind chart() const noexcept { return def_.chart; }

  /// Parameters of the builtins (zero where not applicable).
  double curvature_scale() const noexcept { return k_; }
  double mass_parameter() const noexcept { return m_; }
  const AHTensor& ah_tensor() const noexcept { return h_; }
  double e_scale() const noexcept { return e_scale_; }

 private:
  Definition def_;
  double k_ = 0.0;
  double m_ = 0.0;
  AHTensor h_;
  double e_scale_ = 0.0;
};

/// Largest root of k^2 r^3 + r - 2m = 0, i.e. where V vanishes (0 for m = 0).
double ads_horizon_radius(double m, double k);

/// Unit direction on S^2 for spherical angles.
Vec3 unit_direction(double theta, double phi);

}  // namespace qlm::geometry
