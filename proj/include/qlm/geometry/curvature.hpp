#pragma once

#include "qlm/geometry/metric.hpp"

#include <array>
#include <optional>

namespace qlm::geometry {

struct FdOptions {
  /// Central-difference step, relative to the metric's local chart scale.
  double step = 1e-4;
};

/// Gamma^i_jk stored as symbols[i](j, k).
struct Christoffel {
  std::array<Mat3, 3> symbols;

  double operator()(int i, int j, int k) const { return symbols[i](j, k); }
};

/// Christoffel symbols of the second kind from fourth-order central
/// differences of g_ij.
/// Requires a chart margin of at least 2 steps (ChartBoundary otherwise).
Christoffel christoffel(const MetricField& metric, const Vec3& p,
                        const FdOptions& fd = {});

/// Same, with an absolute coordinate step.
Christoffel christoffel_with_step(const MetricField& metric, const Vec3& p,
                                  double step);

struct ScalarCurvature {
  double numeric = 0.0;
  std::optional<double> analytic;
};

/// Scalar curvature by contracting the Ricci tensor assembled from nested
/// central differences. Requires a chart margin of at least 4 steps.
ScalarCurvature scalar_curvature(const MetricField& metric, const Vec3& p,
                                 const FdOptions& fd = {});

ScalarCurvature scalar_curvature_with_step(const MetricField& metric,
                                           const Vec3& p, double step);

}  // namespace qlm::geometry
