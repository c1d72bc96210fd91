#include "qlm/geometry/curvature.hpp"

#include "qlm/error.hpp"

#include <Eigen/LU>

#include <string>

namespace qlm::geometry {
namespace {

void require_margin(const MetricField& metric, const Vec3& p, double needed) {
  const double margin = metric.chart_margin(p);
  if (!(margin >= needed)) {
    throw ChartBoundary("point (" + std::to_string(p[0]) + ", " +
                        std::to_string(p[1]) + ", " + std::to_string(p[2]) +
                        ") is within " + std::to_string(needed) +
                        " of the chart boundary");
  }
}

Vec3 offset(const Vec3& p, int axis, double h) {
  Vec3 q = p;
  q[axis] += h;
  return q;
}

}  // namespace

Christoffel christoffel_with_step(const MetricField& metric, const Vec3& p,
                                  double h) {
  if (!(h > 0.0)) {
    throw DomainError("finite-difference step must be positive");
  }
  require_margin(metric, p, 2.0 * h);
  // Fourth-order central stencil: the second fundamental form inherits this
  // error directly, and strongly curved charts need it.
  std::array<Mat3, 3> dg;  // dg[l] = d_l g
  for (int l = 0; l < 3; ++l) {
    dg[l] = (8.0 * (metric.components(offset(p, l, h)) -
                    metric.components(offset(p, l, -h))) -
             (metric.components(offset(p, l, 2.0 * h)) -
              metric.components(offset(p, l, -2.0 * h)))) /
            (12.0 * h);
  }
  const Mat3 ginv = metric.components(p).inverse();
  Christoffel out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = j; k < 3; ++k) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) {
          s += ginv(i, l) * (dg[j](l, k) + dg[k](j, l) - dg[l](j, k));
        }
        out.symbols[i](j, k) = 0.5 * s;
        out.symbols[i](k, j) = 0.5 * s;
      }
    }
  }
  return out;
}

Christoffel christoffel(const MetricField& metric, const Vec3& p,
                        const FdOptions& fd) {
  return christoffel_with_step(metric, p, fd.step * metric.local_scale(p));
}

ScalarCurvature scalar_curvature_with_step(const MetricField& metric,
                                           const Vec3& p, double h) {
  require_margin(metric, p, 4.0 * h);
  const Christoffel G = christoffel_with_step(metric, p, h);
  // dG[m].symbols[i](j,k) = d_m Gamma^i_jk
  std::array<Christoffel, 3> dG;
  for (int m = 0; m < 3; ++m) {
    const Christoffel plus = christoffel_with_step(metric, offset(p, m, h), h);
    const Christoffel minus =
        christoffel_with_step(metric, offset(p, m, -h), h);
    for (int i = 0; i < 3; ++i) {
      dG[m].symbols[i] = (plus.symbols[i] - minus.symbols[i]) / (2.0 * h);
    }
  }
  // R_jk = d_i G^i_jk - d_k G^i_ij + G^i_ip G^p_jk - G^i_kp G^p_ij
  Mat3 ricci = Mat3::Zero();
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        s += dG[i](i, j, k) - dG[k](i, i, j);
        for (int q = 0; q < 3; ++q) {
          s += G(i, i, q) * G(q, j, k) - G(i, k, q) * G(q, i, j);
        }
      }
      ricci(j, k) = s;
    }
  }
  const Mat3 ginv = metric.components(p).inverse();
  ScalarCurvature out;
  out.numeric = (ginv.cwiseProduct(ricci)).sum();
  out.analytic = metric.analytic_scalar_curvature(p);
  return out;
}

ScalarCurvature scalar_curvature(const MetricField& metric, const Vec3& p,
                                 const FdOptions& fd) {
  return scalar_curvature_with_step(metric, p,
                                    fd.step * metric.local_scale(p));
}

}  // namespace qlm::geometry
