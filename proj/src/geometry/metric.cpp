#include "qlm/geometry/metric.hpp"

#include "qlm/error.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qlm::geometry {

std::string_view to_string(MetricKind k) noexcept {
  switch (k) {
    case MetricKind::Euclidean:
      return "euclidean";
    case MetricKind::HyperbolicBall:
      return "hyperbolic_ball";
    case MetricKind::AdSSchwarzschild:
      return "ads_schwarzschild";
    case MetricKind::WangAH:
      return "wang_ah";
    case MetricKind::UserDefined:
      return "user_defined";
  }
  return "unknown";
}

Vec3 unit_direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

double ads_horizon_radius(double m, double k) {
  if (m < 0.0 || !(k > 0.0)) {
    throw DomainError("AdS-Schwarzschild requires m >= 0 and k > 0");
  }
  if (m == 0.0) {
    return 0.0;
  }
  // k^2 r^3 + r - 2m is increasing with a sign change on [0, 2m].
  double lo = 0.0;
  double hi = 2.0 * m;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (k * k * mid * mid * mid + mid - 2.0 * m < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

MetricField::MetricField(Definition def) : def_(std::move(def)) {
  if (!def_.components) {
    throw DomainError("MetricField: component function required");
  }
  if (!def_.margin) {
    def_.margin = [](const Vec3&) {
      return std::numeric_limits<double>::infinity();
    };
  }
  if (!def_.local_scale) {
    def_.local_scale = [](const Vec3&) { return 1.0; };
  }
}

Mat3 MetricField::components(const Vec3& p) const {
  if (!(def_.margin(p) > 0.0)) {
    throw ChartBoundary("metric evaluated outside its chart at (" +
                        std::to_string(p[0]) + ", " + std::to_string(p[1]) +
                        ", " + std::to_string(p[2]) + ")");
  }
  const Mat3 g = def_.components(p);
  if (!g.allFinite() || (g - g.transpose()).cwiseAbs().maxCoeff() >
                            1e-14 * g.cwiseAbs().maxCoeff()) {
    throw InvariantError("metric components are not finite and symmetric");
  }
  Eigen::LLT<Mat3> llt(g);
  if (llt.info() != Eigen::Success) {
    throw InvariantError("metric is not positive definite at (" +
                         std::to_string(p[0]) + ", " + std::to_string(p[1]) +
                         ", " + std::to_string(p[2]) + ")");
  }
  return g;
}

std::optional<double> MetricField::analytic_scalar_curvature(
    const Vec3& p) const {
  if (def_.scalar_curvature) {
    return (*def_.scalar_curvature)(p);
  }
  return std::nullopt;
}

MetricField MetricField::euclidean() {
  Definition d;
  d.kind = MetricKind::Euclidean;
  d.components = [](const Vec3&) -> Mat3 { return Mat3::Identity(); };
  d.scalar_curvature = [](const Vec3&) { return 0.0; };
  return MetricField(std::move(d));
}

MetricField MetricField::hyperbolic_ball(double k) {
  if (!(k > 0.0)) {
    throw DomainError("HyperbolicBall requires k > 0");
  }
  Definition d;
  d.kind = MetricKind::HyperbolicBall;
  d.components = [k](const Vec3& x) -> Mat3 {
    const double f = 2.0 / (1.0 - x.squaredNorm());
    const double c = f / k;
    return c * c * Mat3::Identity();
  };
  d.margin = [](const Vec3& x) { return 1.0 - x.norm(); };
  d.scalar_curvature = [k](const Vec3&) { return -6.0 * k * k; };
  MetricField g(std::move(d));
  g.k_ = k;
  return g;
}

MetricField MetricField::ads_schwarzschild(double m, double k,
                                           double horizon_margin) {
  const double rh = ads_horizon_radius(m, k);
  if (!(horizon_margin > 0.0)) {
    throw DomainError("AdS-Schwarzschild horizon margin must be positive");
  }
  Definition d;
  d.kind = MetricKind::AdSSchwarzschild;
  // dr^2/V + r^2 g0 = delta + (1/V - 1) (x x^T)/r^2, and
  // (1/V - 1)/r^2 = (2m/r^3 - k^2)/V stays finite at r = 0 when m = 0.
  d.components = [m, k](const Vec3& x) -> Mat3 {
    const double r2 = x.squaredNorm();
    const double r = std::sqrt(r2);
    const double mr3 = m == 0.0 ? 0.0 : 2.0 * m / (r2 * r);
    const double V = 1.0 + k * k * r2 - (m == 0.0 ? 0.0 : 2.0 * m / r);
    const double c = (mr3 - k * k) / V;
    return Mat3::Identity() + c * (x * x.transpose());
  };
  if (m > 0.0) {
    const double edge = rh + horizon_margin;
    d.margin = [edge](const Vec3& x) { return x.norm() - edge; };
  }
  d.scalar_curvature = [k](const Vec3&) { return -6.0 * k * k; };
  MetricField g(std::move(d));
  g.k_ = k;
  g.m_ = m;
  return g;
}

MetricField MetricField::wang_ah(const AHTensor& h, double e_scale) {
  Definition d;
  d.kind = MetricKind::WangAH;
  d.chart = ChartKind::Spherical;
  d.components = [h, e_scale](const Vec3& p) -> Mat3 {
    const double r = p[0];
    const double theta = p[1];
    const double s = std::sinh(r);
    const double tau = h.trace(unit_direction(theta, p[2]));
    const double r3 = r * r * r;
    const double conf = 1.0 + r3 * tau / 6.0 + e_scale * r3 * r;
    const double sin_t = std::sin(theta);
    Mat3 g = Mat3::Zero();
    g(0, 0) = 1.0;
    g(1, 1) = conf;
    g(2, 2) = conf * sin_t * sin_t;
    return g / (s * s);
  };
  d.margin = [](const Vec3& p) {
    return std::min({p[0], p[1], std::numbers::pi - p[1]});
  };
  d.local_scale = [](const Vec3& p) { return std::min(p[0], 1.0); };
  MetricField g(std::move(d));
  g.k_ = 1.0;
  g.h_ = h;
  g.e_scale_ = e_scale;
  return g;
}

}  // namespace qlm::geometry
