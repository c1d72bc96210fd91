#include "qlm/hypgeom.hpp"

#include "qlm/error.hpp"
#include "qlm/geometry/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qlm {

BallPoint::BallPoint(const Vec3& x, double k) : x_(x), k_(k) {
  if (!(k > 0.0)) {
    throw DomainError("ball point needs k > 0");
  }
  if (!x.allFinite() || !(x.squaredNorm() < 1.0)) {
    throw DomainError("ball point must satisfy |x| < 1, got |x| = " +
                      std::to_string(x.norm()));
  }
}

HyperboloidPoint::HyperboloidPoint(const LorentzVector& X, double k)
    : X_(X), k_(k) {
  if (!(k > 0.0)) {
    throw DomainError("hyperboloid point needs k > 0");
  }
  const double k2 = k * k;
  const double defect = std::abs(k2 * minkowski_inner(X, X) + 1.0);
  const double scale = std::max(1.0, k2 * X.euclidean_norm2());
  if (!(X.time() > 0.0) || !(defect <= 1e-12 * scale)) {
    throw InvariantError("point is not on the upper sheet <X,X> = -1/k^2");
  }
}

HyperboloidPoint HyperboloidPoint::origin(double k) {
  return HyperboloidPoint(LorentzVector(0.0, 0.0, 0.0, 1.0 / k), k);
}

double conformal_factor(const Vec3& x) {
  const double r2 = x.squaredNorm();
  if (!(r2 < 1.0)) {
    throw DomainError("conformal factor needs |x| < 1");
  }
  return 2.0 / (1.0 - r2);
}

double conformal_factor(const BallPoint& p) {
  return conformal_factor(p.coords());
}

HyperboloidPoint ball_to_hyperboloid(const BallPoint& p) {
  const double f = conformal_factor(p);
  const double k = p.k();
  return HyperboloidPoint(LorentzVector(f * p.coords() / k, (f - 1.0) / k), k);
}

BallPoint hyperboloid_to_ball(const HyperboloidPoint& X) {
  const double k = X.k();
  const LorentzVector& v = X.position();
  return BallPoint(k * v.spatial() / (1.0 + k * v.time()), k);
}

double geodesic_distance(const HyperboloidPoint& X, const HyperboloidPoint& Y) {
  if (X.k() != Y.k()) {
    throw DomainError("geodesic distance between points of different k");
  }
  // Chord form of (1/k) arcosh(-k^2 <X,Y>): accurate for nearby points,
  // where arcosh loses half the digits.
  const double k = X.k();
  const LorentzVector d = X.position() - Y.position();
  const double chord2 = std::max(0.0, minkowski_inner(d, d));
  return (2.0 / k) * std::asinh(0.5 * k * std::sqrt(chord2));
}

RadialBounds radial_bounds(const geometry::SurfaceData& surface,
                           const HyperboloidPoint& center) {
  const geometry::Parametrization& F0 = surface.embedding();
  if (center.k() != surface.k()) {
    throw DomainError("center and surface use different k");
  }
  const auto& grid = surface.grid();
  RadialBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const Vec3 x = F0(grid.node_theta(n), grid.node_phi(n)).position;
    const double d = geodesic_distance(
        ball_to_hyperboloid(BallPoint(x, surface.k())), center);
    b.inner = std::min(b.inner, d);
    b.outer = std::max(b.outer, d);
  }
  return b;
}

}  // namespace qlm
