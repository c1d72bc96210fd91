#include "qlm/asymptotic.hpp"

#include "qlm/error.hpp"
#include "qlm/geometry/metric.hpp"
#include "qlm/geometry/surface.hpp"
#include "qlm/mass.hpp"
#include "qlm/simd/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qlm::asymptotic {

AHSphereData ah_sphere_data(double r, const geometry::AHTensor& h,
                            const geometry::QuadratureGrid& grid) {
  if (!(r > 0.0) || !(r <= kMaxRadius)) {
    throw DomainError("AH sphere radius must lie in (0, 0.5], got " +
                      std::to_string(r));
  }
  AHSphereData d;
  d.r = r;
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  const double coth = c / s;
  const double r3 = r * r * r;
  d.area_factor = 1.0 / (s * s);
  const std::size_t n = grid.size();
  d.h.resize(n);
  d.h0.assign(n, c);
  d.position.resize(n);
  d.trace.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 x =
        geometry::unit_direction(grid.node_theta(i), grid.node_phi(i));
    d.trace[i] = h.trace(x);
    d.h[i] = c - 0.25 * r3 * d.trace[i];
    if (!(d.h[i] > 0.0)) {
      throw InvariantError("expanded mean curvature is not positive at r = " +
                           std::to_string(r));
    }
    d.position[i] = LorentzVector(x / s, coth);
  }
  return d;
}

LorentzVector energy_momentum(const AHSphereData& data,
                              const geometry::QuadratureGrid& grid) {
  const std::size_t n = grid.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = grid.node_weight(i) * std::sin(grid.node_theta(i)) *
           data.area_factor;
  }
  std::vector<double> density(n);
  simd::kernels().mass_density(data.h, data.h0, w, density);
  return geometry::weighted_sum(density, data.position);
}

namespace {

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace

AsymptoticResult asymptotic_limit(const geometry::AHTensor& h,
                                  const std::vector<double>& radii,
                                  const geometry::QuadratureGrid& grid) {
  if (radii.size() < 3) {
    throw DomainError("asymptotic_limit needs at least three radii");
  }
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] < radii[i - 1])) {
      throw DomainError("radii must be strictly decreasing");
    }
  }
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  AsymptoticResult out;
  out.half_upsilon = 0.5 * mass::wang_mass(h, grid);
  for (double r : radii) {
    const LorentzVector E = energy_momentum(ah_sphere_data(r, h, grid), grid);
    out.rows.push_back({r, E, E - out.half_upsilon});
  }
  const std::size_t m = out.rows.size();
  const Row& a = out.rows[m - 3];
  const Row& b = out.rows[m - 2];
  const Row& c = out.rows[m - 1];
  const double q = b.r / c.r;
  out.extrapolated = c.E + (1.0 / (q - 1.0)) * (c.E - b.E);
  out.deviation = out.extrapolated - out.half_upsilon;

  const double d1 = (a.E - b.E).max_abs();
  const double d2 = (b.E - c.E).max_abs();
  out.observed_order =
      d1 > 0.0 && d2 > 0.0 ? std::log(d1 / d2) / std::log(a.r / b.r) : nan;

  std::vector<double> rs, errs;
  bool all_nonzero = true;
  for (const Row& row : out.rows) {
    const double e = row.deviation.max_abs();
    all_nonzero = all_nonzero && e > 0.0;
    rs.push_back(row.r);
    errs.push_back(e);
  }
  out.error_slope = all_nonzero ? log_log_slope(rs, errs) : nan;
  return out;
}

}  // namespace qlm::asymptotic
