#pragma once

// Small-sphere limit near conformal infinity of an asymptotically hyperbolic
// metric sinh^-2(r) (dr^2 + g0 + (r^3/3) h + e), evaluated through the
// leading-order expansions of H, H0, the area element and the hyperbolic
// image of the level set S_r.

#include "qlm/geometry/profile.hpp"
#include "qlm/geometry/quadrature.hpp"
#include "qlm/lorentz.hpp"

#include <vector>

namespace qlm::asymptotic {

/// Largest radius at which the expansions are accepted.
inline constexpr double kMaxRadius = 0.5;

struct AHSphereData {
  double r = 0.0;
  std::vector<double> h;      // cosh r - r^3 tr h / 4
  std::vector<double> h0;     // cosh r
  double area_factor = 0.0;   // 1 / sinh^2 r, relative to the round dS
  std::vector<LorentzVector> position;  // (x / sinh r, coth r)
  std::vector<double> trace;  // tr_{g0} h at the nodes
};

/// DomainError unless 0 < r <= kMaxRadius. InvariantError if some H <= 0.
AHSphereData ah_sphere_data(double r, const geometry::AHTensor& h,
                            const geometry::QuadratureGrid& grid);

/// E(S_r) = int ((H0^2 - H^2) / H) X dS_r from the expansion data.
LorentzVector energy_momentum(const AHSphereData& data,
                              const geometry::QuadratureGrid& grid);

struct Row {
  double r;
  LorentzVector E;
  LorentzVector deviation;  // E - Upsilon/2
};

struct AsymptoticResult {
  std::vector<Row> rows;
  LorentzVector extrapolated;
  LorentzVector half_upsilon;
  LorentzVector deviation;  // extrapolated - Upsilon/2
  /// log(|E1 - E2| / |E2 - E3|) / log(r1 / r2) from the last three radii;
  /// NaN when the differences vanish.
  double observed_order = 0.0;
  /// Least-squares slope of log |E(r) - Upsilon/2| against log r; NaN when
  /// some deviation vanishes.
  double error_slope = 0.0;
};

/// DomainError unless there are at least three strictly decreasing radii in
/// (0, kMaxRadius]. Two-point Richardson on the last two radii with assumed
/// order one.
AsymptoticResult asymptotic_limit(const geometry::AHTensor& h,
                                  const std::vector<double>& radii,
                                  const geometry::QuadratureGrid& grid);

}  // namespace qlm::asymptotic
