#pragma once

#include "qlm/geometry/curvature.hpp"
#include "qlm/geometry/metric.hpp"
#include "qlm/geometry/profile.hpp"
#include "qlm/geometry/quadrature.hpp"
#include "qlm/lorentz.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace qlm::geometry {

using Mat2 = Eigen::Matrix2d;

/// Position and parameter derivatives up to second order of a surface
/// (theta, phi) -> chart coordinates.
struct SurfaceJet {
  Vec3 position = Vec3::Zero();
  Vec3 d_theta = Vec3::Zero();
  Vec3 d_phi = Vec3::Zero();
  Vec3 d_theta_theta = Vec3::Zero();
  Vec3 d_theta_phi = Vec3::Zero();
  Vec3 d_phi_phi = Vec3::Zero();
};

using Parametrization = std::function<SurfaceJet(double theta, double phi)>;

/// center + radius * n(theta, phi) in a Cartesian chart.
Parametrization sphere_parametrization(const Vec3& center, double radius);

/// Surface in the ball model of H^3_{-k^2} whose geodesic distance from the
/// origin in direction n is rho(n) (star-shaped about the origin).
Parametrization ball_radial_parametrization(const SpherePolynomial& rho,
                                            double k);

/// Geodesic sphere of radius rho in the ball model, centered at the point
/// reached from the origin by the geodesic with initial displacement
/// `center_offset` (its length is the hyperbolic distance).
Parametrization ball_geodesic_sphere(double rho, double k,
                                     const Vec3& center_offset = Vec3::Zero());

/// The level set {r = const} of a spherical (r, theta, phi) chart.
Parametrization level_set_parametrization(double r);

/// Sign applied to the normal built from d_theta x d_phi. For (theta, phi)
/// sphere-like parametrizations in Cartesian charts that cross product points
/// outward, so the inward normal takes the negative sign.
enum class NormalSide : int { AlongCross = 1, AgainstCross = -1 };

/// A closed parametrized surface in an ambient chart, optionally paired with
/// an isometric image in the ball model of H^3_{-k^2}.
class SurfaceData {
 public:
  SurfaceData(Parametrization immersion, NormalSide inward,
              QuadratureGrid grid, double k);

  /// Attach the hyperbolic image (ball-model coordinates, inward normal
  /// against the cross product).
  SurfaceData& with_embedding(Parametrization embedding);

  /// Copy with the immersion's normal flipped (outward).
  SurfaceData reversed() const;

  const Parametrization& immersion() const noexcept { return immersion_; }
  NormalSide normal_side() const noexcept { return side_; }
  bool has_embedding() const noexcept { return embedding_.has_value(); }
  /// MissingEmbedding if absent.
  const Parametrization& embedding() const;
  const MetricField& embedding_metric() const noexcept { return h3_; }
  const QuadratureGrid& grid() const noexcept { return grid_; }
  double k() const noexcept { return k_; }

  /// Same surface on a different quadrature grid.
  SurfaceData with_grid(QuadratureGrid grid) const;

 private:
  Parametrization immersion_;
  NormalSide side_;
  std::optional<Parametrization> embedding_;
  QuadratureGrid grid_;
  double k_;
  MetricField h3_;
};

/// Geodesic sphere in H^3 seen from the ball chart, with F = F0.
SurfaceData geodesic_sphere(double rho, double k, QuadratureGrid grid,
                            const Vec3& center_offset = Vec3::Zero());

/// Coordinate sphere |x| = r of a Cartesian chart (e.g. AdS-Schwarzschild),
/// paired with the geodesic sphere of H^3_{-k^2} of equal area radius,
/// sinh(k rho)/k = r. Both induce r^2 g0.
SurfaceData coordinate_sphere(double r, double k, QuadratureGrid grid);

/// Star-shaped surface of H^3 with geodesic radius profile rho(n), F = F0.
SurfaceData radial_profile_surface(const SpherePolynomial& rho, double k,
                                   QuadratureGrid grid);

/// Level set r = const of the WangAH chart; no hyperbolic image attached.
SurfaceData ah_level_set(double r, QuadratureGrid grid);

struct FundamentalForms {
  Mat2 first = Mat2::Zero();   // g_ab
  Mat2 second = Mat2::Zero();  // A_ab = g(-nabla_a N, d_b F)
  Vec3 normal = Vec3::Zero();  // unit normal N (chart components)
  double mean_curvature = 0.0; // H = (1/2) tr(g^-1 A)
  double area_density = 0.0;   // sqrt(det g_ab)
};

Mat2 induced_metric(const Parametrization& F, const MetricField& metric,
                    double theta, double phi);

/// DegenerateImmersion if det g_ab < 1e-14 (tr g_ab / 2)^2.
FundamentalForms fundamental_forms(const Parametrization& F, NormalSide side,
                                   const MetricField& metric, double theta,
                                   double phi, const FdOptions& fd = {});

/// Forms of the immersion F in `metric` at a grid node.
FundamentalForms fundamental_forms(const SurfaceData& surface,
                                   const MetricField& metric, std::size_t node,
                                   const FdOptions& fd = {});

/// Forms of the hyperbolic image F0 in H^3_{-k^2} at a grid node.
FundamentalForms embedding_forms(const SurfaceData& surface, std::size_t node,
                                 const FdOptions& fd = {});

/// Forms at every node, in node order.
std::vector<FundamentalForms> evaluate_immersion(const SurfaceData& surface,
                                                 const MetricField& metric,
                                                 const FdOptions& fd = {});
std::vector<FundamentalForms> evaluate_embedding(const SurfaceData& surface,
                                                 const FdOptions& fd = {});

/// Intrinsic Gauss curvature of the induced metric by the Brioschi formula,
/// with fourth-order central differences in parameter space.
double gauss_curvature(const Parametrization& F, const MetricField& metric,
                       double theta, double phi);
double gauss_curvature(const SurfaceData& surface, const MetricField& metric,
                       std::size_t node);

/// Quadrature weight times area density at every node.
std::vector<double> area_weights(const SurfaceData& surface,
                                 const MetricField& metric);

double integrate(const SurfaceData& surface, const MetricField& metric,
                 std::span<const double> integrand);
LorentzVector integrate(const SurfaceData& surface, const MetricField& metric,
                        std::span<const LorentzVector> integrand);

/// Fixed-order compensated quadrature sums against precomputed weights.
double weighted_sum(std::span<const double> weights,
                    std::span<const double> values);
LorentzVector weighted_sum(std::span<const double> weights,
                           std::span<const LorentzVector> values);

struct IsometryMismatch {
  double absolute = 0.0;  // max over nodes and entries of |g_ab(F) - g_ab(F0)|
  double relative = 0.0;  // same, divided by max |g_ab(F)| at that node
};

/// Pointwise comparison of the metrics induced by F (in `metric`) and by F0
/// (in H^3). MissingEmbedding if F0 is absent.
IsometryMismatch verify_isometric(const SurfaceData& surface,
                                  const MetricField& metric);

}  // namespace qlm::geometry
