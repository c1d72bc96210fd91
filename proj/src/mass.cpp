#include "qlm/mass.hpp"

#include "qlm/error.hpp"
#include "qlm/hypgeom.hpp"
#include "qlm/simd/kernels.hpp"
#include "qlm/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qlm::mass {

using geometry::MetricField;
using geometry::SurfaceData;

BoundaryData boundary_data(const SurfaceData& surface,
                           const MetricField& ambient,
                           const MassOptions& options) {
  const auto& grid = surface.grid();
  surface.embedding();  // MissingEmbedding
  BoundaryData d;
  d.k = surface.k();
  d.isometry_mismatch = geometry::verify_isometric(surface, ambient).relative;
  if (options.require_isometry && !(d.isometry_mismatch <= options.iso_tol)) {
    throw IsometryViolation(d.isometry_mismatch, options.iso_tol);
  }
  const std::size_t n = grid.size();
  d.weights.resize(n);
  d.h.resize(n);
  d.h0.resize(n);
  d.position.resize(n);
  d.ball.resize(n);
  double min_h = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto forms = geometry::fundamental_forms(surface, ambient, i, options.fd);
    const auto forms0 = geometry::embedding_forms(surface, i, options.fd);
    if (!(forms.mean_curvature > 0.0) &&
        (options.require_positive_h || forms.mean_curvature == 0.0)) {
      throw NonPositiveMeanCurvature(i, grid.node_theta(i), grid.node_phi(i),
                                     forms.mean_curvature);
    }
    if (forms.mean_curvature < min_h) {
      min_h = forms.mean_curvature;
      d.min_h_node = i;
    }
    d.weights[i] = grid.node_weight(i) * forms.area_density;
    d.h[i] = forms.mean_curvature;
    d.h0[i] = forms0.mean_curvature;
    d.ball[i] = surface.embedding()(grid.node_theta(i), grid.node_phi(i)).position;
    d.position[i] = ball_to_hyperboloid(BallPoint(d.ball[i], d.k)).position();
  }
  return d;
}

LorentzVector energy_momentum(const BoundaryData& data) {
  std::vector<double> density(data.h.size());
  simd::kernels().mass_density(data.h, data.h0, data.weights, density);
  return geometry::weighted_sum(density, data.position);
}

LorentzVector energy_momentum(const SurfaceData& surface,
                              const MetricField& ambient,
                              const MassOptions& options) {
  return energy_momentum(boundary_data(surface, ambient, options));
}

double shi_tam_alpha(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 >= r1)) {
    throw DomainError("shi_tam_alpha needs 0 < R1 <= R2");
  }
  const double s1 = std::sinh(r1);
  const double s2 = std::sinh(r2);
  const double ratio = (s2 / s1) * (s2 / s1);
  return 1.0 / std::tanh(r1) + std::sqrt(std::max(0.0, ratio - 1.0)) / s1;
}

LorentzVector shi_tam_vector(const BoundaryData& data, double alpha) {
  if (!(alpha >= 1.0)) {
    throw DomainError("shi_tam_vector needs alpha >= 1");
  }
  std::vector<double> density(data.h.size());
  simd::kernels().mean_curvature_deficit(data.h, data.h0, data.weights,
                                         density);
  std::vector<LorentzVector> w;
  w.reserve(data.position.size());
  for (const LorentzVector& X : data.position) {
    w.emplace_back(X.spatial(), alpha * X.time());
  }
  return geometry::weighted_sum(density, w);
}

LorentzVector shi_tam_vector(const SurfaceData& surface,
                             const MetricField& ambient, double alpha,
                             const MassOptions& options) {
  return shi_tam_vector(boundary_data(surface, ambient, options), alpha);
}

LorentzVector wang_mass(const geometry::AHTensor& h,
                        const geometry::QuadratureGrid& grid) {
  std::array<CompensatedSum, 4> s;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double theta = grid.node_theta(n);
    const Vec3 x = geometry::unit_direction(theta, grid.node_phi(n));
    const double w = grid.node_weight(n) * std::sin(theta);
    const double tau = h.trace(x);
    for (int c = 0; c < 3; ++c) {
      s[c].add(w * tau * x[c]);
    }
    s[3].add(w * tau);
  }
  return from_display({s[3].value(), {s[0].value(), s[1].value(), s[2].value()}});
}

LorentzVector from_display(const UpsilonDisplay& u) {
  return LorentzVector(u.moment, u.scalar);
}

UpsilonDisplay to_display(const LorentzVector& v) {
  return {v.time(), v.spatial()};
}

double killing_weighted_mass(const BoundaryData& data,
                             const spinor::SpinorValue& a,
                             spinor::Branch branch,
                             const spinor::CliffordRep& rep) {
  if (data.k != 1.0) {
    throw DomainError("killing_weighted_mass is defined at k = 1");
  }
  std::vector<double> density(data.h.size());
  simd::kernels().mass_density(data.h, data.h0, data.weights, density);
  CompensatedSum s;
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double psi2 =
        spinor::killing_spinor(a, BallPoint(data.ball[i], 1.0), branch, rep)
            .norm2();
    s.add(density[i] * psi2);
  }
  return s.value();
}

double killing_weighted_mass(const SurfaceData& surface,
                             const MetricField& ambient,
                             const spinor::SpinorValue& a,
                             spinor::Branch branch,
                             const MassOptions& options) {
  return killing_weighted_mass(boundary_data(surface, ambient, options), a,
                               branch);
}

HypothesisChecks check_hypotheses(const SurfaceData& surface,
                                  const MetricField& ambient,
                                  const geometry::FdOptions& fd,
                                  double curvature_tol, double iso_tol,
                                  std::size_t max_scalar_samples) {
  const auto& grid = surface.grid();
  const double k2 = surface.k() * surface.k();
  HypothesisChecks c;
  c.curvature_tol = curvature_tol;
  c.iso_tol = iso_tol;
  c.min_h = std::numeric_limits<double>::infinity();
  c.min_gauss_plus_k2 = std::numeric_limits<double>::infinity();
  c.min_scalar_plus_6k2 = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double h = geometry::fundamental_forms(surface, ambient, n, fd)
                         .mean_curvature;
    if (h < c.min_h) {
      c.min_h = h;
      c.min_h_node = n;
    }
    c.min_gauss_plus_k2 = std::min(
        c.min_gauss_plus_k2, geometry::gauss_curvature(surface, ambient, n) + k2);
  }
  const std::size_t stride =
      std::max<std::size_t>(1, grid.size() / std::max<std::size_t>(1, max_scalar_samples));
  for (std::size_t n = 0; n < grid.size(); n += stride) {
    const Vec3 p =
        surface.immersion()(grid.node_theta(n), grid.node_phi(n)).position;
    const double r = geometry::scalar_curvature(ambient, p, fd).numeric;
    c.min_scalar_plus_6k2 = std::min(c.min_scalar_plus_6k2, r + 6.0 * k2);
    ++c.scalar_samples;
  }
  if (surface.has_embedding()) {
    c.isometry_mismatch = geometry::verify_isometric(surface, ambient).relative;
  }
  return c;
}

}  // namespace qlm::mass
