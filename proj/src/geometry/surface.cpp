#include "qlm/geometry/surface.hpp"

#include "qlm/error.hpp"
#include "qlm/summation.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <array>
#include <cmath>
#include <string>

namespace qlm::geometry {
namespace {

struct SphereFrame {
  Vec3 n, n_t, n_p, n_tt, n_tp, n_pp;
};

SphereFrame sphere_frame(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  SphereFrame f;
  f.n = {st * cp, st * sp, ct};
  f.n_t = {ct * cp, ct * sp, -st};
  f.n_p = {-st * sp, st * cp, 0.0};
  f.n_tt = -f.n;
  f.n_tp = {-ct * sp, ct * cp, 0.0};
  f.n_pp = {-st * cp, -st * sp, 0.0};
  return f;
}

}  // namespace

Parametrization sphere_parametrization(const Vec3& center, double radius) {
  if (!(radius > 0.0)) {
    throw DomainError("sphere radius must be positive");
  }
  return [center, radius](double theta, double phi) {
    const SphereFrame f = sphere_frame(theta, phi);
    SurfaceJet j;
    j.position = center + radius * f.n;
    j.d_theta = radius * f.n_t;
    j.d_phi = radius * f.n_p;
    j.d_theta_theta = radius * f.n_tt;
    j.d_theta_phi = radius * f.n_tp;
    j.d_phi_phi = radius * f.n_pp;
    return j;
  };
}

Parametrization ball_radial_parametrization(const SpherePolynomial& rho,
                                            double k) {
  if (!(k > 0.0)) {
    throw DomainError("curvature scale k must be positive");
  }
  return [rho, k](double theta, double phi) {
    const SphereFrame f = sphere_frame(theta, phi);
    const double d = rho.value(f.n);
    if (!(d > 0.0)) {
      throw DomainError("radial profile must be positive, got " +
                        std::to_string(d));
    }
    const Vec3 grad = rho.gradient(f.n);
    const Eigen::Matrix3d hess = rho.hessian();
    const double d_t = grad.dot(f.n_t);
    const double d_p = grad.dot(f.n_p);
    const double d_tt = f.n_t.dot(hess * f.n_t) + grad.dot(f.n_tt);
    const double d_tp = f.n_t.dot(hess * f.n_p) + grad.dot(f.n_tp);
    const double d_pp = f.n_p.dot(hess * f.n_p) + grad.dot(f.n_pp);

    // Ball radius u = tanh(k rho / 2) and its derivatives in rho.
    const double th = std::tanh(0.5 * k * d);
    const double sech2 = 1.0 - th * th;
    const double u1 = 0.5 * k * sech2;
    const double u2 = -0.5 * k * k * sech2 * th;

    const double s = th;
    const double s_t = u1 * d_t;
    const double s_p = u1 * d_p;
    const double s_tt = u2 * d_t * d_t + u1 * d_tt;
    const double s_tp = u2 * d_t * d_p + u1 * d_tp;
    const double s_pp = u2 * d_p * d_p + u1 * d_pp;

    SurfaceJet j;
    j.position = s * f.n;
    j.d_theta = s_t * f.n + s * f.n_t;
    j.d_phi = s_p * f.n + s * f.n_p;
    j.d_theta_theta = s_tt * f.n + 2.0 * s_t * f.n_t + s * f.n_tt;
    j.d_theta_phi = s_tp * f.n + s_t * f.n_p + s_p * f.n_t + s * f.n_tp;
    j.d_phi_phi = s_pp * f.n + 2.0 * s_p * f.n_p + s * f.n_pp;
    return j;
  };
}

Parametrization ball_geodesic_sphere(double rho, double k,
                                     const Vec3& center_offset) {
  if (!(rho > 0.0) || !(k > 0.0)) {
    throw DomainError("geodesic sphere needs rho > 0 and k > 0");
  }
  // Geodesic spheres of the ball model are Euclidean spheres. Along the
  // axis through the center they cross the signed distances delta -/+ rho.
  const double delta = center_offset.norm();
  if (delta == 0.0) {
    return sphere_parametrization(Vec3::Zero(), std::tanh(0.5 * k * rho));
  }
  const Vec3 axis = center_offset / delta;
  const double a1 = std::tanh(0.5 * k * (delta - rho));
  const double a2 = std::tanh(0.5 * k * (delta + rho));
  return sphere_parametrization(0.5 * (a1 + a2) * axis, 0.5 * (a2 - a1));
}

Parametrization level_set_parametrization(double r) {
  if (!(r > 0.0)) {
    throw DomainError("level set radius must be positive");
  }
  return [r](double theta, double phi) {
    SurfaceJet j;
    j.position = {r, theta, phi};
    j.d_theta = {0.0, 1.0, 0.0};
    j.d_phi = {0.0, 0.0, 1.0};
    return j;
  };
}

SurfaceData::SurfaceData(Parametrization immersion, NormalSide inward,
                         QuadratureGrid grid, double k)
    : immersion_(std::move(immersion)),
      side_(inward),
      grid_(std::move(grid)),
      k_(k),
      h3_(MetricField::hyperbolic_ball(k)) {
  if (!immersion_) {
    throw DomainError("SurfaceData: immersion required");
  }
}

SurfaceData& SurfaceData::with_embedding(Parametrization embedding) {
  embedding_ = std::move(embedding);
  return *this;
}

SurfaceData SurfaceData::reversed() const {
  SurfaceData s = *this;
  s.side_ = side_ == NormalSide::AlongCross ? NormalSide::AgainstCross
                                            : NormalSide::AlongCross;
  return s;
}

SurfaceData SurfaceData::with_grid(QuadratureGrid grid) const {
  SurfaceData s = *this;
  s.grid_ = std::move(grid);
  return s;
}

const Parametrization& SurfaceData::embedding() const {
  if (!embedding_) {
    throw MissingEmbedding("surface has no hyperbolic embedding F0");
  }
  return *embedding_;
}

SurfaceData geodesic_sphere(double rho, double k, QuadratureGrid grid,
                            const Vec3& center_offset) {
  auto param = ball_geodesic_sphere(rho, k, center_offset);
  SurfaceData s(param, NormalSide::AgainstCross, std::move(grid), k);
  s.with_embedding(param);
  return s;
}

SurfaceData coordinate_sphere(double r, double k, QuadratureGrid grid) {
  SurfaceData s(sphere_parametrization(Vec3::Zero(), r),
                NormalSide::AgainstCross, std::move(grid), k);
  const double rho = std::asinh(k * r) / k;
  s.with_embedding(ball_geodesic_sphere(rho, k));
  return s;
}

SurfaceData radial_profile_surface(const SpherePolynomial& rho, double k,
                                   QuadratureGrid grid) {
  auto param = ball_radial_parametrization(rho, k);
  SurfaceData s(param, NormalSide::AgainstCross, std::move(grid), k);
  s.with_embedding(param);
  return s;
}

SurfaceData ah_level_set(double r, QuadratureGrid grid) {
  // In (r, theta, phi) the cross product d_theta x d_phi is +dr, which points
  // away from conformal infinity r = 0, i.e. into the bulk.
  return SurfaceData(level_set_parametrization(r), NormalSide::AlongCross,
                     std::move(grid), 1.0);
}

Mat2 induced_metric(const Parametrization& F, const MetricField& metric,
                    double theta, double phi) {
  const SurfaceJet j = F(theta, phi);
  const Mat3 G = metric.components(j.position);
  Mat2 g;
  g(0, 0) = j.d_theta.dot(G * j.d_theta);
  g(0, 1) = j.d_theta.dot(G * j.d_phi);
  g(1, 0) = g(0, 1);
  g(1, 1) = j.d_phi.dot(G * j.d_phi);
  return g;
}

FundamentalForms fundamental_forms(const Parametrization& F, NormalSide side,
                                   const MetricField& metric, double theta,
                                   double phi, const FdOptions& fd) {
  const SurfaceJet j = F(theta, phi);
  const Mat3 G = metric.components(j.position);
  FundamentalForms out;
  Mat2& g = out.first;
  g(0, 0) = j.d_theta.dot(G * j.d_theta);
  g(0, 1) = j.d_theta.dot(G * j.d_phi);
  g(1, 0) = g(0, 1);
  g(1, 1) = j.d_phi.dot(G * j.d_phi);
  const double det = g.determinant();
  const double tr = 0.5 * g.trace();
  if (!(det > 1e-14 * tr * tr)) {
    throw DegenerateImmersion("degenerate immersion at theta=" +
                              std::to_string(theta) +
                              ", phi=" + std::to_string(phi));
  }
  out.area_density = std::sqrt(det);

  const Mat3 Ginv = G.inverse();
  const Vec3 covector = j.d_theta.cross(j.d_phi);
  const Vec3 raised = Ginv * covector;
  const double norm = std::sqrt(covector.dot(raised));
  out.normal = (static_cast<int>(side) / norm) * raised;

  // A_ab = g(N, nabla_a d_b F) since g(N, d_b F) = 0.
  const Christoffel gamma = christoffel(metric, j.position, fd);
  const std::array<const Vec3*, 2> d{&j.d_theta, &j.d_phi};
  const std::array<std::array<const Vec3*, 2>, 2> dd{
      {{&j.d_theta_theta, &j.d_theta_phi}, {&j.d_theta_phi, &j.d_phi_phi}}};
  const Vec3 lowered_normal = G * out.normal;
  for (int a = 0; a < 2; ++a) {
    for (int b = a; b < 2; ++b) {
      Vec3 acc = *dd[a][b];
      for (int i = 0; i < 3; ++i) {
        acc[i] += d[a]->dot(gamma.symbols[i] * *d[b]);
      }
      out.second(a, b) = lowered_normal.dot(acc);
      out.second(b, a) = out.second(a, b);
    }
  }
  out.mean_curvature = 0.5 * (g.inverse() * out.second).trace();
  return out;
}

FundamentalForms fundamental_forms(const SurfaceData& surface,
                                   const MetricField& metric, std::size_t node,
                                   const FdOptions& fd) {
  const auto& grid = surface.grid();
  return fundamental_forms(surface.immersion(), surface.normal_side(), metric,
                           grid.node_theta(node), grid.node_phi(node), fd);
}

FundamentalForms embedding_forms(const SurfaceData& surface, std::size_t node,
                                 const FdOptions& fd) {
  const auto& grid = surface.grid();
  return fundamental_forms(surface.embedding(), NormalSide::AgainstCross,
                           surface.embedding_metric(), grid.node_theta(node),
                           grid.node_phi(node), fd);
}

std::vector<FundamentalForms> evaluate_immersion(const SurfaceData& surface,
                                                 const MetricField& metric,
                                                 const FdOptions& fd) {
  std::vector<FundamentalForms> out(surface.grid().size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = fundamental_forms(surface, metric, n, fd);
  }
  return out;
}

std::vector<FundamentalForms> evaluate_embedding(const SurfaceData& surface,
                                                 const FdOptions& fd) {
  surface.embedding();  // throws MissingEmbedding
  std::vector<FundamentalForms> out(surface.grid().size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = embedding_forms(surface, n, fd);
  }
  return out;
}

double gauss_curvature(const Parametrization& F, const MetricField& metric,
                       double theta, double phi) {
  // The theta step shrinks with sin(theta): (theta, phi) coordinates
  // degenerate at the poles and the Brioschi denominator goes like sin^4.
  constexpr double eta = 1e-2;
  const double hu = eta * std::sin(theta);
  const double hv = eta;
  auto m = [&](int a, int b) {
    return induced_metric(F, metric, theta + a * hu, phi + b * hv);
  };
  constexpr std::array<int, 4> offsets{2, 1, -1, -2};
  constexpr std::array<double, 4> c1{-1.0, 8.0, -8.0, 1.0};    // / 12h
  constexpr std::array<double, 4> c2{-1.0, 16.0, 16.0, -1.0};  // / 12h^2

  const Mat2 g0 = m(0, 0);
  Mat2 du = Mat2::Zero(), dv = Mat2::Zero();
  Mat2 duu = -30.0 * g0, dvv = -30.0 * g0, duv = Mat2::Zero();
  for (int s = 0; s < 4; ++s) {
    const Mat2 mu = m(offsets[s], 0);
    const Mat2 mv = m(0, offsets[s]);
    du += c1[s] * mu;
    dv += c1[s] * mv;
    duu += c2[s] * mu;
    dvv += c2[s] * mv;
    for (int t = 0; t < 4; ++t) {
      duv += (c1[s] * c1[t]) * m(offsets[s], offsets[t]);
    }
  }
  du /= 12.0 * hu;
  dv /= 12.0 * hv;
  duu /= 12.0 * hu * hu;
  dvv /= 12.0 * hv * hv;
  duv /= 144.0 * hu * hv;

  const double E = g0(0, 0), Fm = g0(0, 1), G = g0(1, 1);
  const double Eu = du(0, 0), Fu = du(0, 1), Gu = du(1, 1);
  const double Ev = dv(0, 0), Fv = dv(0, 1), Gv = dv(1, 1);
  const double Evv = dvv(0, 0), Guu = duu(1, 1), Fuv = duv(0, 1);

  Eigen::Matrix3d m1;
  m1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,  //
      Fv - 0.5 * Gu, E, Fm,                                       //
      0.5 * Gv, Fm, G;
  Eigen::Matrix3d m2;
  m2 << 0.0, 0.5 * Ev, 0.5 * Gu,  //
      0.5 * Ev, E, Fm,            //
      0.5 * Gu, Fm, G;
  const double det = E * G - Fm * Fm;
  if (!(det > 0.0)) {
    throw DegenerateImmersion("degenerate induced metric at theta=" +
                              std::to_string(theta));
  }
  return (m1.determinant() - m2.determinant()) / (det * det);
}

double gauss_curvature(const SurfaceData& surface, const MetricField& metric,
                       std::size_t node) {
  const auto& grid = surface.grid();
  return gauss_curvature(surface.immersion(), metric, grid.node_theta(node),
                         grid.node_phi(node));
}

std::vector<double> area_weights(const SurfaceData& surface,
                                 const MetricField& metric) {
  const auto& grid = surface.grid();
  std::vector<double> w(grid.size());
  for (std::size_t n = 0; n < w.size(); ++n) {
    const Mat2 g = induced_metric(surface.immersion(), metric,
                                  grid.node_theta(n), grid.node_phi(n));
    w[n] = grid.node_weight(n) * std::sqrt(g.determinant());
  }
  return w;
}

double weighted_sum(std::span<const double> weights,
                    std::span<const double> values) {
  if (weights.size() != values.size()) {
    throw DomainError("integrand size does not match the quadrature grid");
  }
  CompensatedSum s;
  for (std::size_t n = 0; n < values.size(); ++n) {
    s.add(weights[n] * values[n]);
  }
  return s.value();
}

LorentzVector weighted_sum(std::span<const double> weights,
                           std::span<const LorentzVector> values) {
  if (weights.size() != values.size()) {
    throw DomainError("integrand size does not match the quadrature grid");
  }
  std::array<CompensatedSum, 4> s;
  for (std::size_t n = 0; n < values.size(); ++n) {
    for (int c = 0; c < 4; ++c) {
      s[c].add(weights[n] * values[n][c]);
    }
  }
  return {s[0].value(), s[1].value(), s[2].value(), s[3].value()};
}

double integrate(const SurfaceData& surface, const MetricField& metric,
                 std::span<const double> integrand) {
  return weighted_sum(area_weights(surface, metric), integrand);
}

LorentzVector integrate(const SurfaceData& surface, const MetricField& metric,
                        std::span<const LorentzVector> integrand) {
  return weighted_sum(area_weights(surface, metric), integrand);
}

IsometryMismatch verify_isometric(const SurfaceData& surface,
                                  const MetricField& metric) {
  const Parametrization& F0 = surface.embedding();
  const auto& grid = surface.grid();
  IsometryMismatch out;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double th = grid.node_theta(n), ph = grid.node_phi(n);
    const Mat2 g = induced_metric(surface.immersion(), metric, th, ph);
    const Mat2 g0 = induced_metric(F0, surface.embedding_metric(), th, ph);
    const double diff = (g - g0).cwiseAbs().maxCoeff();
    out.absolute = std::max(out.absolute, diff);
    out.relative = std::max(out.relative, diff / g.cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace qlm::geometry
