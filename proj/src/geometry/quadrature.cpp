#include "qlm/geometry/quadrature.hpp"

#include "qlm/error.hpp"

#include <cmath>
#include <numbers>

namespace qlm::geometry {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    std::size_t n) {
  if (n == 0) {
    throw DomainError("gauss_legendre: need at least one node");
  }
  std::vector<double> x(n), w(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * z * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        break;
      }
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) {
    x[n / 2] = 0.0;
  }
  return {x, w};
}

QuadratureGrid::QuadratureGrid(std::size_t n_theta, std::size_t n_phi)
    : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta == 0 || n_phi == 0) {
    throw DomainError("QuadratureGrid: resolution must be positive");
  }
  const auto [u, w] = gauss_legendre(n_theta);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n_phi);
  theta_.resize(n_theta);
  weight_.resize(n_theta);
  for (std::size_t i = 0; i < n_theta; ++i) {
    theta_[i] = std::acos(u[i]);
    weight_[i] = w[i] * dphi / std::sqrt(1.0 - u[i] * u[i]);
  }
  phi_.resize(n_phi);
  for (std::size_t j = 0; j < n_phi; ++j) {
    phi_[j] = dphi * static_cast<double>(j);
  }
}

}  // namespace qlm::geometry
