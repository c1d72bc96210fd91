#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace qlm::geometry {

/// Gauss-Legendre nodes (descending, exactly antisymmetric) and weights on
/// [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    std::size_t n);

/// Tensor grid on the (theta, phi) parameter square: Gauss-Legendre in
/// cos(theta), uniform trapezoid in phi. Poles are never nodes.
///
/// `weight(i, j)` integrates in parameter space, i.e. it already contains the
/// 1/sin(theta) Jacobian of u = cos(theta); multiplying by the area density
/// sqrt(det g_ab) gives the surface measure. For the round unit sphere the
/// weighted densities sum to 4 pi.
class QuadratureGrid {
 public:
  QuadratureGrid(std::size_t n_theta, std::size_t n_phi);

  std::size_t n_theta() const noexcept { return n_theta_; }
  std::size_t n_phi() const noexcept { return n_phi_; }
  std::size_t size() const noexcept { return n_theta_ * n_phi_; }

  double theta(std::size_t i) const noexcept { return theta_[i]; }
  double phi(std::size_t j) const noexcept { return phi_[j]; }
  double weight(std::size_t i, std::size_t j) const noexcept {
    static_cast<void>(j);
    return weight_[i];
  }

  // Nodes are flattened row-major: node = i * n_phi + j.
  std::size_t theta_index(std::size_t node) const noexcept {
    return node / n_phi_;
  }
  std::size_t phi_index(std::size_t node) const noexcept {
    return node % n_phi_;
  }
  double node_theta(std::size_t node) const noexcept {
    return theta_[theta_index(node)];
  }
  double node_phi(std::size_t node) const noexcept {
    return phi_[phi_index(node)];
  }
  double node_weight(std::size_t node) const noexcept {
    return weight_[theta_index(node)];
  }

 private:
  std::size_t n_theta_;
  std::size_t n_phi_;
  std::vector<double> theta_;
  std::vector<double> phi_;
  std::vector<double> weight_;
};

}  // namespace qlm::geometry
