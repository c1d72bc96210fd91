#pragma once

// Imaginary Killing spinors of H^3 (k = 1) in the ball model, built from a
// 2x2 representation of the Clifford algebra of R^3.

#include "qlm/hypgeom.hpp"
#include "qlm/lorentz.hpp"
#include "qlm/random.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qlm::spinor {

using Complex = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;

class SpinorValue {
 public:
  SpinorValue() = default;
  /// InvariantError on non-finite components.
  explicit SpinorValue(const Eigen::Vector2cd& c);
  SpinorValue(Complex a0, Complex a1);

  const Eigen::Vector2cd& components() const noexcept { return c_; }
  Complex operator[](int i) const noexcept { return c_[i]; }
  /// |a|^2
  double norm2() const noexcept { return c_.squaredNorm(); }

  friend SpinorValue operator*(Complex s, const SpinorValue& a) {
    return SpinorValue(s * a.c_);
  }

 private:
  Eigen::Vector2cd c_ = Eigen::Vector2cd::Zero();
};

/// The two families of Killing spinors, psi^+ and psi^-.
enum class Branch : int { Plus = 1, Minus = -1 };

struct CliffordRep {
  std::array<Mat2c, 3> gamma;  // gamma_j = s_gamma * i * sigma_j
  int s_gamma = 1;
  int s_zeta = 1;  // applied to the spatial part of zeta

  /// gamma(x) = sum_j x_j gamma_j
  Mat2c gamma_of(const Vec3& x) const;
};

/// Representation with explicit signs; DomainError unless both are +-1.
CliffordRep make_clifford_rep(int s_gamma, int s_zeta);

/// The calibrated representation.
const CliffordRep& clifford_rep();

struct CalibrationCandidate {
  int s_gamma;
  int s_zeta;
  double max_residual;  // max zet residual over samples and both branches
  bool future_directed;
  bool accepted;
};

/// Tries the four sign choices against the zet identity on `samples` seeded
/// random (a, x). CalibrationFailure if none passes.
std::array<CalibrationCandidate, 4> calibrate(std::uint64_t seed,
                                              std::size_t samples = 1000,
                                              double tol = 1e-12);

/// Clifford relation residual max |gamma_i gamma_j + gamma_j gamma_i + 2 delta_ij|.
double clifford_residual(const CliffordRep& rep);
/// max_j max |gamma_j + gamma_j^dagger|
double skew_hermitian_residual(const CliffordRep& rep);

/// psi = f(x)^{1/2} (Id +- i gamma(x)) a. DomainError unless p.k() == 1.
SpinorValue killing_spinor(const SpinorValue& a, const BallPoint& p,
                           Branch branch,
                           const CliffordRep& rep = clifford_rep());

/// Null vector with spatial part s_zeta (-+ i <gamma_j a, a>) and time part
/// +|a|^2, so that |psi|^2 = -2 <X, zeta>.
LorentzVector zeta_of(const SpinorValue& a, Branch branch,
                      const CliffordRep& rep = clifford_rep());

/// | |psi(p)|^2 + 2 <X(p), zeta_a> |
double verify_zet(const SpinorValue& a, const BallPoint& p, Branch branch,
                  const CliffordRep& rep = clifford_rep());

/// Unit spinor a with zeta_of(a) = zeta / zeta_t. NotNull if
/// |<zeta,zeta>| > tol |zeta|^2; DomainError unless zeta is future directed.
SpinorValue null_to_spinor(const LorentzVector& zeta, Branch branch,
                           const CliffordRep& rep = clifford_rep(),
                           double tol = 1e-10);

/// Components with real and imaginary parts uniform in [-1, 1].
SpinorValue random_spinor(SeededRng& rng);
/// Uniform in the ball |x| < max_radius (k = 1).
BallPoint random_ball_point(SeededRng& rng, double max_radius = 0.9);

struct SpinorCheck {
  std::size_t count = 0;
  double max_zet_residual = 0.0;
  double max_round_trip_residual = 0.0;
};

/// `count` seeded (a, x, branch) zet samples and `count` random null round
/// trips.
SpinorCheck run_spinor_check(std::uint64_t seed, std::size_t count,
                             const CliffordRep& rep = clifford_rep());

/// max |zeta_of(null_to_spinor(z)) - z/z_t|_inf over the given null vectors.
double round_trip_residual(std::span<const LorentzVector> nulls, Branch branch,
                           const CliffordRep& rep = clifford_rep());

}  // namespace qlm::spinor
