#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qlm {

using Vec3 = Eigen::Vector3d;

/// Element of Minkowski space R^{3,1}, stored as (x1, x2, x3 | t).
///
/// The inner product has signature (+,+,+,-). Components are finite on
/// construction; arithmetic afterwards is unchecked.
class LorentzVector {
 public:
  LorentzVector() = default;
  LorentzVector(double x1, double x2, double x3, double t);
  LorentzVector(const Vec3& spatial, double t);

  const Vec3& spatial() const noexcept { return spatial_; }
  double time() const noexcept { return time_; }

  /// Components 0..2 spatial, 3 time.
  double operator[](int i) const noexcept {
    return i == 3 ? time_ : spatial_[i];
  }

  /// max(|x1|, |x2|, |x3|, |t|)
  double max_abs() const noexcept;
  /// Euclidean sum of squares of all four components.
  double euclidean_norm2() const noexcept;

  LorentzVector& operator+=(const LorentzVector& o) noexcept {
    spatial_ += o.spatial_;
    time_ += o.time_;
    return *this;
  }
  LorentzVector& operator-=(const LorentzVector& o) noexcept {
    spatial_ -= o.spatial_;
    time_ -= o.time_;
    return *this;
  }
  LorentzVector& operator*=(double s) noexcept {
    spatial_ *= s;
    time_ *= s;
    return *this;
  }

  friend LorentzVector operator+(LorentzVector a, const LorentzVector& b) {
    return a += b;
  }
  friend LorentzVector operator-(LorentzVector a, const LorentzVector& b) {
    return a -= b;
  }
  friend LorentzVector operator*(double s, LorentzVector v) { return v *= s; }
  friend LorentzVector operator*(LorentzVector v, double s) { return v *= s; }

 private:
  Vec3 spatial_{0.0, 0.0, 0.0};
  double time_ = 0.0;
};

enum class CausalClass {
  ZeroVector,
  TimelikeFuture,
  TimelikePast,
  NullFuture,
  NullPast,
  Spacelike,
};

std::string_view to_string(CausalClass c) noexcept;

/// <u, v> = u1 v1 + u2 v2 + u3 v3 - ut vt
double minkowski_inner(const LorentzVector& u, const LorentzVector& v) noexcept;

/// Causal character of `v`. Zero when every component is within `tol`;
/// otherwise |<v,v>| <= tol * |v|^2 (Euclidean) counts as null, and the sign
/// of the time component selects future or past.
CausalClass classify(const LorentzVector& v, double tol);

/// `m` future null vectors (zeta, 1) with |zeta| = 1, zeta on a Fibonacci
/// spiral starting at the north pole.
std::vector<LorentzVector> sample_null_cone(std::size_t m);

/// Null directions in structure-of-arrays form for the batched pairing
/// kernels.
class NullSampleSet {
 public:
  NullSampleSet() = default;
  explicit NullSampleSet(std::span<const LorentzVector> samples);

  std::size_t size() const noexcept { return t_.size(); }
  bool empty() const noexcept { return t_.empty(); }

  std::span<const double> x1() const noexcept { return x1_; }
  std::span<const double> x2() const noexcept { return x2_; }
  std::span<const double> x3() const noexcept { return x3_; }
  std::span<const double> t() const noexcept { return t_; }

 private:
  std::vector<double> x1_, x2_, x3_, t_;
};

struct PairingRange {
  double min = 0.0;
  double max = 0.0;
};

/// min and max of <v, zeta> over the sample set.
PairingRange null_pairing_range(const LorentzVector& v,
                                const NullSampleSet& samples);

/// True iff <v, zeta> < -tol for every sample. A sampled sufficient test for
/// TimelikeFuture; null-future vectors sit on its boundary.
bool classify_by_null_pairings(const LorentzVector& v,
                               const NullSampleSet& samples, double tol);
bool classify_by_null_pairings(const LorentzVector& v,
                               std::span<const LorentzVector> samples,
                               double tol);

}  // namespace qlm
