#include "qlm/lorentz.hpp"

#include "qlm/error.hpp"
#include "qlm/simd/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qlm {
namespace {

void require_finite(double x1, double x2, double x3, double t) {
  if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3) ||
      !std::isfinite(t)) {
    throw InvariantError("LorentzVector components must be finite");
  }
}

std::array<double, 4> components(const LorentzVector& v) {
  return {v.spatial()[0], v.spatial()[1], v.spatial()[2], v.time()};
}

}  // namespace

LorentzVector::LorentzVector(double x1, double x2, double x3, double t)
    : spatial_(x1, x2, x3), time_(t) {
  require_finite(x1, x2, x3, t);
}

LorentzVector::LorentzVector(const Vec3& spatial, double t)
    : spatial_(spatial), time_(t) {
  require_finite(spatial[0], spatial[1], spatial[2], t);
}

double LorentzVector::max_abs() const noexcept {
  return std::max(spatial_.cwiseAbs().maxCoeff(), std::abs(time_));
}

double LorentzVector::euclidean_norm2() const noexcept {
  return spatial_.squaredNorm() + time_ * time_;
}

std::string_view to_string(CausalClass c) noexcept {
  switch (c) {
    case CausalClass::ZeroVector:
      return "ZeroVector";
    case CausalClass::TimelikeFuture:
      return "TimelikeFuture";
    case CausalClass::TimelikePast:
      return "TimelikePast";
    case CausalClass::NullFuture:
      return "NullFuture";
    case CausalClass::NullPast:
      return "NullPast";
    case CausalClass::Spacelike:
      return "Spacelike";
  }
  return "Unknown";
}

double minkowski_inner(const LorentzVector& u, const LorentzVector& v) noexcept {
  const Vec3& a = u.spatial();
  const Vec3& b = v.spatial();
  return ((a[0] * b[0] + a[1] * b[1]) + a[2] * b[2]) - u.time() * v.time();
}

CausalClass classify(const LorentzVector& v, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("classify: tolerance must be positive");
  }
  if (v.max_abs() <= tol) {
    return CausalClass::ZeroVector;
  }
  const double q = minkowski_inner(v, v);
  const double scale = tol * v.euclidean_norm2();
  const bool future = v.time() > 0.0;
  if (std::abs(q) <= scale) {
    return future ? CausalClass::NullFuture : CausalClass::NullPast;
  }
  if (q < 0.0) {
    return future ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
  }
  return CausalClass::Spacelike;
}

std::vector<LorentzVector> sample_null_cone(std::size_t m) {
  if (m == 0) {
    throw DomainError("sample_null_cone: need at least one sample");
  }
  // Golden-angle spiral; z runs from +1 to -1 inclusive so the first sample
  // is the north pole.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<LorentzVector> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double z =
        m == 1 ? 1.0
               : 1.0 - 2.0 * static_cast<double>(i) / static_cast<double>(m - 1);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    Vec3 dir(rho * std::cos(phi), rho * std::sin(phi), z);
    dir.normalize();
    out.emplace_back(dir, 1.0);
  }
  return out;
}

NullSampleSet::NullSampleSet(std::span<const LorentzVector> samples) {
  x1_.reserve(samples.size());
  x2_.reserve(samples.size());
  x3_.reserve(samples.size());
  t_.reserve(samples.size());
  for (const auto& s : samples) {
    x1_.push_back(s.spatial()[0]);
    x2_.push_back(s.spatial()[1]);
    x3_.push_back(s.spatial()[2]);
    t_.push_back(s.time());
  }
}

PairingRange null_pairing_range(const LorentzVector& v,
                                const NullSampleSet& samples) {
  if (samples.empty()) {
    throw DomainError("null pairing: empty sample set");
  }
  const simd::LorentzSoA soa{samples.x1(), samples.x2(), samples.x3(),
                             samples.t()};
  const auto e = simd::kernels().pairing_extrema(components(v), soa);
  return {e.min, e.max};
}

bool classify_by_null_pairings(const LorentzVector& v,
                               const NullSampleSet& samples, double tol) {
  return null_pairing_range(v, samples).max < -tol;
}

bool classify_by_null_pairings(const LorentzVector& v,
                               std::span<const LorentzVector> samples,
                               double tol) {
  return classify_by_null_pairings(v, NullSampleSet(samples), tol);
}

}  // namespace qlm
