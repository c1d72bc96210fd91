#include "qlm/simd/kernels.hpp"

#include <algorithm>

namespace qlm::simd::scalar {
namespace {

inline double pair(const std::array<double, 4>& v, double x1, double x2,
                   double x3, double t) {
  return ((v[0] * x1 + v[1] * x2) + v[2] * x3) - v[3] * t;
}

Extrema pairing_extrema(const std::array<double, 4>& v,
                        const LorentzSoA& batch) {
  const std::size_t n = batch.size();
  double lo = pair(v, batch.x1[0], batch.x2[0], batch.x3[0], batch.t[0]);
  double hi = lo;
  for (std::size_t i = 1; i < n; ++i) {
    const double p = pair(v, batch.x1[i], batch.x2[i], batch.x3[i], batch.t[i]);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

void pairings(const std::array<double, 4>& v, const LorentzSoA& batch,
              std::span<double> out) {
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out[i] = pair(v, batch.x1[i], batch.x2[i], batch.x3[i], batch.t[i]);
  }
}

void mass_density(std::span<const double> h, std::span<const double> h0,
                  std::span<const double> w, std::span<double> out) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    out[i] = w[i] * ((h0[i] * h0[i] - h[i] * h[i]) / h[i]);
  }
}

void mean_curvature_deficit(std::span<const double> h,
                            std::span<const double> h0,
                            std::span<const double> w, std::span<double> out) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    out[i] = w[i] * (h0[i] - h[i]);
  }
}

constexpr KernelTable kTable{pairing_extrema, pairings, mass_density,
                             mean_curvature_deficit};

}  // namespace

const KernelTable& table() noexcept { return kTable; }

}  // namespace qlm::simd::scalar
