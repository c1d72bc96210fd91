#include "qlm/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace qlm::simd::avx2 {
namespace {

// min/max here never see NaN (inputs are finite Lorentz components), so
// _mm256_min_pd/_mm256_max_pd agree with std::min/std::max.

struct Broadcast {
  __m256d v1, v2, v3, vt;
};

inline Broadcast broadcast(const std::array<double, 4>& v) {
  return {_mm256_set1_pd(v[0]), _mm256_set1_pd(v[1]), _mm256_set1_pd(v[2]),
          _mm256_set1_pd(v[3])};
}

inline __m256d pair4(const Broadcast& b, const LorentzSoA& batch,
                     std::size_t i) {
  const __m256d a = _mm256_mul_pd(b.v1, _mm256_loadu_pd(&batch.x1[i]));
  const __m256d c = _mm256_mul_pd(b.v2, _mm256_loadu_pd(&batch.x2[i]));
  const __m256d d = _mm256_mul_pd(b.v3, _mm256_loadu_pd(&batch.x3[i]));
  const __m256d e = _mm256_mul_pd(b.vt, _mm256_loadu_pd(&batch.t[i]));
  return _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(a, c), d), e);
}

inline double pair1(const std::array<double, 4>& v, const LorentzSoA& batch,
                    std::size_t i) {
  return ((v[0] * batch.x1[i] + v[1] * batch.x2[i]) + v[2] * batch.x3[i]) -
         v[3] * batch.t[i];
}

Extrema pairing_extrema(const std::array<double, 4>& v,
                        const LorentzSoA& batch) {
  const std::size_t n = batch.size();
  const Broadcast b = broadcast(v);
  std::size_t i = 0;
  double lo = pair1(v, batch, 0);
  double hi = lo;
  if (n >= 4) {
    __m256d vlo = pair4(b, batch, 0);
    __m256d vhi = vlo;
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d p = pair4(b, batch, i);
      vlo = _mm256_min_pd(vlo, p);
      vhi = _mm256_max_pd(vhi, p);
    }
    alignas(32) double l[4];
    alignas(32) double h[4];
    _mm256_store_pd(l, vlo);
    _mm256_store_pd(h, vhi);
    lo = std::min(std::min(l[0], l[1]), std::min(l[2], l[3]));
    hi = std::max(std::max(h[0], h[1]), std::max(h[2], h[3]));
  }
  for (; i < n; ++i) {
    const double p = pair1(v, batch, i);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

void pairings(const std::array<double, 4>& v, const LorentzSoA& batch,
              std::span<double> out) {
  const std::size_t n = batch.size();
  const Broadcast b = broadcast(v);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(&out[i], pair4(b, batch, i));
  }
  for (; i < n; ++i) {
    out[i] = pair1(v, batch, i);
  }
}

void mass_density(std::span<const double> h, std::span<const double> h0,
                  std::span<const double> w, std::span<double> out) {
  const std::size_t n = h.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vh = _mm256_loadu_pd(&h[i]);
    const __m256d vh0 = _mm256_loadu_pd(&h0[i]);
    const __m256d num =
        _mm256_sub_pd(_mm256_mul_pd(vh0, vh0), _mm256_mul_pd(vh, vh));
    const __m256d q = _mm256_div_pd(num, vh);
    _mm256_storeu_pd(&out[i], _mm256_mul_pd(_mm256_loadu_pd(&w[i]), q));
  }
  for (; i < n; ++i) {
    out[i] = w[i] * ((h0[i] * h0[i] - h[i] * h[i]) / h[i]);
  }
}

void mean_curvature_deficit(std::span<const double> h,
                            std::span<const double> h0,
                            std::span<const double> w, std::span<double> out) {
  const std::size_t n = h.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(&h0[i]), _mm256_loadu_pd(&h[i]));
    _mm256_storeu_pd(&out[i], _mm256_mul_pd(_mm256_loadu_pd(&w[i]), d));
  }
  for (; i < n; ++i) {
    out[i] = w[i] * (h0[i] - h[i]);
  }
}

constexpr KernelTable kTable{pairing_extrema, pairings, mass_density,
                             mean_curvature_deficit};

}  // namespace

const KernelTable& table() noexcept { return kTable; }

}  // namespace qlm::simd::avx2
