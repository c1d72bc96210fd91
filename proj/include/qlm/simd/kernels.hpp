#pragma once

// Batched arithmetic kernels with a scalar reference and SIMD variants.
//
// Every variant performs the same IEEE operations in the same order per
// element (no FMA contraction, no reassociation across elements), so results
// are bit-identical across backends. The equivalence tests rely on this.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace qlm::simd {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;

struct Extrema {
  double min;
  double max;
};

/// Read-only structure-of-arrays view over Lorentz vectors.
struct LorentzSoA {
  std::span<const double> x1, x2, x3, t;
  std::size_t size() const noexcept { return t.size(); }
};

struct KernelTable {
  /// min/max over i of  ((v1*x1[i] + v2*x2[i]) + v3*x3[i]) - vt*t[i].
  /// Requires a non-empty batch.
  Extrema (*pairing_extrema)(const std::array<double, 4>& v,
                             const LorentzSoA& batch);

  /// out[i] = ((v1*x1[i] + v2*x2[i]) + v3*x3[i]) - vt*t[i]
  void (*pairings)(const std::array<double, 4>& v, const LorentzSoA& batch,
                   std::span<double> out);

  /// out[i] = w[i] * ((h0[i]*h0[i] - h[i]*h[i]) / h[i])
  void (*mass_density)(std::span<const double> h, std::span<const double> h0,
                       std::span<const double> w, std::span<double> out);

  /// out[i] = w[i] * (h0[i] - h[i])
  void (*mean_curvature_deficit)(std::span<const double> h,
                                 std::span<const double> h0,
                                 std::span<const double> w,
                                 std::span<double> out);
};

/// Whether `b` is compiled in and supported by the running CPU.
bool backend_available(Backend b) noexcept;

/// Best available backend, detected once on first use unless overridden.
Backend active_backend() noexcept;

/// Force a backend; throws DomainError if it is unavailable.
void select_backend(Backend b);

const KernelTable& kernels() noexcept;
const KernelTable& kernels(Backend b);

namespace scalar {
const KernelTable& table() noexcept;
}
#if defined(QLM_HAVE_AVX2_KERNELS)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif

}  // namespace qlm::simd
