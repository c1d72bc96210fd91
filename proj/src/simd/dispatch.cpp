#include "qlm/error.hpp"
#include "qlm/simd/kernels.hpp"

#include <atomic>

namespace qlm::simd {
namespace {

Backend detect() noexcept {
#if defined(QLM_HAVE_AVX2_KERNELS)
  if (__builtin_cpu_supports("avx2")) {
    return Backend::Avx2;
  }
#endif
  return Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(QLM_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() noexcept { return current().load(); }

void select_backend(Backend b) {
  if (!backend_available(b)) {
    throw DomainError("kernel backend '" + std::string(to_string(b)) +
                      "' is not available on this machine");
  }
  current().store(b);
}

const KernelTable& kernels(Backend b) {
  if (!backend_available(b)) {
    throw DomainError("kernel backend '" + std::string(to_string(b)) +
                      "' is not available on this machine");
  }
#if defined(QLM_HAVE_AVX2_KERNELS)
  if (b == Backend::Avx2) {
    return avx2::table();
  }
#endif
  return scalar::table();
}

const KernelTable& kernels() noexcept {
#if defined(QLM_HAVE_AVX2_KERNELS)
  if (current().load() == Backend::Avx2) {
    return avx2::table();
  }
#endif
  return scalar::table();
}

}  // namespace qlm::simd
