#include "qlm/error.hpp"
#include "qlm/random.hpp"
#include "qlm/simd/kernels.hpp"

#include <doctest.h>

#include <cstring>
#include <vector>

using namespace qlm;
using namespace qlm::simd;

namespace {

std::vector<double> random_values(SeededRng& rng, std::size_t n, double lo,
                                  double hi) {
  std::vector<double> v(n);
  for (auto& x : v) {
    x = rng.uniform(lo, hi);
  }
  return v;
}

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

std::vector<Backend> available() {
  std::vector<Backend> out{Backend::Scalar};
  if (backend_available(Backend::Avx2)) {
    out.push_back(Backend::Avx2);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(backend_available(Backend::Scalar));
  CHECK(to_string(Backend::Scalar) == "scalar");
  CHECK(to_string(Backend::Avx2) == "avx2");
}

TEST_CASE("every backend matches the scalar reference bit for bit") {
  const KernelTable& ref = kernels(Backend::Scalar);
  SeededRng rng(2024);
  for (Backend b : available()) {
    CAPTURE(to_string(b));
    const KernelTable& k = kernels(b);
    for (std::size_t n = 1; n <= 41; ++n) {
      const auto x1 = random_values(rng, n, -3, 3);
      const auto x2 = random_values(rng, n, -3, 3);
      const auto x3 = random_values(rng, n, -3, 3);
      const auto t = random_values(rng, n, 0.5, 3);
      const LorentzSoA soa{x1, x2, x3, t};
      const std::array<double, 4> v{rng.uniform(-2, 2), rng.uniform(-2, 2),
                                    rng.uniform(-2, 2), rng.uniform(-2, 2)};

      const Extrema e0 = ref.pairing_extrema(v, soa);
      const Extrema e1 = k.pairing_extrema(v, soa);
      CHECK(same_bits(e0.min, e1.min));
      CHECK(same_bits(e0.max, e1.max));

      std::vector<double> p0(n), p1(n);
      ref.pairings(v, soa, p0);
      k.pairings(v, soa, p1);

      const auto h = random_values(rng, n, 0.1, 2);
      const auto h0 = random_values(rng, n, 0.1, 2);
      const auto w = random_values(rng, n, 0.0, 1);
      std::vector<double> m0(n), m1(n), d0(n), d1(n);
      ref.mass_density(h, h0, w, m0);
      k.mass_density(h, h0, w, m1);
      ref.mean_curvature_deficit(h, h0, w, d0);
      k.mean_curvature_deficit(h, h0, w, d1);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(same_bits(p0[i], p1[i]));
        CHECK(same_bits(m0[i], m1[i]));
        CHECK(same_bits(d0[i], d1[i]));
      }
    }
  }
}

TEST_CASE("scalar kernels match direct formulas") {
  const KernelTable& k = kernels(Backend::Scalar);
  const std::vector<double> x1{1, 0}, x2{0, 2}, x3{0, 0}, t{1, 3};
  const std::array<double, 4> v{2, 1, 0, 1};
  std::vector<double> out(2);
  k.pairings(v, {x1, x2, x3, t}, out);
  CHECK(out[0] == 1.0);   // 2 - 1
  CHECK(out[1] == -1.0);  // 2 - 3
  const Extrema e = k.pairing_extrema(v, {x1, x2, x3, t});
  CHECK(e.min == -1.0);
  CHECK(e.max == 1.0);

  const std::vector<double> h{2.0}, h0{3.0}, w{0.5};
  std::vector<double> m(1), d(1);
  k.mass_density(h, h0, w, m);
  k.mean_curvature_deficit(h, h0, w, d);
  CHECK(m[0] == 0.5 * (5.0 / 2.0));
  CHECK(d[0] == 0.5);
}

TEST_CASE("backend selection switches the dispatched table") {
  const Backend original = active_backend();
  select_backend(Backend::Scalar);
  CHECK(active_backend() == Backend::Scalar);
  CHECK(&kernels() == &kernels(Backend::Scalar));
  if (backend_available(Backend::Avx2)) {
    select_backend(Backend::Avx2);
    CHECK(&kernels() == &kernels(Backend::Avx2));
  } else {
    CHECK_THROWS_AS(select_backend(Backend::Avx2), DomainError);
  }
  select_backend(original);
}
