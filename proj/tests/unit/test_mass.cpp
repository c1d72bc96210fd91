#include "qlm/error.hpp"
#include "qlm/geometry/surface.hpp"
#include "qlm/mass.hpp"
#include "qlm/simd/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

using namespace qlm;
using namespace qlm::geometry;
using namespace qlm::mass;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadratureGrid kGrid(16, 32);

double ads_energy_oracle(double m, double r) {
  const double V = 1.0 + r * r - 2.0 * m / r;
  return 8.0 * kPi * m * std::sqrt(1.0 + r * r) / std::sqrt(V);
}

SpherePolynomial bumpy_profile() {
  SpherePolynomial rho;
  rho.constant = 1.0;
  rho.linear = Vec3(0.05, 0.0, -0.08);
  rho.quadratic(0, 2) = 0.04;
  return rho;
}

}  // namespace

TEST_CASE("rigidity: E vanishes when F = F0") {
  const auto h3 = MetricField::hyperbolic_ball(1.0);
  CHECK(energy_momentum(geodesic_sphere(1.0, 1.0, kGrid), h3).max_abs() < 1e-12);
  CHECK(energy_momentum(geodesic_sphere(0.7, 1.0, kGrid, Vec3(0.2, 0.1, -0.3)), h3)
            .max_abs() < 1e-12);
  CHECK(energy_momentum(radial_profile_surface(bumpy_profile(), 1.0, kGrid), h3)
            .max_abs() < 1e-12);
  // m = 0 is H^3 itself
  const auto ads0 = MetricField::ads_schwarzschild(0.0, 1.0);
  CHECK(energy_momentum(coordinate_sphere(2.0, 1.0, kGrid), ads0).max_abs() < 1e-9);
}

TEST_CASE("AdS-Schwarzschild coordinate spheres") {
  for (double m : {0.05, 0.1}) {
    const auto ads = MetricField::ads_schwarzschild(m, 1.0);
    for (double r : {1.0, 2.0, 4.0}) {
      CAPTURE(m);
      CAPTURE(r);
      const LorentzVector E = energy_momentum(coordinate_sphere(r, 1.0, kGrid), ads);
      const double oracle = ads_energy_oracle(m, r);
      // H0^2 - H^2 = 2m/r^3 cancels about log10(r^3/2m) digits of H
      CHECK(std::abs(E.time() - oracle) < 1e-8 * oracle);
      CHECK(E.spatial().cwiseAbs().maxCoeff() < 1e-9);
      CHECK(classify(E, 1e-12) == CausalClass::TimelikeFuture);
    }
  }
}

TEST_CASE("Euclidean coordinate spheres have future timelike E") {
  // H = 1/r, H0 = sqrt(1 + r^2)/r, so the density is r and E_t = 4 pi r^3 cosh(rho).
  const auto e3 = MetricField::euclidean();
  for (double r : {0.5, 1.0, 3.0}) {
    const LorentzVector E = energy_momentum(coordinate_sphere(r, 1.0, kGrid), e3);
    const double oracle = 4.0 * kPi * r * r * r * std::sqrt(1.0 + r * r);
    CHECK(std::abs(E.time() - oracle) < 1e-9 * oracle);
    CHECK(E.spatial().cwiseAbs().maxCoeff() < 1e-9);
    CHECK(classify(E, 1e-12) == CausalClass::TimelikeFuture);
  }
}

TEST_CASE("boundary data errors") {
  const auto h3 = MetricField::hyperbolic_ball(1.0);
  const auto s = geodesic_sphere(1.0, 1.0, kGrid);
  CHECK_THROWS_AS(boundary_data(s.reversed(), h3), NonPositiveMeanCurvature);
  MassOptions lax;
  lax.require_positive_h = false;
  CHECK_NOTHROW(boundary_data(s.reversed(), h3, lax));

  const auto wang = MetricField::wang_ah(AHTensor::multiple_of_round(1.0));
  CHECK_THROWS_AS(boundary_data(ah_level_set(0.2, kGrid), wang), MissingEmbedding);

  const auto ads = MetricField::ads_schwarzschild(0.1, 1.0);
  const SurfaceData mismatched =
      SurfaceData(sphere_parametrization(Vec3::Zero(), 2.0),
                  NormalSide::AgainstCross, kGrid, 1.0)
          .with_embedding(ball_geodesic_sphere(std::asinh(2.1), 1.0));
  CHECK_THROWS_AS(boundary_data(mismatched, ads), IsometryViolation);
  MassOptions no_iso;
  no_iso.require_isometry = false;
  CHECK(boundary_data(mismatched, ads, no_iso).isometry_mismatch ==
        doctest::Approx(0.1025).epsilon(1e-9));
}

TEST_CASE("Shi-Tam alpha") {
  CHECK(shi_tam_alpha(1.0, 1.0) == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-15));
  const double s1 = std::sinh(1.0), s2 = std::sinh(2.0);
  CHECK(shi_tam_alpha(1.0, 2.0) ==
        doctest::Approx(1.0 / std::tanh(1.0) + std::sqrt(s2 * s2 / (s1 * s1) - 1.0) / s1)
            .epsilon(1e-15));
  for (double r1 = 0.1; r1 < 5.0; r1 += 0.3) {
    double prev = 0.0;
    for (double r2 = r1; r2 < 6.0; r2 += 0.25) {
      const double a = shi_tam_alpha(r1, r2);
      CHECK(a > 1.0);
      CHECK(a > prev);
      prev = a;
    }
  }
  CHECK_THROWS_AS(shi_tam_alpha(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(shi_tam_alpha(2.0, 1.0), DomainError);
}

TEST_CASE("Shi-Tam vector") {
  const double m = 0.1;
  const auto ads = MetricField::ads_schwarzschild(m, 1.0);
  const auto s = coordinate_sphere(2.0, 1.0, kGrid);
  const BoundaryData d = boundary_data(s, ads);

  // brute force over the forms
  const auto forms = evaluate_immersion(s, ads);
  const auto forms0 = evaluate_embedding(s);
  const auto w = area_weights(s, ads);
  const double alpha = shi_tam_alpha(1.0, 1.5);
  Vec3 spatial = Vec3::Zero();
  double time = 0.0;
  for (std::size_t n = 0; n < kGrid.size(); ++n) {
    const double dh = forms0[n].mean_curvature - forms[n].mean_curvature;
    spatial += w[n] * dh * d.position[n].spatial();
    time += w[n] * dh * alpha * d.position[n].time();
  }
  const LorentzVector M = shi_tam_vector(d, alpha);
  CHECK(std::abs(M.time() - time) < 1e-10 * std::abs(time));
  CHECK((M.spatial() - spatial).cwiseAbs().maxCoeff() < 1e-10);

  // closed form: (H0 - H) 4 pi r^2 alpha cosh(rho)
  const double r = 2.0, V = 1.0 + r * r - 2.0 * m / r;
  const double closed =
      (std::sqrt(1.0 + r * r) - std::sqrt(V)) / r * 4.0 * kPi * r * r * alpha *
      std::sqrt(1.0 + r * r);
  CHECK(std::abs(M.time() - closed) < 1e-9 * closed);

  CHECK(shi_tam_vector(d, 1.0).time() < shi_tam_vector(d, 2.0).time());
  CHECK_THROWS_AS(shi_tam_vector(d, 0.5), DomainError);
}

TEST_CASE("Wang mass of pure-trace tensors") {
  const QuadratureGrid grid(16, 32);
  const LorentzVector round = wang_mass(AHTensor::multiple_of_round(1.5), grid);
  CHECK(round.time() == doctest::Approx(4.0 * kPi * 3.0).epsilon(1e-13));
  CHECK(round.spatial().cwiseAbs().maxCoeff() < 1e-13);

  SpherePolynomial x3;
  x3.linear = Vec3(0, 0, 1);
  const LorentzVector dipole = wang_mass(AHTensor::with_trace(x3), grid);
  CHECK(std::abs(dipole.time()) < 1e-13);
  CHECK(dipole[2] == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-13));

  const UpsilonDisplay u = to_display(round);
  CHECK(u.scalar == round.time());
  CHECK((from_display(u) - round).max_abs() == 0.0);
  const UpsilonDisplay v{2.0, Vec3(1, 2, 3)};
  CHECK(from_display(v).time() == 2.0);
  CHECK(from_display(v)[0] == 1.0);
}

TEST_CASE("Killing-weighted mass agrees with E paired against zeta") {
  // int rho |psi_a|^2 = -2 <E, zeta_a>
  const auto ads = MetricField::ads_schwarzschild(0.1, 1.0);
  const auto e3 = MetricField::euclidean();
  const auto h3 = MetricField::hyperbolic_ball(1.0);
  struct Case {
    SurfaceData surface;
    const MetricField* ambient;
  };
  const Case cases[] = {
      {coordinate_sphere(2.0, 1.0, kGrid), &ads},
      {coordinate_sphere(1.0, 1.0, kGrid), &e3},
      {SurfaceData(ball_radial_parametrization(bumpy_profile(), 1.0),
                   NormalSide::AgainstCross, kGrid, 1.0)
           .with_embedding(ball_radial_parametrization(SpherePolynomial::constant_value(1.0), 1.0)),
       &h3},
  };
  SeededRng rng(5);
  for (const auto& c : cases) {
    MassOptions lax;
    lax.require_isometry = false;  // the third case is not isometric
    const BoundaryData d = boundary_data(c.surface, *c.ambient, lax);
    const LorentzVector E = energy_momentum(d);
    for (int i = 0; i < 50; ++i) {
      const spinor::SpinorValue a = spinor::random_spinor(rng);
      for (spinor::Branch b : {spinor::Branch::Plus, spinor::Branch::Minus}) {
        const double lhs = killing_weighted_mass(d, a, b);
        const double rhs = -2.0 * minkowski_inner(E, spinor::zeta_of(a, b));
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
        const double scaled = killing_weighted_mass(d, spinor::Complex{2.0} * a, b);
        CHECK(std::abs(scaled - 4.0 * lhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
  CHECK_THROWS_AS(
      killing_weighted_mass(boundary_data(geodesic_sphere(1.0, 2.0, kGrid),
                                          MetricField::hyperbolic_ball(2.0)),
                            spinor::SpinorValue(1.0, 0.0), spinor::Branch::Plus),
      DomainError);
}

TEST_CASE("null pairings characterize future timelike E") {
  const auto ads = MetricField::ads_schwarzschild(0.1, 1.0);
  const LorentzVector E = energy_momentum(coordinate_sphere(2.0, 1.0, kGrid), ads);
  const auto samples = sample_null_cone(500);
  double worst = INFINITY;
  for (const auto& z : samples) {
    worst = std::min(worst, -minkowski_inner(E, z));
  }
  CHECK(worst > 0.0);
  CHECK(classify_by_null_pairings(E, samples, 1e-12));
  CHECK(classify(E, 1e-12) == CausalClass::TimelikeFuture);
}

TEST_CASE("Killing-weighted mass is positive on every null direction iff E is future timelike") {
  const auto samples = sample_null_cone(500);
  auto all_positive = [&](const BoundaryData& d) {
    for (const auto& z : samples) {
      for (spinor::Branch b : {spinor::Branch::Plus, spinor::Branch::Minus}) {
        if (!(killing_weighted_mass(d, spinor::null_to_spinor(z, b), b) > 0.0)) {
          return false;
        }
      }
    }
    return true;
  };
  const auto ads = MetricField::ads_schwarzschild(0.1, 1.0);
  const BoundaryData timelike = boundary_data(coordinate_sphere(2.0, 1.0, kGrid), ads);
  CHECK(classify(energy_momentum(timelike), 1e-12) == CausalClass::TimelikeFuture);
  CHECK(all_positive(timelike));

  const auto h3 = MetricField::hyperbolic_ball(1.0);
  const BoundaryData zero = boundary_data(geodesic_sphere(1.0, 1.0, kGrid), h3);
  CHECK(classify(energy_momentum(zero), 1e-12) == CausalClass::ZeroVector);
  CHECK_FALSE(all_positive(zero));
}

TEST_CASE("E is bitwise identical across SIMD backends") {
  if (!simd::backend_available(simd::Backend::Avx2)) {
    return;
  }
  const auto ads = MetricField::ads_schwarzschild(0.1, 1.0);
  const BoundaryData d = boundary_data(coordinate_sphere(2.0, 1.0, kGrid), ads);
  const simd::Backend original = simd::active_backend();
  simd::select_backend(simd::Backend::Scalar);
  const LorentzVector a = energy_momentum(d);
  const LorentzVector ma = shi_tam_vector(d, 1.5);
  simd::select_backend(simd::Backend::Avx2);
  const LorentzVector b = energy_momentum(d);
  const LorentzVector mb = shi_tam_vector(d, 1.5);
  simd::select_backend(original);
  auto same_bits = [](double x, double y) {
    return std::memcmp(&x, &y, sizeof x) == 0;
  };
  for (int i = 0; i < 4; ++i) {
    CHECK(same_bits(a[i], b[i]));
    CHECK(same_bits(ma[i], mb[i]));
  }
}

TEST_CASE("hypothesis checks") {
  const auto h3 = MetricField::hyperbolic_ball(1.0);
  const auto good = check_hypotheses(geodesic_sphere(1.0, 1.0, kGrid), h3);
  CHECK(good.all_ok());
  CHECK(good.scalar_samples == 256);
  CHECK(good.min_h == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-8));
  CHECK(good.isometry_mismatch == 0.0);

  const auto flipped = check_hypotheses(geodesic_sphere(1.0, 1.0, kGrid).reversed(), h3);
  CHECK_FALSE(flipped.h_positive());
  CHECK(flipped.gauss_ok());
  CHECK_FALSE(flipped.all_ok());

  // truncated WangAH metric with tr h = x3 has R + 6 < 0 near r = 0.2
  SpherePolynomial x3;
  x3.linear = Vec3(0, 0, 1);
  const auto dipole = MetricField::wang_ah(AHTensor::with_trace(x3));
  const auto c = check_hypotheses(ah_level_set(0.2, kGrid), dipole);
  CHECK(c.h_positive());
  CHECK_FALSE(c.scalar_ok());
  CHECK(c.min_scalar_plus_6k2 < -1e-5);

  const auto round = MetricField::wang_ah(AHTensor::multiple_of_round(1.0));
  CHECK(check_hypotheses(ah_level_set(0.2, kGrid), round).all_ok());
}
