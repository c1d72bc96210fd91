#pragma once

#include "qlm/geometry/metric.hpp"
#include "qlm/geometry/profile.hpp"
#include "qlm/geometry/surface.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qlm::cli {

enum class AmbientType { Euclidean, HyperbolicBall, AdSSchwarzschild, WangAH };
enum class SurfaceType { GeodesicSphere, CoordinateSphere, RadialProfile, AHSphere };

struct AmbientSpec {
  AmbientType type = AmbientType::HyperbolicBall;
  double k = 1.0;
  double m = 0.0;
  double horizon_margin = 1e-2;
  geometry::AHTensor h;
  double e_scale = 0.0;
};

struct SurfaceSpec {
  SurfaceType type = SurfaceType::GeodesicSphere;
  double rho = 1.0;                      // geodesic_sphere
  Vec3 center_offset = Vec3::Zero();     // geodesic_sphere
  double r = 1.0;                        // coordinate_sphere, ah_sphere
  geometry::SpherePolynomial profile;    // radial_profile
};

struct Tolerances {
  double fd_step = 1e-4;
  double iso_tol = 1e-8;
  double causal_tol = 1e-12;
  double curvature_tol = 1e-6;
};

struct Outputs {
  bool m_alpha = false;
  bool upsilon = false;
  bool spinor_checks = false;
};

struct ScenarioConfig {
  AmbientSpec ambient;
  SurfaceSpec surface;
  std::optional<SurfaceSpec> embedding;
  bool reversed = false;
  std::size_t n_theta = 64;
  std::size_t n_phi = 128;
  Tolerances tolerances;
  Outputs outputs;
  std::vector<double> radii;
  std::uint64_t seed = 42;
};

/// Validates against the schema; ConfigError names the offending key.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::filesystem::path& path);

/// The fully resolved configuration, defaults filled in.
nlohmann::json to_json(const ScenarioConfig& c);

geometry::MetricField build_metric(const ScenarioConfig& c);

/// Surface with its hyperbolic image on the given grid. ConfigError for
/// surface types that do not fit the ambient.
geometry::SurfaceData build_surface(const ScenarioConfig& c,
                                    const geometry::QuadratureGrid& grid);

}  // namespace qlm::cli
