#include "qlm/cli/config.hpp"

#include "qlm/error.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string_view>

namespace qlm::cli {
namespace {

using json = nlohmann::json;

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ConfigError(path + ": expected an object");
  }
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
  require_object(j, path);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) {
      known = known || key == a;
    }
    if (!known) {
      throw ConfigError(path + ": unknown key \"" + key + "\"");
    }
  }
}

double get_number(const json& j, const std::string& key,
                  const std::string& path, double fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigError(path + "." + key + ": expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw ConfigError(path + "." + key + ": must be finite");
  }
  return d;
}

double get_positive(const json& j, const std::string& key,
                    const std::string& path, double fallback) {
  const double d = get_number(j, key, path, fallback);
  if (!(d > 0.0)) {
    throw ConfigError(path + "." + key + ": must be positive");
  }
  return d;
}

double require_positive(const json& j, const std::string& key,
                        const std::string& path) {
  if (!j.contains(key)) {
    throw ConfigError(path + ": missing \"" + key + "\"");
  }
  return get_positive(j, key, path, 0.0);
}

bool get_bool(const json& j, const std::string& key, const std::string& path,
              bool fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  if (!j.at(key).is_boolean()) {
    throw ConfigError(path + "." + key + ": expected true or false");
  }
  return j.at(key).get<bool>();
}

Vec3 get_vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError(path + ": expected an array of 3 numbers");
  }
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) {
      throw ConfigError(path + ": expected an array of 3 numbers");
    }
    v[i] = j[i].get<double>();
  }
  if (!v.allFinite()) {
    throw ConfigError(path + ": must be finite");
  }
  return v;
}

geometry::SpherePolynomial parse_polynomial(const json& j,
                                            const std::string& path) {
  check_keys(j, path, {"constant", "linear", "quadratic"});
  geometry::SpherePolynomial p;
  p.constant = get_number(j, "constant", path, 0.0);
  if (j.contains("linear")) {
    p.linear = get_vec3(j.at("linear"), path + ".linear");
  }
  if (j.contains("quadratic")) {
    const json& q = j.at("quadratic");
    const std::string qp = path + ".quadratic";
    if (!q.is_array() || q.size() != 3) {
      throw ConfigError(qp + ": expected a 3x3 array");
    }
    for (int r = 0; r < 3; ++r) {
      p.quadratic.row(r) = get_vec3(q[r], qp).transpose();
    }
  }
  return p;
}

json polynomial_json(const geometry::SpherePolynomial& p) {
  json q = json::array();
  for (int r = 0; r < 3; ++r) {
    q.push_back({p.quadratic(r, 0), p.quadratic(r, 1), p.quadratic(r, 2)});
  }
  return {{"constant", p.constant},
          {"linear", {p.linear[0], p.linear[1], p.linear[2]}},
          {"quadratic", q}};
}

AmbientSpec parse_ambient(const json& j) {
  const std::string path = "ambient";
  require_object(j, path);
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw ConfigError("ambient.type: expected a string");
  }
  const std::string type = j.at("type").get<std::string>();
  AmbientSpec a;
  if (type == "euclidean") {
    check_keys(j, path, {"type", "k"});
    a.type = AmbientType::Euclidean;
    a.k = get_positive(j, "k", path, 1.0);
  } else if (type == "hyperbolic_ball") {
    check_keys(j, path, {"type", "k"});
    a.type = AmbientType::HyperbolicBall;
    a.k = get_positive(j, "k", path, 1.0);
  } else if (type == "ads_schwarzschild") {
    check_keys(j, path, {"type", "m", "k", "horizon_margin"});
    a.type = AmbientType::AdSSchwarzschild;
    a.m = get_number(j, "m", path, 0.0);
    if (a.m < 0.0) {
      throw ConfigError("ambient.m: must be non-negative");
    }
    a.k = get_positive(j, "k", path, 1.0);
    a.horizon_margin = get_positive(j, "horizon_margin", path, 1e-2);
  } else if (type == "wang_ah") {
    check_keys(j, path, {"type", "h", "e_scale"});
    a.type = AmbientType::WangAH;
    a.k = 1.0;
    if (j.contains("h")) {
      const json& h = j.at("h");
      check_keys(h, "ambient.h", {"g0_multiple", "trace_profile"});
      a.h.g0_multiple = get_number(h, "g0_multiple", "ambient.h", 0.0);
      if (h.contains("trace_profile")) {
        a.h.trace_profile =
            parse_polynomial(h.at("trace_profile"), "ambient.h.trace_profile");
      }
    }
    a.e_scale = get_number(j, "e_scale", path, 0.0);
  } else {
    throw ConfigError("ambient.type: unknown type \"" + type + "\"");
  }
  return a;
}

SurfaceSpec parse_surface(const json& j, const std::string& path) {
  require_object(j, path);
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw ConfigError(path + ".type: expected a string");
  }
  const std::string type = j.at("type").get<std::string>();
  SurfaceSpec s;
  if (type == "geodesic_sphere") {
    check_keys(j, path, {"type", "rho", "center_offset"});
    s.type = SurfaceType::GeodesicSphere;
    s.rho = require_positive(j, "rho", path);
    if (j.contains("center_offset")) {
      s.center_offset = get_vec3(j.at("center_offset"), path + ".center_offset");
    }
  } else if (type == "coordinate_sphere") {
    check_keys(j, path, {"type", "r"});
    s.type = SurfaceType::CoordinateSphere;
    s.r = require_positive(j, "r", path);
  } else if (type == "radial_profile") {
    check_keys(j, path, {"type", "coefficients"});
    s.type = SurfaceType::RadialProfile;
    if (!j.contains("coefficients")) {
      throw ConfigError(path + ": missing \"coefficients\"");
    }
    s.profile = parse_polynomial(j.at("coefficients"), path + ".coefficients");
  } else if (type == "ah_sphere") {
    check_keys(j, path, {"type", "r"});
    s.type = SurfaceType::AHSphere;
    s.r = require_positive(j, "r", path);
  } else {
    throw ConfigError(path + ".type: unknown type \"" + type + "\"");
  }
  return s;
}

std::size_t get_count(const json& j, const std::string& key,
                      const std::string& path, std::size_t fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ConfigError(path + "." + key + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

std::string_view ambient_name(AmbientType t) {
  switch (t) {
    case AmbientType::Euclidean:
      return "euclidean";
    case AmbientType::HyperbolicBall:
      return "hyperbolic_ball";
    case AmbientType::AdSSchwarzschild:
      return "ads_schwarzschild";
    case AmbientType::WangAH:
      return "wang_ah";
  }
  return "";
}

json surface_json(const SurfaceSpec& s) {
  switch (s.type) {
    case SurfaceType::GeodesicSphere:
      return {{"type", "geodesic_sphere"},
              {"rho", s.rho},
              {"center_offset",
               {s.center_offset[0], s.center_offset[1], s.center_offset[2]}}};
    case SurfaceType::CoordinateSphere:
      return {{"type", "coordinate_sphere"}, {"r", s.r}};
    case SurfaceType::RadialProfile:
      return {{"type", "radial_profile"},
              {"coefficients", polynomial_json(s.profile)}};
    case SurfaceType::AHSphere:
      return {{"type", "ah_sphere"}, {"r", s.r}};
  }
  return {};
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
  check_keys(j, "config",
             {"ambient", "surface", "embedding", "orientation", "resolution",
              "tolerances", "outputs", "asymptotic", "seed"});
  ScenarioConfig c;
  if (!j.contains("ambient") || !j.contains("surface")) {
    throw ConfigError("config: \"ambient\" and \"surface\" are required");
  }
  c.ambient = parse_ambient(j.at("ambient"));
  c.surface = parse_surface(j.at("surface"), "surface");
  if (j.contains("embedding")) {
    c.embedding = parse_surface(j.at("embedding"), "embedding");
    if (c.embedding->type != SurfaceType::GeodesicSphere &&
        c.embedding->type != SurfaceType::RadialProfile) {
      throw ConfigError(
          "embedding.type: must be geodesic_sphere or radial_profile");
    }
  }
  if (j.contains("orientation")) {
    const json& o = j.at("orientation");
    if (o == "inward") {
      c.reversed = false;
    } else if (o == "reversed") {
      c.reversed = true;
    } else {
      throw ConfigError("orientation: expected \"inward\" or \"reversed\"");
    }
  }
  if (j.contains("resolution")) {
    const json& r = j.at("resolution");
    check_keys(r, "resolution", {"n_theta", "n_phi"});
    c.n_theta = get_count(r, "n_theta", "resolution", c.n_theta);
    c.n_phi = get_count(r, "n_phi", "resolution", c.n_phi);
  }
  if (c.n_theta < 8 || c.n_phi < 16) {
    throw ConfigError("resolution: must be at least n_theta=8, n_phi=16");
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    const std::string p = "tolerances";
    check_keys(t, p, {"fd_step", "iso_tol", "causal_tol", "curvature_tol"});
    c.tolerances.fd_step = get_positive(t, "fd_step", p, c.tolerances.fd_step);
    c.tolerances.iso_tol = get_positive(t, "iso_tol", p, c.tolerances.iso_tol);
    c.tolerances.causal_tol =
        get_positive(t, "causal_tol", p, c.tolerances.causal_tol);
    c.tolerances.curvature_tol =
        get_positive(t, "curvature_tol", p, c.tolerances.curvature_tol);
  }
  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    check_keys(o, "outputs", {"M_alpha", "upsilon", "spinor_checks"});
    c.outputs.m_alpha = get_bool(o, "M_alpha", "outputs", false);
    c.outputs.upsilon = get_bool(o, "upsilon", "outputs", false);
    c.outputs.spinor_checks = get_bool(o, "spinor_checks", "outputs", false);
  }
  if (j.contains("asymptotic")) {
    const json& a = j.at("asymptotic");
    check_keys(a, "asymptotic", {"radii"});
    if (!a.contains("radii") || !a.at("radii").is_array()) {
      throw ConfigError("asymptotic.radii: expected an array of numbers");
    }
    for (const json& r : a.at("radii")) {
      if (!r.is_number() || !(r.get<double>() > 0.0)) {
        throw ConfigError("asymptotic.radii: entries must be positive numbers");
      }
      c.radii.push_back(r.get<double>());
    }
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw ConfigError("seed: expected a non-negative integer");
    }
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const ScenarioConfig& c) {
  json ambient = {{"type", ambient_name(c.ambient.type)}};
  switch (c.ambient.type) {
    case AmbientType::Euclidean:
    case AmbientType::HyperbolicBall:
      ambient["k"] = c.ambient.k;
      break;
    case AmbientType::AdSSchwarzschild:
      ambient["m"] = c.ambient.m;
      ambient["k"] = c.ambient.k;
      ambient["horizon_margin"] = c.ambient.horizon_margin;
      break;
    case AmbientType::WangAH:
      ambient["h"] = {{"g0_multiple", c.ambient.h.g0_multiple},
                      {"trace_profile", polynomial_json(c.ambient.h.trace_profile)}};
      ambient["e_scale"] = c.ambient.e_scale;
      break;
  }
  json j = {
      {"ambient", ambient},
      {"surface", surface_json(c.surface)},
      {"orientation", c.reversed ? "reversed" : "inward"},
      {"resolution", {{"n_theta", c.n_theta}, {"n_phi", c.n_phi}}},
      {"tolerances",
       {{"fd_step", c.tolerances.fd_step},
        {"iso_tol", c.tolerances.iso_tol},
        {"causal_tol", c.tolerances.causal_tol},
        {"curvature_tol", c.tolerances.curvature_tol}}},
      {"outputs",
       {{"M_alpha", c.outputs.m_alpha},
        {"upsilon", c.outputs.upsilon},
        {"spinor_checks", c.outputs.spinor_checks}}},
      {"seed", c.seed},
  };
  if (c.embedding) {
    j["embedding"] = surface_json(*c.embedding);
  }
  if (!c.radii.empty()) {
    j["asymptotic"] = {{"radii", c.radii}};
  }
  return j;
}

geometry::MetricField build_metric(const ScenarioConfig& c) {
  const AmbientSpec& a = c.ambient;
  switch (a.type) {
    case AmbientType::Euclidean:
      return geometry::MetricField::euclidean();
    case AmbientType::HyperbolicBall:
      return geometry::MetricField::hyperbolic_ball(a.k);
    case AmbientType::AdSSchwarzschild:
      return geometry::MetricField::ads_schwarzschild(a.m, a.k,
                                                      a.horizon_margin);
    case AmbientType::WangAH:
      return geometry::MetricField::wang_ah(a.h, a.e_scale);
  }
  throw ConfigError("unsupported ambient type");
}

namespace {

geometry::Parametrization ball_param(const SurfaceSpec& s, double k) {
  switch (s.type) {
    case SurfaceType::GeodesicSphere:
      return geometry::ball_geodesic_sphere(s.rho, k, s.center_offset);
    case SurfaceType::RadialProfile:
      return geometry::ball_radial_parametrization(s.profile, k);
    default:
      throw ConfigError("surface type has no ball-model parametrization");
  }
}

}  // namespace

geometry::SurfaceData build_surface(const ScenarioConfig& c,
                                    const geometry::QuadratureGrid& grid) {
  const AmbientType amb = c.ambient.type;
  const SurfaceSpec& s = c.surface;
  const double k = c.ambient.k;
  std::optional<geometry::SurfaceData> out;
  switch (amb) {
    case AmbientType::HyperbolicBall:
      if (s.type != SurfaceType::GeodesicSphere &&
          s.type != SurfaceType::RadialProfile) {
        throw ConfigError(
            "surface.type: hyperbolic_ball takes geodesic_sphere or "
            "radial_profile");
      }
      out.emplace(ball_param(s, k), geometry::NormalSide::AgainstCross, grid,
                  k);
      out->with_embedding(ball_param(s, k));
      break;
    case AmbientType::Euclidean:
    case AmbientType::AdSSchwarzschild:
      if (s.type != SurfaceType::CoordinateSphere) {
        throw ConfigError("surface.type: " + std::string(ambient_name(amb)) +
                          " takes coordinate_sphere");
      }
      out.emplace(geometry::coordinate_sphere(s.r, k, grid));
      break;
    case AmbientType::WangAH:
      if (s.type != SurfaceType::AHSphere) {
        throw ConfigError("surface.type: wang_ah takes ah_sphere");
      }
      if (c.embedding) {
        throw ConfigError("embedding: not supported for wang_ah");
      }
      out.emplace(geometry::ah_level_set(s.r, grid));
      break;
  }
  if (c.embedding) {
    out->with_embedding(ball_param(*c.embedding, k));
  }
  return c.reversed ? out->reversed() : *out;
}

}  // namespace qlm::cli
