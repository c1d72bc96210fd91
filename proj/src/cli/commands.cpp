#include "qlm/cli/commands.hpp"

#include "qlm/asymptotic.hpp"
#include "qlm/cli/report.hpp"
#include "qlm/error.hpp"
#include "qlm/hypgeom.hpp"
#include "qlm/mass.hpp"
#include "qlm/random.hpp"
#include "qlm/spinor.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

namespace qlm::cli {
namespace {

using json = nlohmann::json;

constexpr std::size_t kNullSamples = 500;
constexpr std::size_t kDualPathSamples = 50;
constexpr double kSpinorTol = 1e-12;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

json header(const std::string& command) {
  return {{"format_version", kFormatVersion}, {"command", command}};
}

std::string vector_text(const LorentzVector& v) {
  return "(" + format_double(v[0]) + ", " + format_double(v[1]) + ", " +
         format_double(v[2]) + ", " + format_double(v[3]) + ")";
}

std::vector<std::string> vector_cells(const LorentzVector& v) {
  return {format_double(v[0]), format_double(v[1]), format_double(v[2]),
          format_double(v[3])};
}

mass::MassOptions mass_options(const ScenarioConfig& c, bool force) {
  mass::MassOptions o;
  o.fd.step = c.tolerances.fd_step;
  o.iso_tol = c.tolerances.iso_tol;
  o.require_positive_h = !force;
  o.require_isometry = !force;
  return o;
}

double observed_order(double q0, double q1, double q2, double n1, double n2) {
  const double d1 = std::abs(q1 - q0);
  const double d2 = std::abs(q2 - q1);
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    return kNan;
  }
  return std::log(d1 / d2) / std::log(n2 / n1);
}

double exact_area(const ScenarioConfig& c) {
  const double k = c.ambient.k;
  switch (c.surface.type) {
    case SurfaceType::GeodesicSphere: {
      const double s = std::sinh(k * c.surface.rho) / k;
      return 4.0 * std::numbers::pi * s * s;
    }
    case SurfaceType::CoordinateSphere:
      return 4.0 * std::numbers::pi * c.surface.r * c.surface.r;
    default:
      return kNan;
  }
}

}  // namespace

CommandResult run_mass(const ScenarioConfig& config, bool force) {
  CommandResult out;
  const geometry::QuadratureGrid grid(config.n_theta, config.n_phi);
  const geometry::MetricField metric = build_metric(config);
  const geometry::SurfaceData surface = build_surface(config, grid);
  geometry::FdOptions fd{config.tolerances.fd_step};

  const mass::HypothesisChecks checks = mass::check_hypotheses(
      surface, metric, fd, config.tolerances.curvature_tol,
      config.tolerances.iso_tol);
  const bool has_f0 = surface.has_embedding();
  out.problems = describe_violations(checks, grid, has_f0);

  json j = header("mass");
  j["resolution"] = {{"n_theta", grid.n_theta()}, {"n_phi", grid.n_phi()}};
  j["hypothesis_checks"] = checks_json(checks, grid, has_f0);
  j["forced"] = force;
  j["E"] = nullptr;
  j["causal_class"] = nullptr;
  j["M_alpha"] = nullptr;
  j["alpha"] = nullptr;
  j["upsilon"] = nullptr;
  j["null_pairings"] = nullptr;
  j["config"] = to_json(config);

  std::string summary;
  if (!checks.all_ok() && !force) {
    out.exit_code = kExitCheckFailed;
    out.json = j;
    out.summary = "hypothesis checks: FAILED\n";
    CsvTable csv({"quantity", "x1", "x2", "x3", "t"});
    out.csv = csv.str();
    return out;
  }

  mass::MassReport report;
  report.checks = checks;
  report.n_theta = grid.n_theta();
  report.n_phi = grid.n_phi();
  std::optional<double> dual_residual;
  if (config.ambient.type == AmbientType::WangAH) {
    if (config.outputs.m_alpha) {
      throw ConfigError("outputs.M_alpha: needs a surface with a hyperbolic embedding");
    }
    const auto data =
        asymptotic::ah_sphere_data(config.surface.r, config.ambient.h, grid);
    report.E = asymptotic::energy_momentum(data, grid);
    report.upsilon = mass::wang_mass(config.ambient.h, grid);
  } else {
    const mass::BoundaryData bd =
        mass::boundary_data(surface, metric, mass_options(config, force));
    report.E = mass::energy_momentum(bd);
    if (config.outputs.m_alpha) {
      const RadialBounds b =
          radial_bounds(surface, HyperboloidPoint::origin(surface.k()));
      report.alpha = mass::shi_tam_alpha(b.inner, b.outer);
      report.m_alpha = mass::shi_tam_vector(bd, *report.alpha);
      j["radial_bounds"] = {{"R1", b.inner}, {"R2", b.outer}};
    }
    if (config.outputs.spinor_checks) {
      if (surface.k() != 1.0) {
        throw ConfigError("outputs.spinor_checks: needs k = 1");
      }
      SeededRng rng(config.seed);
      double worst = 0.0;
      for (std::size_t i = 0; i < kDualPathSamples; ++i) {
        const spinor::SpinorValue a = spinor::random_spinor(rng);
        const spinor::Branch br =
            i % 2 == 0 ? spinor::Branch::Plus : spinor::Branch::Minus;
        const double pairing =
            minkowski_inner(report.E, spinor::zeta_of(a, br));
        const double kw = mass::killing_weighted_mass(bd, a, br);
        worst = std::max(worst, std::abs(kw + 2.0 * pairing) /
                                    (1.0 + std::abs(pairing)));
      }
      dual_residual = worst;
    }
  }
  if (config.outputs.upsilon && !report.upsilon) {
    throw ConfigError("outputs.upsilon: needs a wang_ah ambient");
  }
  report.causal_class = classify(report.E, config.tolerances.causal_tol);
  report.null_pairings = null_pairing_range(
      report.E, NullSampleSet(sample_null_cone(kNullSamples)));

  j["E"] = lorentz_json(report.E);
  j["causal_class"] = to_string(report.causal_class);
  j["null_pairings"] = {{"samples", kNullSamples},
                        {"min", report.null_pairings.min},
                        {"max", report.null_pairings.max}};
  CsvTable csv({"quantity", "x1", "x2", "x3", "t"});
  auto add = [&](const std::string& name, const LorentzVector& v) {
    std::vector<std::string> cells{name};
    for (auto& s : vector_cells(v)) {
      cells.push_back(s);
    }
    csv.add_row(cells);
  };
  add("E", report.E);
  summary += "E = " + vector_text(report.E) + "\n";
  summary += "causal class: " + std::string(to_string(report.causal_class)) + "\n";
  if (report.m_alpha) {
    j["M_alpha"] = lorentz_json(*report.m_alpha);
    j["alpha"] = *report.alpha;
    add("M_alpha", *report.m_alpha);
    summary += "alpha = " + format_double(*report.alpha) + "\n";
    summary += "M_alpha = " + vector_text(*report.m_alpha) + "\n";
  }
  if (report.upsilon) {
    j["upsilon"] = lorentz_json(*report.upsilon);
    add("upsilon", *report.upsilon);
    summary += "upsilon = " + vector_text(*report.upsilon) + "\n";
  }
  if (dual_residual) {
    j["dual_path"] = {{"samples", kDualPathSamples},
                      {"max_relative_residual", *dual_residual}};
    summary += "dual-path residual = " + format_double(*dual_residual) + "\n";
  }
  summary += std::string("hypothesis checks: ") +
             (checks.all_ok() ? "passed" : "FAILED (forced)") + "\n";
  out.json = j;
  out.csv = csv.str();
  out.summary = summary;
  return out;
}

CommandResult run_asymptotic(const ScenarioConfig& config) {
  if (config.ambient.type != AmbientType::WangAH) {
    throw ConfigError("asymptotic: needs a wang_ah ambient");
  }
  if (config.radii.size() < 3) {
    throw ConfigError("asymptotic.radii: needs at least 3 entries");
  }
  for (std::size_t i = 0; i < config.radii.size(); ++i) {
    if (config.radii[i] > asymptotic::kMaxRadius) {
      throw ConfigError("asymptotic.radii: entries must be <= 0.5");
    }
    if (i > 0 && !(config.radii[i] < config.radii[i - 1])) {
      throw ConfigError("asymptotic.radii: must be strictly decreasing");
    }
  }
  const geometry::QuadratureGrid grid(config.n_theta, config.n_phi);
  const asymptotic::AsymptoticResult res =
      asymptotic::asymptotic_limit(config.ambient.h, config.radii, grid);

  const double scale = res.half_upsilon.max_abs();
  const double dev = res.deviation.max_abs();
  const double relative = scale > 0.0 ? dev / scale : (dev == 0.0 ? 0.0 : kNan);

  CommandResult out;
  json j = header("asymptotic");
  j["resolution"] = {{"n_theta", grid.n_theta()}, {"n_phi", grid.n_phi()}};
  j["rows"] = json::array();
  CsvTable csv({"kind", "r", "E_x1", "E_x2", "E_x3", "E_t", "dev_x1",
                "dev_x2", "dev_x3", "dev_t"});
  auto add = [&](const std::string& kind, double r, const LorentzVector& e,
                 const LorentzVector& d) {
    std::vector<std::string> cells{kind, format_double(r)};
    for (auto& s : vector_cells(e)) {
      cells.push_back(s);
    }
    for (auto& s : vector_cells(d)) {
      cells.push_back(s);
    }
    csv.add_row(cells);
  };
  for (const auto& row : res.rows) {
    j["rows"].push_back({{"r", row.r},
                         {"E", lorentz_json(row.E)},
                         {"deviation", lorentz_json(row.deviation)}});
    add("sample", row.r, row.E, row.deviation);
  }
  add("extrapolated", 0.0, res.extrapolated, res.deviation);
  csv.add_comment("half_upsilon=" + format_double(res.half_upsilon[0]) + " " +
                  format_double(res.half_upsilon[1]) + " " +
                  format_double(res.half_upsilon[2]) + " " +
                  format_double(res.half_upsilon[3]));
  csv.add_comment("relative_deviation=" + format_double(relative));
  csv.add_comment("observed_order=" + format_double(res.observed_order));
  csv.add_comment("error_slope=" + format_double(res.error_slope));

  j["extrapolated"] = lorentz_json(res.extrapolated);
  j["upsilon"] = lorentz_json(2.0 * res.half_upsilon);
  j["half_upsilon"] = lorentz_json(res.half_upsilon);
  j["deviation"] = lorentz_json(res.deviation);
  j["relative_deviation"] = relative;
  j["observed_order"] = res.observed_order;
  j["error_slope"] = res.error_slope;
  j["config"] = to_json(config);

  out.json = j;
  out.csv = csv.str();
  out.summary = "extrapolated E = " + vector_text(res.extrapolated) + "\n" +
                "upsilon / 2 = " + vector_text(res.half_upsilon) + "\n" +
                "relative deviation = " + format_double(relative) + "\n" +
                "observed order = " + format_double(res.observed_order) + "\n";
  return out;
}

CommandResult run_spinor_check(std::uint64_t seed, std::size_t count,
                               int zeta_sign) {
  if (count < 1) {
    throw ConfigError("spinor-check: --count must be at least 1");
  }
  const spinor::CliffordRep rep =
      spinor::make_clifford_rep(spinor::clifford_rep().s_gamma, zeta_sign);
  const spinor::SpinorCheck c = spinor::run_spinor_check(seed, count, rep);
  const bool passed = c.max_zet_residual < kSpinorTol &&
                      c.max_round_trip_residual < kSpinorTol;
  CommandResult out;
  out.exit_code = passed ? kExitOk : kExitCheckFailed;
  json j = header("spinor-check");
  j["seed"] = seed;
  j["count"] = count;
  j["s_gamma"] = rep.s_gamma;
  j["s_zeta"] = rep.s_zeta;
  j["max_zet_residual"] = c.max_zet_residual;
  j["max_round_trip_residual"] = c.max_round_trip_residual;
  j["tolerance"] = kSpinorTol;
  j["passed"] = passed;
  out.json = j;
  CsvTable csv({"seed", "count", "max_zet_residual", "max_round_trip_residual",
                "passed"});
  csv.add_row({std::to_string(seed), std::to_string(count),
               format_double(c.max_zet_residual),
               format_double(c.max_round_trip_residual),
               passed ? "true" : "false"});
  out.csv = csv.str();
  out.summary = "max zet residual = " + format_double(c.max_zet_residual) +
                "\nmax round-trip residual = " +
                format_double(c.max_round_trip_residual) + "\n" +
                (passed ? "passed\n" : "FAILED\n");
  if (!passed) {
    out.problems.push_back("spinor residuals exceed " + format_double(kSpinorTol));
  }
  return out;
}

CommandResult run_convergence(const ScenarioConfig& config,
                              const std::vector<std::size_t>& resolutions) {
  if (resolutions.size() < 3) {
    throw ConfigError("convergence: needs at least 3 resolutions");
  }
  for (std::size_t i = 0; i < resolutions.size(); ++i) {
    if (resolutions[i] < 8) {
      throw ConfigError("convergence: resolutions must be >= 8");
    }
    if (i > 0 && !(resolutions[i] > resolutions[i - 1])) {
      throw ConfigError("convergence: resolutions must be strictly increasing");
    }
  }
  if (config.ambient.type == AmbientType::WangAH) {
    throw ConfigError("convergence: needs a surface with a hyperbolic embedding");
  }
  const geometry::MetricField metric = build_metric(config);
  const double exact = exact_area(config);
  constexpr double probe_theta = 1.0;
  constexpr double probe_phi = 0.5;

  struct Sample {
    std::size_t n;
    double area;
    double h_probe;
    LorentzVector E;
  };
  std::vector<Sample> samples;
  for (std::size_t n : resolutions) {
    const geometry::QuadratureGrid grid(n, 2 * n);
    const geometry::SurfaceData surface = build_surface(config, grid);
    const mass::BoundaryData bd =
        mass::boundary_data(surface, metric, mass_options(config, false));
    const double area = geometry::weighted_sum(
        bd.weights, std::vector<double>(bd.weights.size(), 1.0));
    const double h = geometry::fundamental_forms(
                         surface.immersion(), surface.normal_side(), metric,
                         probe_theta, probe_phi, {config.tolerances.fd_step})
                         .mean_curvature;
    samples.push_back({n, area, h, mass::energy_momentum(bd)});
  }

  CommandResult out;
  json j = header("convergence");
  j["probe"] = {{"theta", probe_theta}, {"phi", probe_phi}};
  j["exact_area"] = exact;
  j["rows"] = json::array();
  CsvTable csv({"n_theta", "n_phi", "area", "area_error", "h_probe", "E_x1",
                "E_x2", "E_x3", "E_t", "area_order", "E_t_order"});
  std::string summary;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    double area_order = kNan, et_order = kNan;
    if (i >= 2) {
      const Sample& a = samples[i - 2];
      const Sample& b = samples[i - 1];
      area_order = observed_order(a.area, b.area, s.area, double(b.n), double(s.n));
      et_order = observed_order(a.E[3], b.E[3], s.E[3], double(b.n), double(s.n));
    }
    const double err = std::abs(s.area - exact);
    std::vector<std::string> cells{std::to_string(s.n), std::to_string(2 * s.n),
                                   format_double(s.area), format_double(err),
                                   format_double(s.h_probe)};
    for (auto& c : vector_cells(s.E)) {
      cells.push_back(c);
    }
    cells.push_back(format_double(area_order));
    cells.push_back(format_double(et_order));
    csv.add_row(cells);
    j["rows"].push_back({{"n_theta", s.n},
                         {"n_phi", 2 * s.n},
                         {"area", s.area},
                         {"area_error", err},
                         {"h_probe", s.h_probe},
                         {"E", lorentz_json(s.E)},
                         {"area_order", area_order},
                         {"E_t_order", et_order}});
    summary += "n_theta=" + std::to_string(s.n) + " area=" +
               format_double(s.area) + " E_t=" + format_double(s.E[3]) + "\n";
  }
  j["config"] = to_json(config);
  out.json = j;
  out.csv = csv.str();
  out.summary = summary;
  return out;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) {
    throw ConfigError("cannot write " + p.string());
  }
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quasi-local energy-momentum of surfaces bounding domains in "
               "3-manifolds",
               "qlmass"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  bool force = false;
  bool want_json = false;
  bool want_csv = false;
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  int zeta_sign = 1;
  std::vector<std::size_t> resolutions;

  auto formats = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", want_json, "Print the JSON report");
    auto* c = sub->add_flag("--csv", want_csv, "Print the CSV table");
    j->excludes(c);
    sub->add_option("--output", output_dir, "Directory for report files");
  };

  auto* mass_cmd = app.add_subcommand("mass", "Energy-momentum of one scenario");
  mass_cmd->add_option("config", config_path, "Scenario file (JSON)")->required();
  mass_cmd->add_flag("--force", force, "Continue past failed hypothesis checks");
  formats(mass_cmd);

  auto* asym_cmd =
      app.add_subcommand("asymptotic", "Small-sphere limit in a WangAH metric");
  asym_cmd->add_option("config", config_path, "Scenario file (JSON)")->required();
  formats(asym_cmd);

  auto* spin_cmd =
      app.add_subcommand("spinor-check", "Killing spinor identity residuals");
  spin_cmd->add_option("--seed", seed, "Random seed");
  spin_cmd->add_option("--count", count, "Number of samples")
      ->check(CLI::PositiveNumber);
  spin_cmd->add_option("--zeta-sign-override", zeta_sign)
      ->check(CLI::IsMember({-1, 1}))
      ->group("");
  formats(spin_cmd);

  auto* conv_cmd =
      app.add_subcommand("convergence", "Quadrature convergence study");
  conv_cmd->add_option("config", config_path, "Scenario file (JSON)")->required();
  conv_cmd->add_option("--resolutions", resolutions, "n_theta values, e.g. 8,16,32")
      ->required()
      ->delimiter(',');
  formats(conv_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  std::string name;
  try {
    CommandResult r;
    if (mass_cmd->parsed()) {
      name = "mass";
      r = run_mass(load_config(config_path), force);
    } else if (asym_cmd->parsed()) {
      name = "asymptotic";
      r = run_asymptotic(load_config(config_path));
    } else if (spin_cmd->parsed()) {
      name = "spinor_check";
      r = run_spinor_check(seed, count, zeta_sign);
    } else {
      name = "convergence";
      r = run_convergence(load_config(config_path), resolutions);
    }
    const std::string json_text = r.json.dump(2) + "\n";
    if (want_json) {
      out << json_text;
    } else if (want_csv) {
      out << r.csv;
    } else {
      out << r.summary;
    }
    if (!output_dir.empty()) {
      std::filesystem::create_directories(output_dir);
      write_file(std::filesystem::path(output_dir) / (name + ".json"), json_text);
      write_file(std::filesystem::path(output_dir) / (name + ".csv"), r.csv);
    }
    const bool fatal = r.exit_code != kExitOk;
    for (const auto& p : r.problems) {
      err << (fatal ? "error: " : "warning: ") << p
          << (fatal ? "" : " (forced)") << "\n";
    }
    return r.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace qlm::cli
