#include "qlm/cli/report.hpp"

#include "qlm/error.hpp"

#include <cmath>
#include <cstdio>

namespace qlm::cli {

std::string format_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json lorentz_json(const LorentzVector& v) {
  return {{"x1", v[0]}, {"x2", v[1]}, {"x3", v[2]}, {"t", v[3]}};
}

nlohmann::json checks_json(const mass::HypothesisChecks& c,
                           const geometry::QuadratureGrid& grid,
                           bool has_embedding) {
  nlohmann::json j = {
      {"min_H", c.min_h},
      {"min_H_node", c.min_h_node},
      {"min_H_theta", grid.node_theta(c.min_h_node)},
      {"min_H_phi", grid.node_phi(c.min_h_node)},
      {"min_K_plus_k2", c.min_gauss_plus_k2},
      {"min_R_plus_6k2", c.min_scalar_plus_6k2},
      {"R_samples", c.scalar_samples},
      {"curvature_tol", c.curvature_tol},
      {"iso_tol", c.iso_tol},
      {"H_positive", c.h_positive()},
      {"K_above_minus_k2", c.gauss_ok()},
      {"R_above_minus_6k2", c.scalar_ok()},
      {"all_passed", c.all_ok()},
  };
  if (has_embedding) {
    j["isometry_mismatch"] = c.isometry_mismatch;
    j["isometric"] = c.isometric();
  } else {
    j["isometry_mismatch"] = nullptr;
    j["isometric"] = nullptr;
  }
  return j;
}

std::vector<std::string> describe_violations(
    const mass::HypothesisChecks& c, const geometry::QuadratureGrid& grid,
    bool has_embedding) {
  std::vector<std::string> out;
  if (!c.h_positive()) {
    out.push_back("mean curvature H = " + format_double(c.min_h) +
                  " <= 0 at node " + std::to_string(c.min_h_node) +
                  " (theta=" + format_double(grid.node_theta(c.min_h_node)) +
                  ", phi=" + format_double(grid.node_phi(c.min_h_node)) + ")");
  }
  if (!c.gauss_ok()) {
    out.push_back("Gauss curvature K + k^2 = " +
                  format_double(c.min_gauss_plus_k2) + " <= 0");
  }
  if (!c.scalar_ok()) {
    out.push_back("scalar curvature R + 6k^2 = " +
                  format_double(c.min_scalar_plus_6k2) + " < -" +
                  format_double(c.curvature_tol));
  }
  if (has_embedding && !c.isometric()) {
    out.push_back("isometry mismatch " + format_double(c.isometry_mismatch) +
                  " exceeds " + format_double(c.iso_tol));
  }
  return out;
}

CsvTable::CsvTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) {
    throw InvariantError("CSV row width does not match the header");
  }
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      line += ',';
    }
    line += cells[i];
  }
  lines_.push_back(std::move(line));
}

void CsvTable::add_comment(const std::string& text) {
  lines_.push_back("# " + text);
}

std::string CsvTable::str() const {
  std::string s = "# format_version=" + std::to_string(kFormatVersion) + "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += columns_[i];
  }
  s += '\n';
  for (const auto& l : lines_) {
    s += l;
    s += '\n';
  }
  return s;
}

}  // namespace qlm::cli
