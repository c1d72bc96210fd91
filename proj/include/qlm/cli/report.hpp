#pragma once

#include "qlm/geometry/quadrature.hpp"
#include "qlm/lorentz.hpp"
#include "qlm/mass.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qlm::cli {

inline constexpr int kFormatVersion = 1;

/// printf %.17g; non-finite values print as "nan", "inf", "-inf".
std::string format_double(double v);

/// {"x1", "x2", "x3", "t"}
nlohmann::json lorentz_json(const LorentzVector& v);

nlohmann::json checks_json(const mass::HypothesisChecks& c,
                           const geometry::QuadratureGrid& grid,
                           bool has_embedding);

/// One violation per failed hypothesis, e.g. the node with minimal H.
std::vector<std::string> describe_violations(
    const mass::HypothesisChecks& c, const geometry::QuadratureGrid& grid,
    bool has_embedding);

/// Comma-separated CSV writer with a "# format_version=N" first line.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_row(std::vector<std::string> cells);
  void add_comment(const std::string& text);
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> lines_;
};

}  // namespace qlm::cli
