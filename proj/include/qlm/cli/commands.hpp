#pragma once

#include "qlm/cli/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlm::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // config or numeric error
inline constexpr int kExitCheckFailed = 2; // hypothesis or residual check

/// Output of one subcommand, before formatting.
struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json json;
  std::string csv;
  std::string summary;
  std::vector<std::string> problems;
};

/// Hypothesis checks, then E (and M_alpha, Upsilon, dual-path residual as
/// requested). Without `force`, a failed check stops before E is computed.
CommandResult run_mass(const ScenarioConfig& config, bool force);

/// E(S_r) table and extrapolated limit; needs a wang_ah ambient and at least
/// three strictly decreasing radii.
CommandResult run_asymptotic(const ScenarioConfig& config);

/// Zet residuals and null round trips; `zeta_sign` replaces the calibrated
/// s_zeta (test hook).
CommandResult run_spinor_check(std::uint64_t seed, std::size_t count,
                               int zeta_sign = 1);

/// Area, H at a fixed parameter point and E for each n_theta (n_phi =
/// 2 n_theta); at least three resolutions.
CommandResult run_convergence(const ScenarioConfig& config,
                              const std::vector<std::size_t>& resolutions);

/// Entry point of the qlmass tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qlm::cli
