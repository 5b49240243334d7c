#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmsv/fock.hpp"
#include "tmsv/gaussian.hpp"

namespace tmsv::cli {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for --help; what() carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

struct ScenarioConfig {
  BathParams bath;
  SqueezeInit squeeze = SqueezeInit::from_lambda(0.0);
  double tmax = 0.0;
  int steps = 200;
  int nmax = 30;
  int smax = 10;
  std::filesystem::path out = "tmsv_out";
  bool oracle = false;
  double tail_tol = kDefaultTailTol;
};

/// Flags (argv without the program name) layered over an optional
/// --config key=value file. Flags win; r and lambda are mutually exclusive
/// within each source.
ScenarioConfig parse_config(const std::vector<std::string>& args);

/// Flat key=value text: '#' starts a comment, blank lines ignored.
std::vector<std::pair<std::string, std::string>> read_key_values(const std::filesystem::path& file);

struct OracleSummary {
  double max_negativity_deviation = 0.0;
  double max_eigenvalue_deviation = 0.0;
  double max_block_deviation = 0.0;
};

struct ScenarioOutputs {
  std::vector<std::filesystem::path> files;
  std::optional<OracleSummary> oracle;
};

/// Sweeps the time grid and writes the CSV/text artifacts into config.out.
ScenarioOutputs run_scenario(const ScenarioConfig& config);

std::vector<double> time_grid(double tmax, int steps);

}  // namespace tmsv::cli
