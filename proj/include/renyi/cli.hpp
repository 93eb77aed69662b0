#pragma once

// Command-line front end: the parsed configuration and the runner behind the
// renyi-epi executable.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "renyi/epi_verify.hpp"
#include "renyi/report.hpp"

namespace renyi::cli {

enum class Command { Constants, Entropy, Verify, Optimize, Report };
enum class OutputFormat { Json, Csv };

inline constexpr std::size_t kDefaultGridN = 16384;
inline constexpr const char* kGridEnvVar = "RENYI_EPI_GRID_N";

struct RunConfig {
  Command command = Command::Constants;
  std::vector<std::string> density_specs;  // JSON texts
  std::vector<double> orders;              // entropy orders p
  std::vector<double> r_values{2.0};
  std::vector<int> m_values{2};
  std::optional<double> alpha;  // general-form exponent; 1/2 when absent
  std::string suite = "default";
  std::vector<std::string> inputs;  // report: JSON files to aggregate
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
  std::size_t grid_n = kDefaultGridN;
  std::optional<double> entropy_tol;
  std::optional<double> power_rel_tol;
  std::optional<double> info_tol;
};

/// Malformed configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError.
void validate(const RunConfig& config);

/// Grid size from RENYI_EPI_GRID_N when set, otherwise the default.
/// Throws UsageError on an unparsable value.
std::size_t grid_n_from_env();

/// Runs the command. Returns 0 on success, 1 when a verification or
/// optimizer comparison fails, 2 on usage errors (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::vector<std::string> suite_names();

/// Reports of a named suite sorted by inputs digest. A check that throws is
/// recorded as a failing report carrying the error text. Throws UsageError
/// for unknown names.
std::vector<EpiReport> run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace renyi::cli
