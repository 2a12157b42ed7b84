#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncg/fock.hpp"
#include "ncg/landau_gauge.hpp"
#include "ncg/units.hpp"

namespace ncg {

enum class Command { commutator, sweep, spectrum, landau_gauge, crosscheck, dump_matrix };
enum class OutputFormat { json, csv, table };

/// Invalid flag value or combination. The message names the flag.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::commutator;
  int N = 4;
  int J = 8;
  /// Defaults to N when unset.
  std::optional<int> keep;
  std::size_t grid_M = 128;
  /// Half-width of the k-grid in units of eB l / c.
  double k_range = kDefaultGridHalfRange;
  /// Successive dk halvings in the landau-gauge convergence study.
  int refinements = 2;
  PhysicalUnits units;
  OutputFormat output = OutputFormat::table;
  /// Operator emitted by dump-matrix.
  std::string matrix = "x";
  std::optional<std::string> out_path;
  bool parallel = false;

  int kept_levels() const { return keep.value_or(N); }
};

struct RunResult {
  std::string text;
  /// True exactly when every report produced by the command is ok.
  bool ok = false;
};

Command parse_command(std::string_view name);
std::string_view command_name(Command c);
OutputFormat parse_output_format(std::string_view name);

/// Throws UsageError.
void validate(const RunConfig& config);

/// Operators dump-matrix understands: a, b, alpha, x, y, px, py, H,
/// H_quadratic, L, commutator, projector, landau_x, landau_y.
OperatorMatrix named_matrix(const RunConfig& config, std::string_view name);

/// Validates, dispatches, serializes. Writes the text to out_path when set.
/// Throws UsageError for bad configurations and std::runtime_error when the
/// output file cannot be written.
RunResult run(const RunConfig& config);

}  // namespace ncg
