#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "urisense/config.hpp"
#include "urisense/fuzzy.hpp"
#include "urisense/record.hpp"

namespace urisense {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitImage = 2,
  kExitConfig = 3,
  kExitIo = 4,
  kExitPipeline = 5,
};

struct CommandContext {
  std::ostream& out;  ///< JSON record / CSV
  std::ostream& err;  ///< diagnostics and the patient summary line
  Clock clock;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::optional<MeasurementRecord> record;
};

/// Load, filter, extract hue, classify. Prints the record JSON to `out`, the
/// summary line to `err`, and appends to the configured log.
CommandResult cmd_analyze(const std::filesystem::path& image, const AppConfig& config,
                          CommandContext& ctx);

/// Identifies the patient when a weight is given (falling back to "unknown"
/// with a warning), then runs one simulated measurement cycle.
CommandResult cmd_run_cycle(const std::filesystem::path& image, std::optional<double> weight_kg,
                            const AppConfig& config, CommandContext& ctx);

/// Hue grid for curve export: 0, step, 2*step, ... up to and including 1.
/// When 1/step is an integer n the points are k/n exactly.
std::vector<double> curve_grid(double step);

/// CSV "hue,red,yellow,green,blue" (plus ",orange" when configured).
void write_curves_csv(std::ostream& out, const Classifier& classifier, double step);

/// Requires 0 < step <= 0.1. Writes to `out_path`, or to ctx.out if none.
int cmd_export_curves(const AppConfig& config, double step,
                      const std::optional<std::filesystem::path>& out_path, CommandContext& ctx);

}  // namespace urisense
