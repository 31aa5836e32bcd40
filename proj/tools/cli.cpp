#include "cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "urisense/commands.hpp"
#include "urisense/config.hpp"

namespace urisense::cli {

namespace {

struct Options {
  std::string config_path;
  std::string image;
  std::vector<int> kernel;
  std::optional<double> weight;
  double step = 0.001;
  std::string out_path;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Clock& clock) {
  CLI::App app{"Benedict's-reagent urine sugar analyser"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze = app.add_subcommand("analyze", "Classify the sugar level of one image");
  analyze->add_option("image", opt.image, "PPM (P6) or 24-bit BMP image")->required();
  analyze->add_option("--kernel", opt.kernel, "Mean filter radii A (rows) B (columns)")
      ->expected(2)
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--config", opt.config_path, "JSON config file");

  auto* cycle = app.add_subcommand("run-cycle", "Simulate one measurement cycle on an image");
  cycle->add_option("image", opt.image, "Frame the colour sensor returns")->required();
  cycle->add_option("--weight", opt.weight, "Weight reading in kg for patient lookup")
      ->check(CLI::PositiveNumber);
  cycle->add_option("--config", opt.config_path, "JSON config file");

  auto* curves = app.add_subcommand("export-curves", "Write membership curves as CSV");
  curves->add_option("--step", opt.step, "Hue grid spacing, 0 < S <= 0.1");
  curves->add_option("--out", opt.out_path, "Output CSV (default: stdout)");
  curves->add_option("--config", opt.config_path, "JSON config file");

  // CLI11 consumes arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  AppConfig config;
  if (!opt.config_path.empty()) {
    try {
      config = load_config(opt.config_path);
    } catch (const ConfigError& e) {
      err << "error: config: " << e.what() << '\n';
      return kExitConfig;
    }
  }
  if (!opt.kernel.empty()) config.kernel = {opt.kernel[0], opt.kernel[1]};

  CommandContext ctx{out, err, clock};
  if (analyze->parsed()) return cmd_analyze(opt.image, config, ctx).exit_code;
  if (cycle->parsed()) return cmd_run_cycle(opt.image, opt.weight, config, ctx).exit_code;
  return cmd_export_curves(config, opt.step,
                           opt.out_path.empty() ? std::nullopt
                                                : std::optional<std::filesystem::path>(opt.out_path),
                           ctx);
}

}  // namespace urisense::cli
