#include "urisense/commands.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>

#include "urisense/cycle.hpp"
#include "urisense/image_io.hpp"
#include "urisense/pipeline.hpp"

namespace urisense {

namespace {

constexpr std::array<Color, 5> kCsvColumns = {Color::kRed, Color::kYellow, Color::kGreen,
                                              Color::kBlue, Color::kOrange};

// Maps an in-flight exception to an exit code and prints the diagnostic.
int report_failure(std::exception_ptr failure, std::ostream& err) {
  try {
    std::rethrow_exception(failure);
  } catch (const ImageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitImage;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TrainingError& e) {
    err << "error: config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const RecordError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPipeline;
  }
}

void publish(const MeasurementRecord& record, const AppConfig& config, CommandContext& ctx) {
  if (config.log_path) append_record(config.log_path->string(), record);
  ctx.out << to_json_line(record) << '\n';
  ctx.err << summary_line(record) << '\n';
}

std::string resolve_patient(std::optional<double> weight_kg, const AppConfig& config,
                            std::ostream& err) {
  if (!weight_kg) return std::string(kUnknownPatient);
  const auto registry = build_registry(config);
  if (!registry) {
    err << "warning: weight given but no registry configured; patient unknown\n";
    return std::string(kUnknownPatient);
  }
  try {
    return identify(*weight_kg, *registry);
  } catch (const IdentifyError& e) {
    err << "warning: " << e.what() << "; patient unknown\n";
  } catch (const std::invalid_argument& e) {
    err << "warning: " << e.what() << "; patient unknown\n";
  }
  return std::string(kUnknownPatient);
}

}  // namespace

CommandResult cmd_analyze(const std::filesystem::path& image, const AppConfig& config,
                          CommandContext& ctx) {
  try {
    const Classifier classifier = build_classifier(config);
    const AnalysisResult analysis = analyze(load_image_file(image), config.kernel, classifier);
    MeasurementRecord record = make_record(analysis, std::string(kUnknownPatient), ctx.clock());
    publish(record, config, ctx);
    return {kExitOk, std::move(record)};
  } catch (...) {
    return {report_failure(std::current_exception(), ctx.err), std::nullopt};
  }
}

CommandResult cmd_run_cycle(const std::filesystem::path& image, std::optional<double> weight_kg,
                            const AppConfig& config, CommandContext& ctx) {
  try {
    const Classifier classifier = build_classifier(config);
    const std::string patient = resolve_patient(weight_kg, config, ctx.err);
    const CycleOutcome outcome =
        run_cycle(config.cycle, [&] { return load_image_file(image); }, config.kernel, classifier,
                  patient, ctx.clock(), config.cycle_dt_s);
    if (!outcome.ok()) {
      ctx.err << "cycle aborted; chamber drained\n";
      return {report_failure(outcome.failure, ctx.err), std::nullopt};
    }
    publish(*outcome.record, config, ctx);
    return {kExitOk, outcome.record};
  } catch (...) {
    return {report_failure(std::current_exception(), ctx.err), std::nullopt};
  }
}

std::vector<double> curve_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("grid step must be in (0, 1]");
  std::vector<double> grid;
  const double inverse = 1.0 / step;
  const auto n = std::llround(inverse);
  if (std::abs(inverse - static_cast<double>(n)) < 1e-9 * inverse) {
    for (long long k = 0; k <= n; ++k) grid.push_back(static_cast<double>(k) / static_cast<double>(n));
    return grid;
  }
  for (long long k = 0; static_cast<double>(k) * step < 1.0; ++k) {
    grid.push_back(static_cast<double>(k) * step);
  }
  grid.push_back(1.0);
  return grid;
}

void write_curves_csv(std::ostream& out, const Classifier& classifier, double step) {
  std::vector<const MembershipFunction*> columns;
  out << "hue";
  for (Color c : kCsvColumns) {
    for (const MembershipFunction& mf : classifier.functions()) {
      if (mf.color() == c) {
        columns.push_back(&mf);
        out << ',' << color_name(c);
      }
    }
  }
  out << '\n';
  for (double hue : curve_grid(step)) {
    out << fmt::format("{}", hue);
    for (const MembershipFunction* mf : columns) out << fmt::format(",{}", (*mf)(hue));
    out << '\n';
  }
}

int cmd_export_curves(const AppConfig& config, double step,
                      const std::optional<std::filesystem::path>& out_path, CommandContext& ctx) {
  if (!(step > 0.0 && step <= 0.1)) {
    ctx.err << "error: --step must satisfy 0 < step <= 0.1\n";
    return kExitUsage;
  }
  try {
    const Classifier classifier = build_classifier(config);
    if (!out_path) {
      write_curves_csv(ctx.out, classifier, step);
      return kExitOk;
    }
    std::ofstream file(*out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw RecordError("cannot open " + out_path->string());
    write_curves_csv(file, classifier, step);
    file.flush();
    if (!file) throw RecordError("cannot write " + out_path->string());
    return kExitOk;
  } catch (...) {
    return report_failure(std::current_exception(), ctx.err);
  }
}

}  // namespace urisense
