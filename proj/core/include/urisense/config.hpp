#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "urisense/controller.hpp"
#include "urisense/fuzzy.hpp"
#include "urisense/identity.hpp"
#include "urisense/imaging.hpp"

namespace urisense {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings read from the JSON config file. Relative paths are resolved
/// against the directory holding the config.
///
///   {
///     "kernel": [1, 1],
///     "training_sets": "training.json",
///     "registry": "household.json",
///     "tolerance_kg": 2.0,
///     "cycle": {"collect_s": 10, "reagent_s": 5, "heat_s": 120, "cool_s": 180,
///               "sense_s": 2, "drain_s": 10, "reagent_volume_ml": 3.0, "dt_s": 0.5},
///     "log": "readings.jsonl"
///   }
///
/// Every key is optional; unknown keys are rejected.
struct AppConfig {
  KernelSize kernel;
  std::optional<std::filesystem::path> training_path;
  std::optional<std::filesystem::path> registry_path;
  double tolerance_kg = PatientRegistry::kDefaultToleranceKg;
  CycleConfig cycle;
  double cycle_dt_s = 0.5;
  std::optional<std::filesystem::path> log_path;
};

AppConfig config_from_json(std::string_view text, const std::filesystem::path& base_dir = {});
AppConfig load_config(const std::filesystem::path& path);

/// Training override document: {"red": [[hue, percent], ...], ...}. Named
/// colours replace the reference sets, others keep their defaults; an
/// "orange" entry adds a fifth class. (0, 0) rows are treated as padding.
std::vector<TrainingSet> training_sets_from_json(std::string_view text);

/// Registry document: [{"id": "A", "weight_kg": 60.0}, ...].
PatientRegistry registry_from_json(std::string_view text, double tolerance_kg);

Classifier build_classifier(const AppConfig& config);
std::optional<PatientRegistry> build_registry(const AppConfig& config);

}  // namespace urisense
