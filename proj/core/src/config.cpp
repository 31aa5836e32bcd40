#include "urisense/config.hpp"

#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace urisense {

using nlohmann::json;

namespace {

std::string read_text(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot read {} {}", what, path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("{} is not valid JSON: {}", what, e.what()));
  }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, std::string_view where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError(fmt::format("unknown key '{}' in {}", key, where));
  }
}

double number(const json& j, std::string_view key) {
  if (!j.is_number()) throw ConfigError(fmt::format("'{}' must be a number", key));
  return j.get<double>();
}

std::filesystem::path resolve(const json& j, std::string_view key,
                              const std::filesystem::path& base_dir) {
  if (!j.is_string()) throw ConfigError(fmt::format("'{}' must be a path string", key));
  std::filesystem::path p = j.get<std::string>();
  return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
}

void require_readable(const std::filesystem::path& path, std::string_view key) {
  std::ifstream probe(path);
  if (!probe) throw ConfigError(fmt::format("'{}' file {} is not readable", key, path.string()));
}

}  // namespace

AppConfig config_from_json(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text, "config");
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(j, {"kernel", "training_sets", "registry", "tolerance_kg", "cycle", "log"},
                      "config");

  AppConfig cfg;
  if (j.contains("kernel")) {
    const json& k = j["kernel"];
    if (!k.is_array() || k.size() != 2 || !k[0].is_number_integer() || !k[1].is_number_integer()) {
      throw ConfigError("'kernel' must be [a, b] with integer radii");
    }
    cfg.kernel = {k[0].get<int>(), k[1].get<int>()};
    if (cfg.kernel.row_radius < 0 || cfg.kernel.col_radius < 0) {
      throw ConfigError("'kernel' radii must be nonnegative");
    }
  }
  if (j.contains("training_sets")) {
    cfg.training_path = resolve(j["training_sets"], "training_sets", base_dir);
    require_readable(*cfg.training_path, "training_sets");
  }
  if (j.contains("registry")) {
    cfg.registry_path = resolve(j["registry"], "registry", base_dir);
    require_readable(*cfg.registry_path, "registry");
  }
  if (j.contains("tolerance_kg")) {
    cfg.tolerance_kg = number(j["tolerance_kg"], "tolerance_kg");
    if (!(cfg.tolerance_kg > 0.0)) throw ConfigError("'tolerance_kg' must be positive");
  }
  if (j.contains("cycle")) {
    const json& c = j["cycle"];
    if (!c.is_object()) throw ConfigError("'cycle' must be an object");
    reject_unknown_keys(c, {"collect_s", "reagent_s", "heat_s", "cool_s", "sense_s", "drain_s",
                            "reagent_volume_ml", "dt_s"},
                        "cycle");
    auto set = [&](const char* key, double& field) {
      if (c.contains(key)) field = number(c[key], key);
    };
    set("collect_s", cfg.cycle.collect_s);
    set("reagent_s", cfg.cycle.reagent_s);
    set("heat_s", cfg.cycle.heat_s);
    set("cool_s", cfg.cycle.cool_s);
    set("sense_s", cfg.cycle.sense_s);
    set("drain_s", cfg.cycle.drain_s);
    set("reagent_volume_ml", cfg.cycle.reagent_volume_ml);
    set("dt_s", cfg.cycle_dt_s);
    try {
      cfg.cycle.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (!(cfg.cycle_dt_s > 0.0)) throw ConfigError("'dt_s' must be positive");
  }
  if (j.contains("log")) cfg.log_path = resolve(j["log"], "log", base_dir);
  return cfg;
}

AppConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_text(path, "config"), path.parent_path());
}

std::vector<TrainingSet> training_sets_from_json(std::string_view text) {
  const json j = parse_json(text, "training sets");
  if (!j.is_object()) throw ConfigError("training sets must map colour names to node arrays");

  std::vector<TrainingColumn> overrides;
  for (const auto& [name, rows] : j.items()) {
    const auto color = parse_color(name);
    if (!color) throw ConfigError(fmt::format("unknown colour '{}' in training sets", name));
    if (!rows.is_array()) throw ConfigError(fmt::format("'{}' must be an array of [hue, percent]", name));
    TrainingColumn column{*color, {}};
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
        throw ConfigError(fmt::format("'{}' rows must be [hue, percent] pairs", name));
      }
      column.rows.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    overrides.push_back(std::move(column));
  }

  std::vector<TrainingSet> sets;
  for (const TrainingColumn& reference : reference_training_table()) {
    const bool replaced = std::any_of(overrides.begin(), overrides.end(),
                                      [&](const TrainingColumn& c) { return c.label == reference.label; });
    if (!replaced) sets.push_back(parse_training_table(std::span(&reference, 1)).front());
  }
  for (TrainingSet& s : parse_training_table(overrides)) sets.push_back(std::move(s));
  return sets;
}

PatientRegistry registry_from_json(std::string_view text, double tolerance_kg) {
  const json j = parse_json(text, "registry");
  if (!j.is_array()) throw ConfigError("registry must be an array of {id, weight_kg}");
  std::vector<RegistryEntry> entries;
  for (const json& e : j) {
    if (!e.is_object() || !e.contains("id") || !e.contains("weight_kg") || !e["id"].is_string()) {
      throw ConfigError("registry entries need a string 'id' and a numeric 'weight_kg'");
    }
    entries.push_back({e["id"].get<std::string>(), number(e["weight_kg"], "weight_kg")});
  }
  try {
    return PatientRegistry(std::move(entries), tolerance_kg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Classifier build_classifier(const AppConfig& config) {
  if (!config.training_path) return Classifier::with_defaults();
  try {
    return Classifier(training_sets_from_json(read_text(*config.training_path, "training sets")));
  } catch (const TrainingError& e) {
    throw ConfigError(e.what());
  }
}

std::optional<PatientRegistry> build_registry(const AppConfig& config) {
  if (!config.registry_path) return std::nullopt;
  return registry_from_json(read_text(*config.registry_path, "registry"), config.tolerance_kg);
}

}  // namespace urisense
