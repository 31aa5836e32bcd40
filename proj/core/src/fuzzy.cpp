#include "urisense/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fmt/format.h>

namespace urisense {

namespace {

constexpr std::string_view kRenalCaveat =
    "Urine sugar reflects blood sugar only above the renal threshold.";

bool is_padding(const TrainingNode& n) { return n.hue == 0.0 && n.percent == 0.0; }

// Hue / percent pairs of the reference training table, zero rows included.
const std::vector<TrainingColumn>& table() {
  static const std::vector<TrainingColumn> columns = {
      {Color::kRed,
       {{0.007, 100}, {0.039, 80}, {0.060, 70}, {0.082, 60}, {0.106, 50}, {0.127, 40},
        {0.148, 30}, {0.166, 10}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
      {Color::kYellow,
       {{0.039, 20}, {0.060, 30}, {0.082, 40}, {0.106, 50}, {0.127, 60}, {0.148, 70},
        {0.166, 90}, {0.184, 90}, {0.192, 80}, {0.214, 30}, {0.245, 20}, {0, 0}}},
      {Color::kGreen,
       {{0.184, 10}, {0.192, 20}, {0.214, 70}, {0.245, 80}, {0.272, 100}, {0.314, 100},
        {0.333, 100}, {0.394, 90}, {0.417, 80}, {0.452, 70}, {0.481, 40}, {0.5, 20}}},
      {Color::kBlue,
       {{0.417, 20}, {0.452, 30}, {0.481, 60}, {0.5, 80}, {0.510, 100}, {0.534, 100},
        {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
  };
  return columns;
}

}  // namespace

std::string_view color_name(Color color) {
  switch (color) {
    case Color::kBlue: return "blue";
    case Color::kGreen: return "green";
    case Color::kYellow: return "yellow";
    case Color::kOrange: return "orange";
    case Color::kRed: return "red";
  }
  throw std::invalid_argument("unknown colour");
}

std::optional<Color> parse_color(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Color c : kAllColors) {
    if (color_name(c) == lower) return c;
  }
  return std::nullopt;
}

TrainingSet::TrainingSet(Color label, std::vector<TrainingNode> nodes)
    : label_(label), nodes_(std::move(nodes)) {
  const auto name = color_name(label_);
  for (const TrainingNode& n : nodes_) {
    if (!(n.hue >= 0.0 && n.hue <= 1.0)) {
      throw TrainingError(TrainingErrorKind::kHueOutOfRange,
                          fmt::format("{} set: hue {} outside [0, 1]", name, n.hue));
    }
    if (!(n.percent >= 0.0 && n.percent <= 100.0)) {
      throw TrainingError(TrainingErrorKind::kPercentOutOfRange,
                          fmt::format("{} set: percent {} outside [0, 100]", name, n.percent));
    }
  }
  if (nodes_.size() < 2) {
    throw TrainingError(TrainingErrorKind::kTooFewNodes,
                        fmt::format("{} set needs at least 2 nodes, has {}", name, nodes_.size()));
  }
  std::sort(nodes_.begin(), nodes_.end(),
            [](const TrainingNode& a, const TrainingNode& b) { return a.hue < b.hue; });
  const auto dup = std::adjacent_find(
      nodes_.begin(), nodes_.end(),
      [](const TrainingNode& a, const TrainingNode& b) { return a.hue == b.hue; });
  if (dup != nodes_.end()) {
    throw TrainingError(TrainingErrorKind::kDuplicateHue,
                        fmt::format("{} set: hue {} appears more than once", name, dup->hue));
  }
}

std::span<const TrainingColumn> reference_training_table() { return table(); }

std::vector<TrainingSet> parse_training_table(std::span<const TrainingColumn> columns) {
  std::vector<TrainingSet> sets;
  sets.reserve(columns.size());
  for (const TrainingColumn& column : columns) {
    std::vector<TrainingNode> nodes;
    std::copy_if(column.rows.begin(), column.rows.end(), std::back_inserter(nodes),
                 [](const TrainingNode& n) { return !is_padding(n); });
    sets.emplace_back(column.label, std::move(nodes));
  }
  return sets;
}

std::vector<TrainingSet> default_training_sets() {
  return parse_training_table(reference_training_table());
}

MembershipFunction::MembershipFunction(TrainingSet training) : training_(std::move(training)) {}

double MembershipFunction::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(fmt::format("hue {} outside [0, 1]", x));
  }
  if (x < support_min() || x > support_max()) return 0.0;

  const auto nodes = training_.nodes();
  double value = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double product = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i != j) product *= (x - nodes[j].hue) / (nodes[i].hue - nodes[j].hue);
    }
    value += product * nodes[i].percent;
  }
  return value;
}

double membership_value(const MembershipFunction& mf, double x) { return mf(x); }

std::string_view marks_symbol(Marks marks) {
  switch (marks) {
    case Marks::kNil: return "Nil";
    case Marks::kPlus1: return "+";
    case Marks::kPlus2: return "++";
    case Marks::kPlus3: return "+++";
    case Marks::kPlus4: return "++++";
  }
  throw std::invalid_argument("unknown marks");
}

std::optional<Marks> parse_marks(std::string_view symbol) {
  for (Marks m : {Marks::kNil, Marks::kPlus1, Marks::kPlus2, Marks::kPlus3, Marks::kPlus4}) {
    if (marks_symbol(m) == symbol) return m;
  }
  return std::nullopt;
}

ClinicalBand clinical_band(Color color) {
  const std::string caveat(kRenalCaveat);
  switch (color) {
    case Color::kBlue: return {color, Marks::kNil, std::nullopt, "No urine sugar. " + caveat};
    case Color::kGreen: return {color, Marks::kPlus1, UrineRange{0.1, 0.5}, caveat};
    case Color::kYellow: return {color, Marks::kPlus2, UrineRange{0.5, 1.0}, caveat};
    case Color::kOrange: return {color, Marks::kPlus3, UrineRange{1.0, 1.5}, caveat};
    case Color::kRed:
      return {color, Marks::kPlus4, UrineRange{1.5, 2.0},
              "Very high. Approximate blood sugar 290-350 mg/dl for this colour. " + caveat};
  }
  throw std::invalid_argument("unknown colour");
}

ClassificationReport classify(double x, std::span<const MembershipFunction> functions) {
  ClassificationReport report;
  report.input_hue = x;
  for (const MembershipFunction& mf : functions) report.values[mf.color()] = mf(x);

  // std::map iterates from least to most severe, so >= lets severity win ties.
  double best = 0.0;
  for (const auto& [color, value] : report.values) {
    if (value > 0.0 && value >= best) {
      best = value;
      report.winner = color;
    }
  }
  if (report.winner) report.band = clinical_band(*report.winner);
  return report;
}

Classifier::Classifier(std::vector<TrainingSet> sets) {
  functions_.reserve(sets.size());
  for (TrainingSet& set : sets) {
    const bool seen = std::any_of(functions_.begin(), functions_.end(),
                                  [&](const MembershipFunction& f) { return f.color() == set.label(); });
    if (seen) {
      throw TrainingError(TrainingErrorKind::kDuplicateColor,
                          fmt::format("colour {} configured twice", color_name(set.label())));
    }
    functions_.emplace_back(std::move(set));
  }
}

Classifier Classifier::with_defaults() { return Classifier(default_training_sets()); }

}  // namespace urisense
