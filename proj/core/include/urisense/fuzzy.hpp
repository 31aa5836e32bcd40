#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace urisense {

/// Reagent colours in ascending order of sugar concentration. The enum order
/// doubles as the tie-break order: the more severe colour wins a tie.
enum class Color { kBlue, kGreen, kYellow, kOrange, kRed };

inline constexpr std::array<Color, 5> kAllColors = {Color::kBlue, Color::kGreen, Color::kYellow,
                                                    Color::kOrange, Color::kRed};

std::string_view color_name(Color color);
/// Case-insensitive.
std::optional<Color> parse_color(std::string_view name);

struct TrainingNode {
  double hue = 0.0;
  double percent = 0.0;

  friend bool operator==(const TrainingNode&, const TrainingNode&) = default;
};

enum class TrainingErrorKind {
  kDuplicateHue,
  kTooFewNodes,
  kHueOutOfRange,
  kPercentOutOfRange,
  kDuplicateColor,
};

class TrainingError : public std::invalid_argument {
 public:
  TrainingError(TrainingErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  TrainingErrorKind kind() const { return kind_; }

 private:
  TrainingErrorKind kind_;
};

/// Validated interpolation nodes of one colour: at least two, hues distinct
/// and stored ascending.
class TrainingSet {
 public:
  TrainingSet(Color label, std::vector<TrainingNode> nodes);

  Color label() const { return label_; }
  std::span<const TrainingNode> nodes() const { return nodes_; }

  friend bool operator==(const TrainingSet&, const TrainingSet&) = default;

 private:
  Color label_;
  std::vector<TrainingNode> nodes_;
};

/// One column pair of the reference training table, padding rows included.
struct TrainingColumn {
  Color label;
  std::vector<TrainingNode> rows;
};

/// The reference table verbatim, including its (0, 0) padding rows.
std::span<const TrainingColumn> reference_training_table();

/// Drops (0, 0) padding rows and validates each column into a TrainingSet.
std::vector<TrainingSet> parse_training_table(std::span<const TrainingColumn> columns);

/// parse_training_table(reference_training_table()): Red, Yellow, Green, Blue.
std::vector<TrainingSet> default_training_sets();

/// Lagrange interpolant through a training set, identically zero outside the
/// closed hue range spanned by the nodes. Values between nodes are not
/// clamped and can leave [0, 100].
class MembershipFunction {
 public:
  explicit MembershipFunction(TrainingSet training);

  Color color() const { return training_.label(); }
  const TrainingSet& training() const { return training_; }
  double support_min() const { return training_.nodes().front().hue; }
  double support_max() const { return training_.nodes().back().hue; }

  /// Throws std::invalid_argument for x outside [0, 1] or NaN.
  double operator()(double x) const;

 private:
  TrainingSet training_;
};

double membership_value(const MembershipFunction& mf, double x);

enum class Marks { kNil, kPlus1, kPlus2, kPlus3, kPlus4 };

std::string_view marks_symbol(Marks marks);
std::optional<Marks> parse_marks(std::string_view symbol);

struct UrineRange {
  double low_g_dl = 0.0;
  double high_g_dl = 0.0;

  friend bool operator==(const UrineRange&, const UrineRange&) = default;
};

struct ClinicalBand {
  Color color = Color::kBlue;
  Marks marks = Marks::kNil;
  std::optional<UrineRange> urine_range;  ///< empty for Nil
  std::string note;

  friend bool operator==(const ClinicalBand&, const ClinicalBand&) = default;
};

/// Fixed colour -> glycosuria band table.
ClinicalBand clinical_band(Color color);

struct ClassificationReport {
  double input_hue = 0.0;
  std::map<Color, double> values;  ///< raw membership per configured colour
  std::optional<Color> winner;     ///< empty means indeterminate
  std::optional<ClinicalBand> band;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Evaluates every function at x and picks the largest response; ties go to
/// the more severe colour. Indeterminate when no response is positive.
ClassificationReport classify(double x, std::span<const MembershipFunction> functions);

/// Immutable bundle of membership functions, one per colour.
class Classifier {
 public:
  /// Throws TrainingError(kDuplicateColor) if a colour appears twice.
  explicit Classifier(std::vector<TrainingSet> sets);

  static Classifier with_defaults();

  ClassificationReport classify(double x) const { return urisense::classify(x, functions_); }
  std::span<const MembershipFunction> functions() const { return functions_; }

 private:
  std::vector<MembershipFunction> functions_;
};

}  // namespace urisense
