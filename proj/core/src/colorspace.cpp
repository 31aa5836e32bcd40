#include "urisense/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace urisense {

namespace {

bool is_gray(double r, double g, double b) { return r == g && g == b; }

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

}  // namespace

double rgb_to_theta(double r, double g, double b) {
  if (is_gray(r, g, b)) throw DegenerateGrayError();
  const double num = 0.5 * ((r - g) + (r - b));
  const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
  const double ratio = std::clamp(num / den, -1.0, 1.0);
  return std::acos(ratio) * kRadToDeg;
}

HsiPixel rgb_to_hsi(double r, double g, double b) {
  HsiPixel out;
  const double sum = r + g + b;
  out.i = sum / 3.0;
  if (is_gray(r, g, b)) return out;

  const double theta = rgb_to_theta(r, g, b);
  const double degrees = b <= g ? theta : 360.0 - theta;
  out.h = degrees / 360.0;
  if (out.h >= 1.0) out.h = 0.0;  // theta == 0 on the B > G branch
  out.s = std::clamp(1.0 - 3.0 * std::min({r, g, b}) / sum, 0.0, 1.0);
  return out;
}

std::vector<double> hue_matrix(const RgbImage& img) {
  std::vector<double> hues;
  hues.reserve(img.pixels().size());
  for (const Rgb& p : img.pixels()) hues.push_back(rgb_to_hsi(p).h);
  return hues;
}

double lower_median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sequence");
  std::vector<double> sorted(values.begin(), values.end());
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>((sorted.size() - 1) / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  return *mid;
}

HueSummary extract_hue(const RgbImage& img) {
  const std::vector<double> hues = hue_matrix(img);
  const std::span<const double> all(hues);

  std::vector<double> row_medians;
  row_medians.reserve(img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    row_medians.push_back(lower_median(all.subspan(y * img.width(), img.width())));
  }

  std::size_t gray = 0;
  for (const Rgb& p : img.pixels()) gray += is_gray(p.r, p.g, p.b) ? 1 : 0;

  HueSummary summary;
  summary.raw_hue = lower_median(row_medians);
  summary.actual_hue = std::min(summary.raw_hue, 1.0 - summary.raw_hue);
  summary.degenerate_fraction = static_cast<double>(gray) / static_cast<double>(img.pixels().size());
  return summary;
}

}  // namespace urisense
