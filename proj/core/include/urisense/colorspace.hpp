#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "urisense/imaging.hpp"

namespace urisense {

/// Hue normalized to [0, 1) (degrees / 360), saturation in [0, 1],
/// intensity on the 0-255 scale.
struct HsiPixel {
  double h = 0.0;
  double s = 0.0;
  double i = 0.0;
};

/// Result of the median-of-row-medians hue collection.
struct HueSummary {
  double raw_hue = 0.0;     ///< lower median of the per-row lower medians, [0, 1)
  double actual_hue = 0.0;  ///< min(raw_hue, 1 - raw_hue), [0, 0.5]
  double degenerate_fraction = 0.0;  ///< share of pixels with R = G = B
};

class DegenerateGrayError : public std::domain_error {
 public:
  DegenerateGrayError() : std::domain_error("hue angle undefined for R = G = B") {}
};

/// Hue angle in degrees, [0, 180]. Throws DegenerateGrayError when R = G = B,
/// which is exactly when the denominator vanishes.
double rgb_to_theta(double r, double g, double b);

/// Gray pixels get h = 0 and s = 0; black additionally has s = 0 by the same
/// convention.
HsiPixel rgb_to_hsi(double r, double g, double b);
inline HsiPixel rgb_to_hsi(const Rgb& p) { return rgb_to_hsi(p.r, p.g, p.b); }

/// Normalized hue of every pixel, row-major (gray pixels contribute 0).
std::vector<double> hue_matrix(const RgbImage& img);

/// Element at index floor((n-1)/2) of the sorted sequence. Throws
/// std::invalid_argument on an empty sequence.
double lower_median(std::span<const double> values);

HueSummary extract_hue(const RgbImage& img);

}  // namespace urisense
