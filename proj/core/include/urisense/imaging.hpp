#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace urisense {

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Row-major 3-channel raster with channels on the 0-255 scale.
///
/// Channels are stored as doubles so filtered images keep their fractional
/// values all the way into hue extraction.
class RgbImage {
 public:
  /// Throws std::invalid_argument if a dimension is zero, the pixel count does
  /// not match, or any channel lies outside [0, 255].
  RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

  /// Uniform image.
  RgbImage(std::size_t width, std::size_t height, Rgb fill);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const Rgb> pixels() const { return pixels_; }
  std::span<const Rgb> row(std::size_t y) const {
    return std::span<const Rgb>(pixels_).subspan(y * width_, width_);
  }
  const Rgb& at(std::size_t row, std::size_t col) const {
    return pixels_[row * width_ + col];
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rgb> pixels_;
};

/// Single-channel raster, row-major.
struct Plane {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> values;

  double at(std::size_t row, std::size_t col) const {
    return values[row * width + col];
  }
  friend bool operator==(const Plane&, const Plane&) = default;
};

/// Mean-filter mask of (2*row_radius+1) x (2*col_radius+1) taps, every
/// weight equal to 1/(taps). row_radius spans row offsets, col_radius spans
/// column offsets.
struct KernelSize {
  int row_radius = 1;
  int col_radius = 1;

  int rows() const { return 2 * row_radius + 1; }
  int cols() const { return 2 * col_radius + 1; }
  double weight() const { return 1.0 / (static_cast<double>(rows()) * cols()); }

  friend bool operator==(const KernelSize&, const KernelSize&) = default;
};

enum class Channel { kRed, kGreen, kBlue };

Plane extract_plane(const RgbImage& img, Channel channel);
RgbImage merge_planes(const Plane& red, const Plane& green, const Plane& blue);

/// Mean of the clamped neighbourhood around every sample. Coordinates outside
/// the plane are clamped to the nearest edge (replicate padding).
Plane mean_filter_plane(const Plane& plane, KernelSize kernel);

/// Mean filter applied to each colour plane independently.
RgbImage denoise(const RgbImage& img, KernelSize kernel);

}  // namespace urisense
