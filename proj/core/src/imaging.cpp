#include "urisense/imaging.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace urisense {

namespace {

void check_channel(double v) {
  if (!(v >= 0.0 && v <= 255.0)) {
    throw std::invalid_argument("channel value outside [0, 255]: " + std::to_string(v));
  }
}

// One-dimensional clamped running mean along either axis. `stride` steps
// between consecutive samples of a line, `lines` lines of `length` samples
// start `line_step` apart.
void box_pass(const std::vector<double>& in, std::vector<double>& out, std::size_t length,
              std::size_t stride, std::size_t lines, std::size_t line_step, int radius) {
  const double taps = 2.0 * radius + 1.0;
  const auto last = static_cast<std::ptrdiff_t>(length) - 1;
  for (std::size_t line = 0; line < lines; ++line) {
    const std::size_t base = line * line_step;
    for (std::size_t i = 0; i < length; ++i) {
      double sum = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const auto j = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i) + k, 0, last);
        sum += in[base + static_cast<std::size_t>(j) * stride];
      }
      out[base + i * stride] = std::clamp(sum / taps, 0.0, 255.0);
    }
  }
}

}  // namespace

RgbImage::RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw std::invalid_argument("image dimensions must be at least 1x1");
  }
  if (pixels_.size() != width_ * height_) {
    throw std::invalid_argument("pixel count does not match width x height");
  }
  for (const Rgb& p : pixels_) {
    check_channel(p.r);
    check_channel(p.g);
    check_channel(p.b);
  }
}

RgbImage::RgbImage(std::size_t width, std::size_t height, Rgb fill)
    : RgbImage(width, height, std::vector<Rgb>(width * height, fill)) {}

Plane extract_plane(const RgbImage& img, Channel channel) {
  Plane plane{img.width(), img.height(), {}};
  plane.values.reserve(img.pixels().size());
  for (const Rgb& p : img.pixels()) {
    switch (channel) {
      case Channel::kRed: plane.values.push_back(p.r); break;
      case Channel::kGreen: plane.values.push_back(p.g); break;
      case Channel::kBlue: plane.values.push_back(p.b); break;
    }
  }
  return plane;
}

RgbImage merge_planes(const Plane& red, const Plane& green, const Plane& blue) {
  if (red.width != green.width || red.width != blue.width || red.height != green.height ||
      red.height != blue.height) {
    throw std::invalid_argument("plane dimensions differ");
  }
  std::vector<Rgb> pixels(red.values.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = {red.values[i], green.values[i], blue.values[i]};
  }
  return RgbImage(red.width, red.height, std::move(pixels));
}

Plane mean_filter_plane(const Plane& plane, KernelSize kernel) {
  if (plane.width == 0 || plane.height == 0 || plane.values.size() != plane.width * plane.height) {
    throw std::invalid_argument("mean filter needs a nonempty, consistent plane");
  }
  if (kernel.row_radius < 0 || kernel.col_radius < 0) {
    throw std::invalid_argument("kernel radii must be nonnegative");
  }
  if (kernel.row_radius == 0 && kernel.col_radius == 0) return plane;

  // The clamped box mean is separable: rows first, then columns.
  std::vector<double> tmp(plane.values.size());
  box_pass(plane.values, tmp, plane.width, 1, plane.height, plane.width, kernel.col_radius);
  Plane out{plane.width, plane.height, std::vector<double>(plane.values.size())};
  box_pass(tmp, out.values, plane.height, plane.width, plane.width, 1, kernel.row_radius);
  return out;
}

RgbImage denoise(const RgbImage& img, KernelSize kernel) {
  return merge_planes(mean_filter_plane(extract_plane(img, Channel::kRed), kernel),
                      mean_filter_plane(extract_plane(img, Channel::kGreen), kernel),
                      mean_filter_plane(extract_plane(img, Channel::kBlue), kernel));
}

}  // namespace urisense
