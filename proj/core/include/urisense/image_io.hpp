#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "urisense/imaging.hpp"

namespace urisense {

enum class ImageErrorKind {
  kMalformedHeader,
  kUnsupportedFormat,
  kTruncatedData,
  kIo,
};

class ImageError : public std::runtime_error {
 public:
  ImageError(ImageErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ImageErrorKind kind() const { return kind_; }

 private:
  ImageErrorKind kind_;
};

/// Decodes a binary PPM (P6, maxval 255) or an uncompressed 24-bit BMP.
/// The format is sniffed from the magic bytes.
RgbImage load_image(std::span<const std::uint8_t> bytes);
RgbImage load_image_file(const std::filesystem::path& path);

/// Channels are rounded to the nearest integer.
std::vector<std::uint8_t> encode_ppm(const RgbImage& img);
std::vector<std::uint8_t> encode_bmp(const RgbImage& img);

void save_image_file(const std::filesystem::path& path, const RgbImage& img);

}  // namespace urisense
