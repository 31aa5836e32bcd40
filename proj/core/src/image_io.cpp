#include "urisense/image_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

namespace urisense {

namespace {

// ---------------------------------------------------------------------------
// PPM (P6)

class PpmHeaderReader {
 public:
  explicit PpmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::optional<std::size_t> next_number() {
    skip_whitespace_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) return std::nullopt;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      if (value > std::numeric_limits<std::size_t>::max() / 10 - 10) return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  bool consume_single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) return false;
    ++pos_;
    return true;
  }

  std::size_t position() const { return pos_; }
  void skip(std::size_t n) { pos_ += n; }

 private:
  void skip_whitespace_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

RgbImage decode_ppm(std::span<const std::uint8_t> bytes) {
  PpmHeaderReader reader(bytes);
  reader.skip(2);
  const auto width = reader.next_number();
  const auto height = reader.next_number();
  const auto maxval = reader.next_number();
  if (!width || !height || !maxval) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "PPM header is malformed");
  }
  if (*width == 0 || *height == 0) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "PPM dimensions must be nonzero");
  }
  if (*maxval != 255) {
    throw ImageError(ImageErrorKind::kUnsupportedFormat,
                     "PPM maxval " + std::to_string(*maxval) + " unsupported (need 255)");
  }
  if (!reader.consume_single_whitespace()) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "PPM header not terminated by whitespace");
  }
  if (*width > std::numeric_limits<std::uint32_t>::max() / *height) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "PPM dimensions too large");
  }
  const std::size_t count = *width * *height;
  const std::size_t offset = reader.position();
  if (bytes.size() - offset < count * 3) {
    throw ImageError(ImageErrorKind::kTruncatedData, "PPM pixel data is truncated");
  }
  std::vector<Rgb> pixels(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto* p = &bytes[offset + 3 * i];
    pixels[i] = {static_cast<double>(p[0]), static_cast<double>(p[1]), static_cast<double>(p[2])};
  }
  return RgbImage(*width, *height, std::move(pixels));
}

// ---------------------------------------------------------------------------
// BMP (BITMAPINFOHEADER or later, 24 bpp, BI_RGB)

constexpr std::size_t kBmpFileHeaderSize = 14;
constexpr std::size_t kBmpInfoHeaderSize = 40;

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

std::size_t bmp_row_stride(std::size_t width) { return (width * 3 + 3) / 4 * 4; }

RgbImage decode_bmp(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kBmpFileHeaderSize + kBmpInfoHeaderSize) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "BMP header is too short");
  }
  const std::uint32_t data_offset = read_u32(bytes, 10);
  const std::uint32_t info_size = read_u32(bytes, 14);
  if (info_size < kBmpInfoHeaderSize) {
    throw ImageError(ImageErrorKind::kUnsupportedFormat,
                     "BMP info header of " + std::to_string(info_size) + " bytes unsupported");
  }
  const auto width = static_cast<std::int32_t>(read_u32(bytes, 18));
  const auto height = static_cast<std::int32_t>(read_u32(bytes, 22));
  const std::uint16_t planes = read_u16(bytes, 26);
  const std::uint16_t bpp = read_u16(bytes, 28);
  const std::uint32_t compression = read_u32(bytes, 30);

  if (planes != 1 || width <= 0 || height == 0 ||
      height == std::numeric_limits<std::int32_t>::min()) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "BMP header fields are invalid");
  }
  if (bpp != 24) {
    throw ImageError(ImageErrorKind::kUnsupportedFormat,
                     "BMP bit depth " + std::to_string(bpp) + " unsupported (need 24)");
  }
  if (compression != 0) {
    throw ImageError(ImageErrorKind::kUnsupportedFormat, "compressed BMP unsupported");
  }
  if (data_offset < kBmpFileHeaderSize + info_size) {
    throw ImageError(ImageErrorKind::kMalformedHeader, "BMP pixel offset overlaps header");
  }

  const bool top_down = height < 0;
  const auto w = static_cast<std::size_t>(width);
  const auto h = static_cast<std::size_t>(top_down ? -static_cast<std::int64_t>(height) : height);
  const std::size_t stride = bmp_row_stride(w);
  const std::size_t needed = static_cast<std::size_t>(data_offset) + stride * (h - 1) + w * 3;
  if (bytes.size() < needed) {
    throw ImageError(ImageErrorKind::kTruncatedData, "BMP pixel data is truncated");
  }

  std::vector<Rgb> pixels(w * h);
  for (std::size_t row = 0; row < h; ++row) {
    const std::size_t stored = top_down ? row : h - 1 - row;
    const std::size_t base = data_offset + stored * stride;
    for (std::size_t col = 0; col < w; ++col) {
      const auto* p = &bytes[base + 3 * col];
      pixels[row * w + col] = {static_cast<double>(p[2]), static_cast<double>(p[1]),
                               static_cast<double>(p[0])};
    }
  }
  return RgbImage(w, h, std::move(pixels));
}

std::uint8_t quantize(double v) { return static_cast<std::uint8_t>(std::lround(v)); }

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

}  // namespace

RgbImage load_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return decode_ppm(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') return decode_bmp(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] >= '1' && bytes[1] <= '7') {
    throw ImageError(ImageErrorKind::kUnsupportedFormat, "only binary P6 PPM is supported");
  }
  throw ImageError(ImageErrorKind::kUnsupportedFormat, "unrecognized image format");
}

RgbImage load_image_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ImageError(ImageErrorKind::kIo, "cannot open image " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return load_image(bytes);
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + img.pixels().size() * 3);
  for (const Rgb& p : img.pixels()) {
    out.push_back(quantize(p.r));
    out.push_back(quantize(p.g));
    out.push_back(quantize(p.b));
  }
  return out;
}

std::vector<std::uint8_t> encode_bmp(const RgbImage& img) {
  const std::size_t stride = bmp_row_stride(img.width());
  const std::size_t data_size = stride * img.height();
  const std::size_t offset = kBmpFileHeaderSize + kBmpInfoHeaderSize;

  std::vector<std::uint8_t> out;
  out.reserve(offset + data_size);
  out.push_back('B');
  out.push_back('M');
  put_u32(out, static_cast<std::uint32_t>(offset + data_size));
  put_u32(out, 0);
  put_u32(out, static_cast<std::uint32_t>(offset));
  put_u32(out, kBmpInfoHeaderSize);
  put_u32(out, static_cast<std::uint32_t>(img.width()));
  put_u32(out, static_cast<std::uint32_t>(img.height()));
  put_u16(out, 1);
  put_u16(out, 24);
  put_u32(out, 0);
  put_u32(out, static_cast<std::uint32_t>(data_size));
  put_u32(out, 2835);  // 72 dpi
  put_u32(out, 2835);
  put_u32(out, 0);
  put_u32(out, 0);

  for (std::size_t stored = 0; stored < img.height(); ++stored) {
    const std::size_t row = img.height() - 1 - stored;
    for (const Rgb& p : img.row(row)) {
      out.push_back(quantize(p.b));
      out.push_back(quantize(p.g));
      out.push_back(quantize(p.r));
    }
    for (std::size_t pad = img.width() * 3; pad < stride; ++pad) out.push_back(0);
  }
  return out;
}

void save_image_file(const std::filesystem::path& path, const RgbImage& img) {
  const bool bmp = path.extension() == ".bmp" || path.extension() == ".BMP";
  const auto bytes = bmp ? encode_bmp(img) : encode_ppm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw ImageError(ImageErrorKind::kIo, "cannot write image " + path.string());
  }
}

}  // namespace urisense
