#include "rocotex/io/png.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include <openssl/evp.h>
#include <png.h>

namespace rocotex::io {

namespace {

std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& pixels, int width, int height, int format) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(width);
  img.height = static_cast<png_uint_32>(height);
  img.format = format;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&img, nullptr, &size, 0, pixels.data(), 0, nullptr))
    throw Error(std::string("png encode failed: ") + img.message);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&img, out.data(), &size, 0, pixels.data(), 0, nullptr))
    throw Error(std::string("png encode failed: ") + img.message);
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> decode(const std::vector<std::uint8_t>& bytes, int format, int& width, int& height) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size()))
    throw Error(std::string("png decode failed: ") + img.message);
  img.format = format;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, pixels.data(), 0, nullptr)) {
    png_image_free(&img);
    throw Error(std::string("png decode failed: ") + img.message);
  }
  width = static_cast<int>(img.width);
  height = static_cast<int>(img.height);
  return pixels;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

std::vector<std::uint8_t> encode_png(const ViewImage& image) {
  const int w = image.width();
  const int h = image.height();
  std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h * 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c) px[(static_cast<std::size_t>(y) * w + x) * 3 + c] = quantize(image[c](y, x));
  return encode(px, w, h, PNG_FORMAT_RGB);
}

std::vector<std::uint8_t> encode_png(const Plane<float>& gray) {
  const int w = static_cast<int>(gray.cols());
  const int h = static_cast<int>(gray.rows());
  std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) px[static_cast<std::size_t>(y) * w + x] = quantize(gray(y, x));
  return encode(px, w, h, PNG_FORMAT_GRAY);
}

ViewImage decode_png_rgb(const std::vector<std::uint8_t>& bytes) {
  int w = 0, h = 0;
  const auto px = decode(bytes, PNG_FORMAT_RGB, w, h);
  ViewImage img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c) img[c](y, x) = px[(static_cast<std::size_t>(y) * w + x) * 3 + c] / 255.0f;
  return img;
}

Plane<float> decode_png_gray(const std::vector<std::uint8_t>& bytes) {
  int w = 0, h = 0;
  const auto px = decode(bytes, PNG_FORMAT_GRAY, w, h);
  Plane<float> img(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) img(y, x) = px[static_cast<std::size_t>(y) * w + x] / 255.0f;
  return img;
}

void write_png(const std::filesystem::path& path, const ViewImage& image) { write_file(path, encode_png(image)); }
void write_png(const std::filesystem::path& path, const Plane<float>& gray) { write_file(path, encode_png(gray)); }
ViewImage read_png_rgb(const std::filesystem::path& path) { return decode_png_rgb(read_file(path)); }

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) throw Error("base64: length is not a multiple of 4");
  std::vector<std::uint8_t> out(3 * text.size() / 4);
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()), static_cast<int>(text.size()));
  if (n < 0) throw Error("base64: invalid input");
  // EVP_DecodeBlock keeps the zero bytes produced by '=' padding.
  std::size_t pad = 0;
  if (!text.empty() && text.back() == '=') ++pad;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(n) - pad);
  return out;
}

}  // namespace rocotex::io
