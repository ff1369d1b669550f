/*
 * Copyright 2026 The vfbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vfbench/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "vfbench/errors.hpp"

namespace vfb {
namespace {

struct PngErrorState {
  char message[256] = {};
};

[[noreturn]] void on_png_error(png_structp png, png_const_charp msg) {
  auto* state = static_cast<PngErrorState*>(png_get_error_ptr(png));
  if (state != nullptr) std::snprintf(state->message, sizeof(state->message), "%s", msg);
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

class File {
 public:
  File(const std::filesystem::path& path, const char* mode) : fp_(std::fopen(path.c_str(), mode)) {}
  ~File() {
    if (fp_ != nullptr) std::fclose(fp_);
  }
  File(const File&) = delete;
  File& operator=(const File&) = delete;
  std::FILE* get() const { return fp_; }
  int close() {
    int rc = std::fclose(fp_);
    fp_ = nullptr;
    return rc;
  }

 private:
  std::FILE* fp_;
};

struct DecodeBuffers {
  PngImage image;
  std::vector<png_byte> buffer;
  std::vector<png_bytep> rows;
};

// Everything written after setjmp lives in the caller's `out`, so no local
// with a non-trivial destructor is skipped by longjmp.
void decode(std::FILE* file, bool keep_indices, PngErrorState& state, DecodeBuffers* out,
            const std::filesystem::path& path) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, on_png_error, on_png_warning);
  if (png == nullptr) throw IoError("libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("'" + path.string() + "': " + state.message);
  }

  png_init_io(png, file);
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    if (keep_indices) {
      png_set_packing(png);
    } else {
      png_set_palette_to_rgb(png);
    }
  }
  if (color_type == PNG_COLOR_TYPE_GRAY && depth < 8) {
    if (keep_indices) {
      png_set_packing(png);
    } else {
      png_set_expand_gray_1_2_4_to_8(png);
    }
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (depth == 16) png_set_swap(png);
  png_read_update_info(png, info);

  PngImage& image = out->image;
  image.width = static_cast<int>(png_get_image_width(png, info));
  image.height = static_cast<int>(png_get_image_height(png, info));
  image.channels = png_get_channels(png, info);
  image.bit_depth = png_get_bit_depth(png, info) == 16 ? 16 : 8;
  if (image.channels != 1 && image.channels != 3) png_error(png, "unsupported channel layout");

  const std::size_t row_bytes = png_get_rowbytes(png, info);
  out->buffer.resize(row_bytes * static_cast<std::size_t>(image.height));
  out->rows.resize(static_cast<std::size_t>(image.height));
  for (int y = 0; y < image.height; ++y) {
    out->rows[static_cast<std::size_t>(y)] = out->buffer.data() + row_bytes * y;
  }
  png_read_image(png, out->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
}

PngImage read_impl(const std::filesystem::path& path, bool keep_indices) {
  File file(path, "rb");
  if (file.get() == nullptr) throw IoError("cannot open '" + path.string() + "'");
  unsigned char signature[8];
  if (std::fread(signature, 1, 8, file.get()) != 8 || png_sig_cmp(signature, 0, 8) != 0) {
    throw IoError("'" + path.string() + "' is not a PNG file");
  }

  PngErrorState state;
  DecodeBuffers d;
  decode(file.get(), keep_indices, state, &d, path);
  PngImage image = std::move(d.image);
  const auto& rows = d.rows;

  const std::size_t n = static_cast<std::size_t>(image.width) * image.height * image.channels;
  image.samples.resize(n);
  const std::size_t per_row = static_cast<std::size_t>(image.width) * image.channels;
  for (std::size_t y = 0; y < static_cast<std::size_t>(image.height); ++y) {
    if (image.bit_depth == 16) {
      std::memcpy(image.samples.data() + y * per_row, rows[y], per_row * sizeof(std::uint16_t));
    } else {
      for (std::size_t i = 0; i < per_row; ++i) image.samples[y * per_row + i] = rows[y][i];
    }
  }
  return image;
}

}  // namespace

PngImage read_png(const std::filesystem::path& path) { return read_impl(path, false); }

PngImage read_png_indices(const std::filesystem::path& path) { return read_impl(path, true); }

namespace {

// Kept free of C++ objects with non-trivial lifetimes so longjmp cannot skip
// a destructor.
void encode(std::FILE* file, const PngImage& image, png_bytep* rows, PngErrorState& state,
            const std::filesystem::path& path) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &state, on_png_error, on_png_warning);
  if (png == nullptr) throw IoError("libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("'" + path.string() + "': " + state.message);
  }
  png_init_io(png, file);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height),
               image.bit_depth, image.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (image.bit_depth == 16) png_set_swap(png);
  png_write_image(png, rows);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

void write_png(const std::filesystem::path& path, const PngImage& image) {
  require(image.channels == 1 || image.channels == 3, "PNG writer supports 1 or 3 channels");
  require(image.bit_depth == 8 || image.bit_depth == 16, "PNG writer supports 8 or 16 bits");
  const std::size_t per_row = static_cast<std::size_t>(image.width) * image.channels;
  require(image.samples.size() == per_row * image.height, "PNG sample count does not match header");

  std::vector<png_byte> buffer(per_row * image.height * (image.bit_depth / 8));
  if (image.bit_depth == 16) {
    std::memcpy(buffer.data(), image.samples.data(), buffer.size());
  } else {
    for (std::size_t i = 0; i < image.samples.size(); ++i) buffer[i] = static_cast<png_byte>(image.samples[i]);
  }
  const std::size_t row_bytes = per_row * (image.bit_depth / 8);
  std::vector<png_bytep> rows(static_cast<std::size_t>(image.height));
  for (int y = 0; y < image.height; ++y) rows[static_cast<std::size_t>(y)] = buffer.data() + row_bytes * y;

  File file(path, "wb");
  if (file.get() == nullptr) throw IoError("cannot create '" + path.string() + "'");
  PngErrorState state;
  encode(file.get(), image, rows.data(), state, path);
  if (file.close() != 0) throw IoError("error closing '" + path.string() + "'");
}

}  // namespace vfb
