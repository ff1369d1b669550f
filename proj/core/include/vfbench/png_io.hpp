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

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace vfb {

/// Decoded PNG samples, interleaved, widened to 16 bits per sample.
/// `bit_depth` is 8 or 16 and records the container depth of the file.
struct PngImage {
  int width = 0;
  int height = 0;
  int channels = 0;  // 1 (gray) or 3 (RGB); alpha is dropped
  int bit_depth = 8;
  std::vector<std::uint16_t> samples;
};

/// Reads gray, gray+alpha, RGB, RGBA or palette PNGs. Palettes are expanded
/// to RGB and low-bit gray to 8 bits. Throws IoError on failure.
PngImage read_png(const std::filesystem::path& path);

/// Reads a label image: palette indices are returned as-is (one channel),
/// gray images return their stored values.
PngImage read_png_indices(const std::filesystem::path& path);

/// Writes an 8- or 16-bit gray or RGB PNG. Throws IoError on failure.
void write_png(const std::filesystem::path& path, const PngImage& image);

}  // namespace vfb
