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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vfbench/frame.hpp"
#include "vfbench/grid.hpp"

namespace vfb {

/// Bilinear interpolation of a grid at real-valued pixel coordinates.
/// Returns nullopt when (x, y) lies outside [0, W-1] x [0, H-1] or is NaN.
template <class T>
std::optional<double> bilinear_sample(const Grid<T>& g, double x, double y) {
  if (!(x >= 0.0 && y >= 0.0 && x <= g.width() - 1 && y <= g.height() - 1)) return std::nullopt;
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;
  const int x1 = std::min(x0 + 1, g.width() - 1);
  const int y1 = std::min(y0 + 1, g.height() - 1);
  const double top = fx == 0.0 ? static_cast<double>(g.at(x0, y0))
                               : (1.0 - fx) * g.at(x0, y0) + fx * g.at(x1, y0);
  if (fy == 0.0) return top;
  const double bottom = fx == 0.0 ? static_cast<double>(g.at(x0, y1))
                                  : (1.0 - fx) * g.at(x0, y1) + fx * g.at(x1, y1);
  return (1.0 - fy) * top + fy * bottom;
}

/// Bilinear interpolation with coordinates clamped to the image (never invalid).
template <class T>
double sample_clamped(const Grid<T>& g, double x, double y) {
  x = std::clamp(x, 0.0, static_cast<double>(g.width() - 1));
  y = std::clamp(y, 0.0, static_cast<double>(g.height() - 1));
  return *bilinear_sample(g, x, y);
}

struct PixelValue {
  std::array<double, 3> c{};
  int channels = 0;
};

/// Per-channel bilinear sample of a frame; nullopt outside the image.
std::optional<PixelValue> bilinear_sample(const Frame& frame, double x, double y);

/// BT.709 luma weights.
inline constexpr std::array<double, 3> kLumaWeights{0.2126, 0.7152, 0.0722};

/// Luma plane of a frame (a copy of the single plane for gray frames).
Plane luma(const Frame& frame);

/// Wraps a plane as a single-channel frame.
Frame to_frame(Plane plane, FrameFormat format = {});

/// 8-bit levels: round(v * 255), clamped to [0, 255].
using LevelImage = Grid<std::uint8_t>;
LevelImage to_levels(const Plane& plane);
LevelImage to_levels(const Frame& frame);

/// Largest stored code for a bit depth (255, 1023 or 65535).
int max_code(BitDepth depth);

/// Rounds every sample to the grid of `depth` (round half away from zero)
/// and records `depth` in the returned frame's format.
Frame quantize(const Frame& frame, BitDepth depth);

/// Normalized 1-D Gaussian taps exp(-i^2 / (2 sigma^2)) for i in [-radius, radius].
std::vector<double> gaussian_kernel(double sigma, int radius);

/// Separable correlation where each output renormalizes by the kernel mass
/// that falls inside the image. Constants are preserved exactly up to rounding.
Plane convolve_normalized(const Plane& in, std::span<const double> kernel);

/// Separable correlation keeping only fully-supported outputs
/// (MATLAB filter2(..., 'valid')). Output is (W-k+1) x (H-k+1).
Plane filter_valid(const Plane& in, std::span<const double> kernel);

/// Sobel derivatives with replicated borders.
struct Gradients {
  Plane gx;
  Plane gy;
};
Gradients sobel(const Plane& in);

}  // namespace vfb

namespace vfb {

/// 256-bin histogram of an 8-bit level image.
std::array<std::size_t, 256> histogram256(const LevelImage& levels);

/// Shannon entropy in bits of a probability vector. Zero entries contribute
/// nothing; terms are summed in ascending order of probability so the result
/// does not depend on bin order.
double entropy_bits(std::vector<double> probabilities);

}  // namespace vfb
