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

#include "vfbench/image_ops.hpp"

#include "vfbench/errors.hpp"

namespace vfb {

std::optional<PixelValue> bilinear_sample(const Frame& frame, double x, double y) {
  PixelValue out;
  out.channels = frame.channels();
  for (int c = 0; c < frame.channels(); ++c) {
    auto s = bilinear_sample(frame.plane(c), x, y);
    if (!s) return std::nullopt;
    out.c[static_cast<std::size_t>(c)] = *s;
  }
  return out;
}

Plane luma(const Frame& frame) {
  require(!frame.empty(), "luma of an empty frame");
  if (frame.channels() == 1) return frame.plane(0);
  Plane out(frame.width(), frame.height());
  const auto& r = frame.plane(0);
  const auto& g = frame.plane(1);
  const auto& b = frame.plane(2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = kLumaWeights[0] * r[i] + kLumaWeights[1] * g[i] + kLumaWeights[2] * b[i];
  }
  return out;
}

Frame to_frame(Plane plane, FrameFormat format) {
  std::vector<Plane> planes;
  planes.push_back(std::move(plane));
  return Frame(std::move(planes), format);
}

LevelImage to_levels(const Plane& plane) {
  LevelImage out(plane.width(), plane.height());
  for (std::size_t i = 0; i < plane.size(); ++i) {
    const double level = std::round(std::clamp(plane[i], 0.0, 1.0) * 255.0);
    out[i] = static_cast<std::uint8_t>(level);
  }
  return out;
}

LevelImage to_levels(const Frame& frame) { return to_levels(luma(frame)); }

int max_code(BitDepth depth) {
  switch (depth) {
    case BitDepth::k10In16: return 1023;
    case BitDepth::k16: return 65535;
    case BitDepth::k8: break;
  }
  return 255;
}

Frame quantize(const Frame& frame, BitDepth depth) {
  const double scale = max_code(depth);
  Frame out = frame;
  out.format().bit_depth = depth;
  for (int c = 0; c < out.channels(); ++c) {
    for (double& s : out.plane(c).values()) s = std::round(s * scale) / scale;
  }
  return out;
}

std::vector<double> gaussian_kernel(double sigma, int radius) {
  require(sigma > 0.0 && radius >= 0, "gaussian kernel needs sigma > 0 and radius >= 0");
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + radius)] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

namespace {

// One normalized pass along x (horizontal = true) or y.
Plane normalized_pass(const Plane& in, std::span<const double> k, bool horizontal) {
  const int r = static_cast<int>(k.size() / 2);
  const int w = in.width();
  const int h = in.height();
  Plane out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      double mass = 0.0;
      for (int i = -r; i <= r; ++i) {
        const int sx = horizontal ? x + i : x;
        const int sy = horizontal ? y : y + i;
        if (!in.contains(sx, sy)) continue;
        const double wt = k[static_cast<std::size_t>(i + r)];
        acc += wt * in.at(sx, sy);
        mass += wt;
      }
      out.at(x, y) = acc / mass;
    }
  }
  return out;
}

}  // namespace

Plane convolve_normalized(const Plane& in, std::span<const double> kernel) {
  require(kernel.size() % 2 == 1, "kernel length must be odd");
  return normalized_pass(normalized_pass(in, kernel, true), kernel, false);
}

Plane filter_valid(const Plane& in, std::span<const double> kernel) {
  const int k = static_cast<int>(kernel.size());
  require(k % 2 == 1, "kernel length must be odd");
  require(in.width() >= k && in.height() >= k, "image smaller than filter window");
  const int ow = in.width() - k + 1;
  const int oh = in.height() - k + 1;
  Plane tmp(ow, in.height());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) acc += kernel[static_cast<std::size_t>(i)] * in.at(x + i, y);
      tmp.at(x, y) = acc;
    }
  }
  Plane out(ow, oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) acc += kernel[static_cast<std::size_t>(i)] * tmp.at(x, y + i);
      out.at(x, y) = acc;
    }
  }
  return out;
}

Gradients sobel(const Plane& in) {
  const int w = in.width();
  const int h = in.height();
  auto px = [&](int x, int y) {
    return in.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1));
  };
  Gradients g{Plane(w, h), Plane(w, h)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      g.gx.at(x, y) = (px(x + 1, y - 1) + 2.0 * px(x + 1, y) + px(x + 1, y + 1)) -
                      (px(x - 1, y - 1) + 2.0 * px(x - 1, y) + px(x - 1, y + 1));
      g.gy.at(x, y) = (px(x - 1, y + 1) + 2.0 * px(x, y + 1) + px(x + 1, y + 1)) -
                      (px(x - 1, y - 1) + 2.0 * px(x, y - 1) + px(x + 1, y - 1));
    }
  }
  return g;
}

}  // namespace vfb

namespace vfb {

std::array<std::size_t, 256> histogram256(const LevelImage& levels) {
  std::array<std::size_t, 256> h{};
  for (auto v : levels.values()) ++h[v];
  return h;
}

double entropy_bits(std::vector<double> probabilities) {
  std::erase_if(probabilities, [](double p) { return p <= 0.0; });
  std::sort(probabilities.begin(), probabilities.end());
  double h = 0.0;
  for (double p : probabilities) h -= p * std::log2(p);
  return h;
}

}  // namespace vfb
