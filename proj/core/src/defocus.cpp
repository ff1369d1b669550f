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

#include "vfbench/defocus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vfbench/errors.hpp"
#include "vfbench/parallel.hpp"

namespace vfb {

namespace {

void require_focus(const FocusSpec& spec) {
  require(spec.focal_inverse_depth > 0.0 && spec.focal_inverse_depth <= 1.0,
          "focal inverse depth d_f must lie in (0,1]");
  require(spec.blur_strength >= 0.0 && std::isfinite(spec.blur_strength), "blur strength must be >= 0");
}

}  // namespace

double coc_approx(double inverse_depth, const FocusSpec& spec) {
  return spec.blur_strength * std::abs(spec.focal_inverse_depth - inverse_depth);
}

CocMap compute_coc(const DepthMap& depth, const FocusSpec& spec) {
  require_focus(spec);
  depth.validate();
  CocMap out{Plane(depth.width(), depth.height())};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = coc_approx(depth.values[i], spec);
  return out;
}

double coc_exact(double depth, const ThinLens& lens) {
  require(depth > 0.0, "coc_exact: depth must be positive");
  require(lens.focal_length > 0.0 && lens.focus_depth > lens.focal_length,
          "coc_exact: requires D_f > f > 0");
  return lens.aperture * lens.focal_length *
         std::abs((depth - lens.focus_depth) / (depth * (lens.focus_depth - lens.focal_length)));
}

CocMap coc_exact(const Plane& metric_depth, const ThinLens& lens) {
  CocMap out{Plane(metric_depth.width(), metric_depth.height())};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = coc_exact(metric_depth[i], lens);
  return out;
}

double percentile(std::vector<double> values, double p) {
  require(!values.empty(), "percentile of an empty set");
  require(p >= 0.0 && p <= 100.0, "percentile must lie in [0,100]");
  std::sort(values.begin(), values.end());
  const double pos = p / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

FocalDepths select_focal_depths(const DepthMap& first_depth, const LabelMap& first_mask) {
  require(first_depth.values.same_shape(first_mask), "depth map and mask differ in size");
  first_depth.validate();
  const auto d = first_depth.values.values();

  std::map<std::int32_t, std::pair<double, std::size_t>> objects;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto label = first_mask[i];
    if (label == 0) continue;
    auto& [sum, count] = objects[label];
    sum += d[i];
    ++count;
  }
  require(!objects.empty(),
          "first-frame mask contains no object labels; supply the near focal depth explicitly");

  FocalDepths out{percentile({d.begin(), d.end()}, 20.0), 0.0};
  bool first = true;
  for (const auto& [label, acc] : objects) {
    const double mean = acc.first / static_cast<double>(acc.second);
    if (first || mean > out.near) out.near = mean;
    first = false;
  }
  return out;
}

Frame spatially_varying_blur(const Frame& frame, const CocMap& coc, BlurStats* stats) {
  const int w = frame.width();
  const int h = frame.height();
  require(coc.values.width() == w && coc.values.height() == h, "CoC map and frame differ in size");
  const double edge = std::max(w, h);
  const int cap = std::max(1, std::min(w, h) / 4);

  BlurStats local;
  local.radius_cap = cap;
  Frame out = frame;
  // Clamping to the plane's range keeps the weighted-average bound exact
  // under rounding.
  std::vector<std::pair<double, double>> range;
  for (int c = 0; c < frame.channels(); ++c) {
    const auto v = frame.plane(c).values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    range.emplace_back(*lo, *hi);
  }
  std::vector<double> gx;
  std::vector<double> gy;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double k = coc.values.at(x, y) * edge;
      require(std::isfinite(k) && k >= 0.0, "CoC values must be finite and non-negative");
      if (k < 0.5) continue;
      int radius = static_cast<int>(std::ceil(k));
      if (radius > cap) {
        radius = cap;
        ++local.capped_pixels;
      }
      ++local.blurred_pixels;
      const double sd = k / 3.0;
      const int x0 = std::max(0, x - radius);
      const int x1 = std::min(w - 1, x + radius);
      const int y0 = std::max(0, y - radius);
      const int y1 = std::min(h - 1, y + radius);
      gx.resize(static_cast<std::size_t>(x1 - x0 + 1));
      gy.resize(static_cast<std::size_t>(y1 - y0 + 1));
      double sx = 0.0;
      double sy = 0.0;
      for (int xx = x0; xx <= x1; ++xx) {
        const double dx = xx - x;
        sx += gx[static_cast<std::size_t>(xx - x0)] = std::exp(-dx * dx / (2.0 * sd * sd));
      }
      for (int yy = y0; yy <= y1; ++yy) {
        const double dy = yy - y;
        sy += gy[static_cast<std::size_t>(yy - y0)] = std::exp(-dy * dy / (2.0 * sd * sd));
      }
      const double norm = 1.0 / (sx * sy);
      for (int c = 0; c < frame.channels(); ++c) {
        const Plane& src = frame.plane(c);
        double acc = 0.0;
        for (int yy = y0; yy <= y1; ++yy) {
          const auto row = src.row(yy);
          double racc = 0.0;
          for (int xx = x0; xx <= x1; ++xx) racc += gx[static_cast<std::size_t>(xx - x0)] * row[static_cast<std::size_t>(xx)];
          acc += gy[static_cast<std::size_t>(yy - y0)] * racc;
        }
        const auto [lo, hi] = range[static_cast<std::size_t>(c)];
        out.plane(c).at(x, y) = std::clamp(acc * norm, lo, hi);
      }
    }
  }
  if (stats != nullptr) *stats = local;
  return out;
}

FocusPair synth_mff_frame(const Frame& frame, const DepthMap& depth, const FocalDepths& focus,
                          double blur_strength, BlurStats* stats) {
  require(depth.width() == frame.width() && depth.height() == frame.height(),
          "depth map and frame differ in size");
  BlurStats far_stats;
  BlurStats near_stats;
  FocusPair out{
      spatially_varying_blur(frame, compute_coc(depth, {focus.far, blur_strength}), &far_stats),
      spatially_varying_blur(frame, compute_coc(depth, {focus.near, blur_strength}), &near_stats)};
  if (stats != nullptr) {
    stats->radius_cap = far_stats.radius_cap;
    stats->blurred_pixels = far_stats.blurred_pixels + near_stats.blurred_pixels;
    stats->capped_pixels = far_stats.capped_pixels + near_stats.capped_pixels;
  }
  return out;
}

std::pair<VideoSequence, VideoSequence> synth_mff_pair(const VideoSequence& video,
                                                       const std::vector<DepthMap>& depths,
                                                       const SegmentMaskSet& masks, double blur_strength,
                                                       int jobs) {
  video.validate();
  if (depths.size() != video.size()) {
    throw StructuralError("synth_mff_pair: " + std::to_string(depths.size()) + " depth maps for " +
                          std::to_string(video.size()) + " frames");
  }
  require(!masks.empty(), "synth_mff_pair: a first-frame mask is required");
  const FocalDepths focus = select_focal_depths(depths.front(), masks.front());
  VideoSequence far{{}, video.fps, video.scene_id, Role::kSourceA};
  VideoSequence near{{}, video.fps, video.scene_id, Role::kSourceB};
  auto pairs = parallel_map<FocusPair>(video.size(), jobs, [&](std::size_t i) {
    return synth_mff_frame(video[i], depths[i], focus, blur_strength);
  });
  for (auto& pair : pairs) {
    far.frames.push_back(std::move(pair.far_focus));
    near.frames.push_back(std::move(pair.near_focus));
  }
  return {std::move(far), std::move(near)};
}

}  // namespace vfb
