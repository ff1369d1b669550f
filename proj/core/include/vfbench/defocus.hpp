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

#include <cstddef>
#include <utility>
#include <vector>

#include "vfbench/frame.hpp"

namespace vfb {

/// Focal plane and blur strength for the inverse-depth CoC model.
struct FocusSpec {
  double focal_inverse_depth = 1.0;  // d_f in (0,1]
  double blur_strength = 0.025;      // sigma >= 0
};

/// Per-pixel circle of confusion in units of the longer image edge.
struct CocMap {
  Plane values;
};

/// CoC = d_f * |1 - d / d_f| * sigma, evaluated as sigma * |d_f - d| so the
/// result is exactly zero iff d == d_f.
double coc_approx(double inverse_depth, const FocusSpec& spec);
CocMap compute_coc(const DepthMap& depth, const FocusSpec& spec);

/// Thin-lens parameters in meters.
struct ThinLens {
  double aperture;      // A
  double focal_length;  // f
  double focus_depth;   // D_f
};

/// Exact thin-lens CoC: A f |(D - D_f) / (D (D_f - f))|. Requires D > 0 and
/// D_f > f > 0.
double coc_exact(double depth, const ThinLens& lens);
CocMap coc_exact(const Plane& metric_depth, const ThinLens& lens);

struct FocalDepths {
  double far;   // background focus: 20th percentile of first-frame inverse depth
  double near;  // foreground focus: largest per-object mean inverse depth
};

/// Linear-interpolated percentile (numpy "linear" convention), p in [0,100].
double percentile(std::vector<double> values, double p);

/// Picks the far and near focal depths from the first frame. Throws
/// ContractError when the mask holds no object label (pass d_f_near by hand).
FocalDepths select_focal_depths(const DepthMap& first_depth, const LabelMap& first_mask);

struct BlurStats {
  std::size_t blurred_pixels = 0;
  std::size_t capped_pixels = 0;  // pixels whose window radius hit the cap
  int radius_cap = 0;
};

/// Per-pixel gather Gaussian blur. For pixel i the kernel size is
/// k = CoC_i * max(W, H) pixels; the Gaussian has std k/3 over a square
/// window of radius min(ceil(k), min(W, H) / 4). Taps falling outside the
/// image are dropped and the remaining weights renormalized. k < 0.5 copies
/// the pixel unchanged.
Frame spatially_varying_blur(const Frame& frame, const CocMap& coc, BlurStats* stats = nullptr);

struct FocusPair {
  Frame far_focus;
  Frame near_focus;
};

FocusPair synth_mff_frame(const Frame& frame, const DepthMap& depth, const FocalDepths& focus,
                          double blur_strength, BlurStats* stats = nullptr);

/// Focal depths are chosen once from frame 0 and held for the sequence.
std::pair<VideoSequence, VideoSequence> synth_mff_pair(const VideoSequence& video,
                                                       const std::vector<DepthMap>& depths,
                                                       const SegmentMaskSet& masks, double blur_strength,
                                                       int jobs = 1);

}  // namespace vfb
