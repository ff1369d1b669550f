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

#include <string_view>

#include "vfbench/flow.hpp"
#include "vfbench/frame.hpp"
#include "vfbench/temporal.hpp"

namespace vfb {

enum class Task { kMef, kMff, kIvf, kMvf };

std::string_view to_string(Task t);
/// Accepts "mef", "mff", "ivf", "mvf" in either case.
Task parse_task(std::string_view s);

struct LossWeights {
  double alpha1 = 1.0;
  double alpha2 = 1.0;

  /// MEF (10, 2), MFF (1, 0.5), IVF (5, 2), MVF (1, 1).
  static LossWeights preset(Task task);
  void validate() const;
};

struct LossBreakdown {
  double l_spatial = 0.0;
  double l_int = 0.0;   // MEF/MFF only
  double l_ssim = 0.0;  // MEF/MFF only
  double l_grad = 0.0;
  double l_temp = 0.0;
  double total = 0.0;
  bool temp_flagged = false;
  LossWeights weights;
};

/// Reference evaluation of the training loss on the middle frame of a
/// three-frame clip:
///   total = l_spatial + alpha1 * l_grad + alpha2 * l_temp
/// IVF/MVF: l_spatial = mean |F - max(A, B)|.
/// MEF/MFF: l_spatial = l_int + l_ssim with l_int = mean |F - (A + B) / 2| and
///          l_ssim = 2 - SSIM(A, F) - SSIM(B, F) on luma.
/// l_grad = mean | |grad F| - max(|grad A|, |grad B|) | with Sobel |gx| + |gy|.
/// Intensity terms average over every sample of every channel in [0,1].
/// l_temp is BiSWE at unit scale on the fused clip, using `fused_flows`.
LossBreakdown loss_reference(const Clip& fused, const Clip& src_a, const Clip& src_b, Task task,
                             const TripleFlows& fused_flows, const OcclusionParams& occlusion = {});
LossBreakdown loss_reference(const Clip& fused, const Clip& src_a, const Clip& src_b, Task task,
                             const TripleFlows& fused_flows, const LossWeights& weights,
                             const OcclusionParams& occlusion = {});

}  // namespace vfb
