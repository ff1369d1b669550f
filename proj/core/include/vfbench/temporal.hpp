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

#include "vfbench/flow.hpp"
#include "vfbench/frame.hpp"

namespace vfb {

/// Level scale used when reporting BiSWE (0-255 intensities).
inline constexpr double kBisweScale = 255.0;

struct BisweResult {
  double value = 0.0;  // prev_term + next_term
  double prev_term = 0.0;
  double next_term = 0.0;
  // A term whose mask selects no pixel contributes 0 and is flagged here.
  bool prev_empty = false;
  bool next_empty = false;

  bool flagged() const { return prev_empty || next_empty; }
};

/// Bidirectional self-warping error of `cur` against its warped neighbors.
/// Each neighbor is backward-warped onto cur's grid with the flow
/// cur -> neighbor; the term is the mean |cur - warped| * scale over pixels
/// selected by the mask whose warp sample is valid.
BisweResult biswe(const Plane& prev, const Plane& cur, const Plane& next, const FlowField& cur_to_prev,
                  const FlowField& cur_to_next, const Mask& mask_prev, const Mask& mask_next,
                  double scale = kBisweScale);
BisweResult biswe(const Frame& prev, const Frame& cur, const Frame& next, const FlowField& cur_to_prev,
                  const FlowField& cur_to_next, const Mask& mask_prev, const Mask& mask_next,
                  double scale = kBisweScale);

/// The four flows a triple needs for BiSWE and the temporal loss.
struct TripleFlows {
  FlowField cur_to_prev;
  FlowField prev_to_cur;
  FlowField cur_to_next;
  FlowField next_to_cur;
};

TripleFlows estimate_triple_flows(const Frame& prev, const Frame& cur, const Frame& next,
                                  const FlowEstimatorConfig& cfg = {});

/// BiSWE with masks derived from forward-backward consistency.
BisweResult biswe(const Frame& prev, const Frame& cur, const Frame& next, const TripleFlows& flows,
                  const OcclusionParams& occlusion = {}, double scale = kBisweScale);

/// Consecutive flows of a three-frame clip: 0 -> 1 and 1 -> 2.
struct ClipFlows {
  FlowField f01;
  FlowField f12;
};

ClipFlows estimate_clip_flows(const Frame& f0, const Frame& f1, const Frame& f2, const FlowEstimatorConfig& cfg = {});

/// Motion smoothness against two references: the flow change f12 - f01 of the
/// fused clip compared per pixel (L1 over u, v) with each reference's, averaged
/// over all pixels and summed over both references.
double ms2r(const ClipFlows& fused, const ClipFlows& ref_a, const ClipFlows& ref_b);

struct Clip {
  const Frame& f0;
  const Frame& f1;
  const Frame& f2;
};

double ms2r(const Clip& fused, const Clip& ref_a, const Clip& ref_b, const FlowEstimatorConfig& cfg = {});

}  // namespace vfb
