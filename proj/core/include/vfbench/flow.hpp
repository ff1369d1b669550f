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

#include <filesystem>
#include <string>
#include <string_view>

#include "vfbench/frame.hpp"

namespace vfb {

/// Coarse-to-fine pyramidal Lucas-Kanade parameters.
struct FlowEstimatorConfig {
  int pyramid_levels = 4;
  int window_radius = 7;
  int iterations = 3;
  /// Tikhonov weight added per window pixel to the normal equations. Keeps
  /// textureless regions at zero update instead of dividing by ~0.
  double smoothing = 1e-4;

  void validate() const;
};

/// Forward-backward consistency: p is kept iff
///   |fwd(p) + bwd(p + fwd(p))|^2 < alpha (|fwd(p)|^2 + |bwd(p + fwd(p))|^2) + beta
struct OcclusionParams {
  double alpha = 0.01;
  double beta = 0.5;
};

/// Dense flow on `src`'s grid such that dst(p + flow(p)) ~ src(p).
/// Color frames are reduced to luma. Deterministic.
FlowField estimate_flow(const Frame& src, const Frame& dst, const FlowEstimatorConfig& cfg = {});
FlowField estimate_flow(const Plane& src, const Plane& dst, const FlowEstimatorConfig& cfg = {});

struct WarpedPlane {
  Plane plane;
  Mask valid;
};

struct WarpedFrame {
  Frame frame;
  Mask valid;
};

/// Backward warp: out(p) = in(p + flow(p)) by bilinear sampling. Pixels whose
/// sample falls outside the image, or whose flow is invalid, are marked
/// invalid and hold 0.
WarpedPlane warp(const Plane& in, const FlowField& flow);
WarpedFrame warp(const Frame& in, const FlowField& flow);
FlowField warp(const FlowField& field, const FlowField& flow);

/// Forward-backward validity mask on fwd's grid (1 = reliable). fwd maps
/// s -> t, bwd maps t -> s. Pixels whose forward flow is invalid, whose
/// target leaves the image, or whose target's backward flow is invalid are 0.
Mask occlusion_mask(const FlowField& fwd, const FlowField& bwd, const OcclusionParams& params = {});

// Middlebury .flo ------------------------------------------------------------

inline constexpr float kFloMagic = 202021.25f;
/// Middlebury "unknown flow" marker; components above 1e9 read as invalid.
inline constexpr float kFloUnknown = 1e10f;

/// Writes little-endian float32 interleaved (u, v); invalid pixels are
/// written as the unknown marker.
void write_flo(const FlowField& flow, const std::filesystem::path& path);
FlowField read_flo(const std::filesystem::path& path);

// Pluggable flow sources -------------------------------------------------------

/// One flow lookup: the flow on `src`'s grid toward `dst`. `stream` names the
/// sequence ("fused", "src-a", "src-b") and the indices locate the frames.
struct FlowRequest {
  std::string_view stream;
  std::size_t src_index;
  std::size_t dst_index;
  const Frame& src;
  const Frame& dst;
};

class FlowProvider {
 public:
  virtual ~FlowProvider() = default;
  virtual FlowField flow(const FlowRequest& request) const = 0;
  /// Short description echoed into reports.
  virtual std::string describe() const = 0;
};

/// Runs the built-in estimator.
class EstimatorFlowProvider final : public FlowProvider {
 public:
  explicit EstimatorFlowProvider(FlowEstimatorConfig cfg = {}) : cfg_(cfg) { cfg_.validate(); }
  FlowField flow(const FlowRequest& request) const override;
  std::string describe() const override;

 private:
  FlowEstimatorConfig cfg_;
};

/// Reads precomputed flows from <root>/<stream>/<src:06d>_<dst:06d>.flo.
class FloDirectoryProvider final : public FlowProvider {
 public:
  explicit FloDirectoryProvider(std::filesystem::path root);
  FlowField flow(const FlowRequest& request) const override;
  std::string describe() const override;

  static std::filesystem::path relative_path(std::string_view stream, std::size_t src, std::size_t dst);

 private:
  std::filesystem::path root_;
};

}  // namespace vfb
