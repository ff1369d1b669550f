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

#include <optional>
#include <string>
#include <vector>

#include "vfbench/frame.hpp"
#include "vfbench/image_ops.hpp"

namespace vfb {

// Per-frame measures on 8-bit levels (color frames are reduced to BT.709 luma).

/// Shannon entropy of the 256-bin histogram, in bits.
double image_entropy(const LevelImage& levels);
double image_entropy(const Frame& frame);

/// Population standard deviation of the levels (0-255 units).
double global_contrast(const LevelImage& levels);
double global_contrast(const Frame& frame);

/// Fraction of pixels with level <= dark_level (inclusive).
double dark_area_proportion(const LevelImage& levels, int dark_level = 10);
double dark_area_proportion(const Frame& frame, int dark_level = 10);

struct ScoreWeights {
  double entropy = 1.0 / 3.0;
  double contrast = 1.0 / 3.0;
  double brightness = 1.0 / 3.0;  // weight of (1 - D)
};

/// w1 H / H_max + w2 sigma / sigma_max + w3 (1 - D).
double composite_score(double entropy, double contrast, double dark_fraction, double entropy_max,
                       double contrast_max, const ScoreWeights& weights = {});

struct Illumination {
  Plane map;
  double mean = 0.0;
};

/// Classical single-scale Retinex illumination: the per-pixel channel maximum
/// smoothed by a Gaussian of std max(W, H) / 8 (normalized at the borders).
Illumination retinex_illumination(const Frame& frame);

struct ScreenThresholds {
  double entropy_min = 6.0;        // keep H > entropy_min
  double contrast_min = 30.0;      // keep sigma > contrast_min
  double dark_max = 0.05;          // keep D < dark_max
  int dark_level = 10;             // T, inclusive
  double max_fail_fraction = 0.0;  // a scene fails stage 1 above this fraction of failing frames
  double drop_bottom = 0.10;       // stage 2: floor(drop_bottom * n) lowest scores removed
  double drop_top_illumination = 0.25;  // stage 3: ceil(frac * n) brightest removed
  ScoreWeights weights;
  std::optional<double> entropy_max;   // override the dataset-wide H_max
  std::optional<double> contrast_max;  // override the dataset-wide sigma_max
};

struct IrFrameMeasure {
  double entropy = 0.0;
  double contrast = 0.0;
  double dark = 0.0;
  bool pass = false;
  std::vector<std::string> reasons;  // failing rules, empty when pass
  double score = 0.0;                // filled in by rank_scenes
};

/// Measures one infrared frame and applies the three per-frame rules.
IrFrameMeasure measure_ir_frame(const Frame& frame, const ScreenThresholds& t);

struct SceneMeasurements {
  std::string scene_id;
  std::vector<IrFrameMeasure> ir;
  std::vector<double> rgb_mean_illumination;  // mean(L) per RGB frame
};

enum class ScreenStage { kKept = 0, kFrameRules = 1, kScore = 2, kIllumination = 3 };

struct SceneDecision {
  std::string scene_id;
  std::vector<IrFrameMeasure> ir;
  std::vector<double> rgb_mean_illumination;
  double failing_fraction = 0.0;
  double score = 0.0;               // mean composite score over retained frames
  double mean_illumination = 0.0;   // mean of per-frame mean(L)
  ScreenStage dropped_at = ScreenStage::kKept;
  std::vector<std::string> reasons;
};

struct ScreenReport {
  ScreenThresholds thresholds;
  double entropy_max = 0.0;
  double contrast_max = 0.0;
  std::vector<SceneDecision> scenes;  // input order
  std::vector<std::string> kept;      // input order

  const SceneDecision& scene(const std::string& id) const;
};

/// floor(fraction * n) and ceil(fraction * n), robust to representation
/// error in `fraction` (0.1 * 30 counts as 3).
std::size_t floor_count(double fraction, std::size_t n);
std::size_t ceil_count(double fraction, std::size_t n);

/// Stages 1-3 over measured scenes. Ranking ties are broken by scene id.
ScreenReport rank_scenes(std::vector<SceneMeasurements> scenes, const ScreenThresholds& t);

struct ScenePair {
  std::string scene_id;
  VideoSequence ir;
  VideoSequence rgb;
};

/// Measures every frame then ranks. Throws StructuralError on empty input.
ScreenReport screen_scene_set(const std::vector<ScenePair>& scenes, const ScreenThresholds& t, int jobs = 1);

std::string_view to_string(ScreenStage s);

}  // namespace vfb
