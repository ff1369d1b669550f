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

#include "vfbench/flow.hpp"
#include "vfbench/frame.hpp"
#include "vfbench/loss.hpp"
#include "vfbench/metrics.hpp"

namespace vfb {

struct EvaluationOptions {
  Task task = Task::kIvf;
  AggregationConvention aggregation;
  OcclusionParams occlusion;
  /// Defaults to the task preset.
  std::optional<LossWeights> weights;
};

/// Temporal results for an interior frame t in [1, T-2].
struct TripleMetrics {
  double biswe = 0.0;
  double ms2r = 0.0;
  bool mask_flagged = false;
  LossBreakdown loss;
};

struct FrameMetrics {
  std::size_t index = 0;
  double vif = 0.0;
  double ssim = 0.0;
  double mi = 0.0;
  double qabf = 0.0;
  std::optional<TripleMetrics> temporal;
};

struct MetricSummary {
  double vif = 0.0;
  double ssim = 0.0;
  double mi = 0.0;
  double qabf = 0.0;
  // Absent when the sequence has fewer than three frames.
  std::optional<double> biswe;
  std::optional<double> ms2r;
  std::optional<double> l_spatial;
  std::optional<double> l_grad;
  std::optional<double> l_temp;
  std::optional<double> total;
  std::size_t frames = 0;
  std::size_t triples = 0;
  std::size_t flagged_triples = 0;
};

struct MetricReport {
  Task task = Task::kIvf;
  AggregationConvention aggregation;
  LossWeights weights;
  std::string flow_source;
  std::vector<FrameMetrics> per_frame;
  MetricSummary summary;
};

/// Full protocol over a fused sequence and its two sources: spatial metrics
/// for every frame, BiSWE, MS2R and the loss terms for every interior frame.
/// Flows come from `flows` under the stream names "fused", "src-a", "src-b"
/// and are requested once per ordered frame pair. Results do not depend on
/// `jobs`.
MetricReport evaluate_sequences(const VideoSequence& fused, const VideoSequence& src_a, const VideoSequence& src_b,
                                const EvaluationOptions& options, const FlowProvider& flows, int jobs);

}  // namespace vfb
