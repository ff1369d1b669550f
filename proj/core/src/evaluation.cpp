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

#include "vfbench/evaluation.hpp"

#include <array>
#include <map>
#include <utility>

#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"
#include "vfbench/parallel.hpp"
#include "vfbench/temporal.hpp"

namespace vfb {

namespace {

constexpr std::array<std::string_view, 3> kStreams{"fused", "src-a", "src-b"};

struct PairKey {
  std::size_t stream;
  std::size_t src;
  std::size_t dst;
  auto operator<=>(const PairKey&) const = default;
};

class FlowCache {
 public:
  FlowCache(std::array<const VideoSequence*, 3> seqs, const FlowProvider& provider, int jobs) {
    const std::size_t n = seqs[0]->size();
    std::vector<PairKey> keys;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      keys.push_back({0, t, t + 1});
      keys.push_back({0, t + 1, t});
      keys.push_back({1, t, t + 1});
      keys.push_back({2, t, t + 1});
    }
    auto fields = parallel_map<FlowField>(keys.size(), jobs, [&](std::size_t i) {
      const PairKey& k = keys[i];
      const VideoSequence& s = *seqs[k.stream];
      FlowField f = provider.flow({kStreams[k.stream], k.src, k.dst, s[k.src], s[k.dst]});
      if (f.width() != s[k.src].width() || f.height() != s[k.src].height()) {
        throw StructuralError("flow " + std::string(kStreams[k.stream]) + " " + std::to_string(k.src) + "->" +
                              std::to_string(k.dst) + " does not match the frame size");
      }
      return f;
    });
    for (std::size_t i = 0; i < keys.size(); ++i) cache_.emplace(keys[i], std::move(fields[i]));
  }

  const FlowField& get(std::size_t stream, std::size_t src, std::size_t dst) const {
    return cache_.at({stream, src, dst});
  }

 private:
  std::map<PairKey, FlowField> cache_;
};

double mean_of(const std::vector<FrameMetrics>& rows, double FrameMetrics::*field) {
  double s = 0.0;
  for (const auto& r : rows) s += r.*field;
  return s / static_cast<double>(rows.size());
}

}  // namespace

MetricReport evaluate_sequences(const VideoSequence& fused, const VideoSequence& src_a, const VideoSequence& src_b,
                                const EvaluationOptions& options, const FlowProvider& flows, int jobs) {
  fused.validate();
  src_a.validate();
  src_b.validate();
  require_aligned(fused, src_a, "evaluate");
  require_aligned(fused, src_b, "evaluate");

  MetricReport report;
  report.task = options.task;
  report.aggregation = options.aggregation;
  report.weights = options.weights.value_or(LossWeights::preset(options.task));
  report.weights.validate();
  report.flow_source = flows.describe();

  const std::size_t n = fused.size();
  const FlowCache cache({&fused, &src_a, &src_b}, flows, jobs);

  report.per_frame = parallel_map<FrameMetrics>(n, jobs, [&](std::size_t t) {
    FrameMetrics m;
    m.index = t;
    const Plane lf = luma(fused[t]);
    const Plane la = luma(src_a[t]);
    const Plane lb = luma(src_b[t]);
    m.vif = two_source_aggregate(SpatialMetric::kVif, la, lb, lf, options.aggregation);
    m.ssim = two_source_aggregate(SpatialMetric::kSsim, la, lb, lf, options.aggregation);
    m.mi = two_source_aggregate(SpatialMetric::kMi, la, lb, lf, options.aggregation);
    m.qabf = two_source_aggregate(SpatialMetric::kQabf, la, lb, lf, options.aggregation);
    if (t == 0 || t + 1 >= n) return m;

    const TripleFlows tf{cache.get(0, t, t - 1), cache.get(0, t - 1, t), cache.get(0, t, t + 1),
                         cache.get(0, t + 1, t)};
    const BisweResult b = biswe(fused[t - 1], fused[t], fused[t + 1], tf, options.occlusion);
    auto clip_flows = [&](std::size_t s) { return ClipFlows{cache.get(s, t - 1, t), cache.get(s, t, t + 1)}; };
    TripleMetrics tm;
    tm.biswe = b.value;
    tm.mask_flagged = b.flagged();
    tm.ms2r = ms2r(clip_flows(0), clip_flows(1), clip_flows(2));
    tm.loss = loss_reference({fused[t - 1], fused[t], fused[t + 1]}, {src_a[t - 1], src_a[t], src_a[t + 1]},
                             {src_b[t - 1], src_b[t], src_b[t + 1]}, options.task, tf, report.weights,
                             options.occlusion);
    m.temporal = tm;
    return m;
  });

  MetricSummary& s = report.summary;
  s.frames = n;
  s.vif = mean_of(report.per_frame, &FrameMetrics::vif);
  s.ssim = mean_of(report.per_frame, &FrameMetrics::ssim);
  s.mi = mean_of(report.per_frame, &FrameMetrics::mi);
  s.qabf = mean_of(report.per_frame, &FrameMetrics::qabf);
  std::array<double, 6> sums{};
  for (const auto& r : report.per_frame) {
    if (!r.temporal) continue;
    const TripleMetrics& tm = *r.temporal;
    ++s.triples;
    if (tm.mask_flagged) ++s.flagged_triples;
    sums[0] += tm.biswe;
    sums[1] += tm.ms2r;
    sums[2] += tm.loss.l_spatial;
    sums[3] += tm.loss.l_grad;
    sums[4] += tm.loss.l_temp;
    sums[5] += tm.loss.total;
  }
  if (s.triples > 0) {
    const double k = static_cast<double>(s.triples);
    s.biswe = sums[0] / k;
    s.ms2r = sums[1] / k;
    s.l_spatial = sums[2] / k;
    s.l_grad = sums[3] / k;
    s.l_temp = sums[4] / k;
    s.total = sums[5] / k;
  }
  return report;
}

}  // namespace vfb
