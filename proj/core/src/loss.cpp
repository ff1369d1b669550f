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

#include "vfbench/loss.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"
#include "vfbench/metrics.hpp"

namespace vfb {

std::string_view to_string(Task t) {
  switch (t) {
    case Task::kMef: return "mef";
    case Task::kMff: return "mff";
    case Task::kIvf: return "ivf";
    case Task::kMvf: return "mvf";
  }
  return "ivf";
}

Task parse_task(std::string_view s) {
  std::string lower(s);
  std::ranges::transform(lower, lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "mef") return Task::kMef;
  if (lower == "mff") return Task::kMff;
  if (lower == "ivf") return Task::kIvf;
  if (lower == "mvf") return Task::kMvf;
  throw ContractError("unknown task '" + std::string(s) + "'");
}

LossWeights LossWeights::preset(Task task) {
  switch (task) {
    case Task::kMef: return {10.0, 2.0};
    case Task::kMff: return {1.0, 0.5};
    case Task::kIvf: return {5.0, 2.0};
    case Task::kMvf: return {1.0, 1.0};
  }
  return {};
}

void LossWeights::validate() const {
  require(std::isfinite(alpha1) && alpha1 >= 0.0, "loss weights: alpha1 must be a non-negative number");
  require(std::isfinite(alpha2) && alpha2 >= 0.0, "loss weights: alpha2 must be a non-negative number");
}

namespace {

template <class Target>
double mean_abs_error(const Frame& fused, Target&& target) {
  double sum = 0.0;
  std::size_t n = 0;
  for (int c = 0; c < fused.channels(); ++c) {
    const Plane& f = fused.plane(c);
    for (std::size_t i = 0; i < f.size(); ++i) sum += std::abs(f[i] - target(c, i));
    n += f.size();
  }
  return sum / static_cast<double>(n);
}

Plane gradient_magnitude(const Plane& p) {
  const Gradients g = sobel(p);
  Plane out(p.width(), p.height());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::abs(g.gx[i]) + std::abs(g.gy[i]);
  return out;
}

}  // namespace

LossBreakdown loss_reference(const Clip& fused, const Clip& src_a, const Clip& src_b, Task task,
                             const TripleFlows& fused_flows, const OcclusionParams& occlusion) {
  return loss_reference(fused, src_a, src_b, task, fused_flows, LossWeights::preset(task), occlusion);
}

LossBreakdown loss_reference(const Clip& fused, const Clip& src_a, const Clip& src_b, Task task,
                             const TripleFlows& fused_flows, const LossWeights& weights,
                             const OcclusionParams& occlusion) {
  weights.validate();
  const Frame& f = fused.f1;
  const Frame& a = src_a.f1;
  const Frame& b = src_b.f1;
  if (!f.same_shape(a) || !f.same_shape(b)) throw StructuralError("loss_reference: clips are not aligned");
  require(f.pixel_count() > 0, "loss_reference: empty frames");

  LossBreakdown out;
  out.weights = weights;
  if (task == Task::kIvf || task == Task::kMvf) {
    out.l_spatial = mean_abs_error(f, [&](int c, std::size_t i) { return std::max(a.plane(c)[i], b.plane(c)[i]); });
  } else {
    out.l_int = mean_abs_error(f, [&](int c, std::size_t i) { return (a.plane(c)[i] + b.plane(c)[i]) * 0.5; });
    out.l_ssim = 2.0 - ssim(a, f) - ssim(b, f);
    out.l_spatial = out.l_int + out.l_ssim;
  }

  double grad_sum = 0.0;
  std::size_t grad_n = 0;
  for (int c = 0; c < f.channels(); ++c) {
    const Plane gf = gradient_magnitude(f.plane(c));
    const Plane ga = gradient_magnitude(a.plane(c));
    const Plane gb = gradient_magnitude(b.plane(c));
    for (std::size_t i = 0; i < gf.size(); ++i) grad_sum += std::abs(gf[i] - std::max(ga[i], gb[i]));
    grad_n += gf.size();
  }
  out.l_grad = grad_sum / static_cast<double>(grad_n);

  const BisweResult temp = biswe(fused.f0, fused.f1, fused.f2, fused_flows, occlusion, 1.0);
  out.l_temp = temp.value;
  out.temp_flagged = temp.flagged();
  out.total = out.l_spatial + weights.alpha1 * out.l_grad + weights.alpha2 * out.l_temp;
  return out;
}

}  // namespace vfb
