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

#include "vfbench/temporal.hpp"

#include <cmath>

#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"

namespace vfb {

namespace {

struct Term {
  double value = 0.0;
  bool empty = true;
};

Term warp_error(const Plane& neighbor, const Plane& cur, const FlowField& flow, const Mask& mask, double scale) {
  if (!cur.same_shape(neighbor) || !cur.same_shape(flow.u) || !cur.same_shape(mask)) {
    throw StructuralError("biswe: frames, flows and masks differ in size");
  }
  const WarpedPlane w = warp(neighbor, flow);
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (mask[i] == 0 || w.valid[i] == 0) continue;
    sum += std::abs(cur[i] - w.plane[i]) * scale;
    ++count;
  }
  if (count == 0) return {};
  return {sum / static_cast<double>(count), false};
}

void require_same_flow_shape(const FlowField& a, const FlowField& b) {
  if (!a.u.same_shape(b.u)) throw StructuralError("ms2r: flow fields differ in size");
}

}  // namespace

BisweResult biswe(const Plane& prev, const Plane& cur, const Plane& next, const FlowField& cur_to_prev,
                  const FlowField& cur_to_next, const Mask& mask_prev, const Mask& mask_next, double scale) {
  const Term p = warp_error(prev, cur, cur_to_prev, mask_prev, scale);
  const Term n = warp_error(next, cur, cur_to_next, mask_next, scale);
  BisweResult r;
  r.prev_term = p.value;
  r.next_term = n.value;
  r.prev_empty = p.empty;
  r.next_empty = n.empty;
  r.value = p.value + n.value;
  return r;
}

BisweResult biswe(const Frame& prev, const Frame& cur, const Frame& next, const FlowField& cur_to_prev,
                  const FlowField& cur_to_next, const Mask& mask_prev, const Mask& mask_next, double scale) {
  return biswe(luma(prev), luma(cur), luma(next), cur_to_prev, cur_to_next, mask_prev, mask_next, scale);
}

TripleFlows estimate_triple_flows(const Frame& prev, const Frame& cur, const Frame& next,
                                  const FlowEstimatorConfig& cfg) {
  const Plane lp = luma(prev);
  const Plane lc = luma(cur);
  const Plane ln = luma(next);
  return {estimate_flow(lc, lp, cfg), estimate_flow(lp, lc, cfg), estimate_flow(lc, ln, cfg),
          estimate_flow(ln, lc, cfg)};
}

BisweResult biswe(const Frame& prev, const Frame& cur, const Frame& next, const TripleFlows& flows,
                  const OcclusionParams& occlusion, double scale) {
  const Mask mp = occlusion_mask(flows.cur_to_prev, flows.prev_to_cur, occlusion);
  const Mask mn = occlusion_mask(flows.cur_to_next, flows.next_to_cur, occlusion);
  return biswe(prev, cur, next, flows.cur_to_prev, flows.cur_to_next, mp, mn, scale);
}

ClipFlows estimate_clip_flows(const Frame& f0, const Frame& f1, const Frame& f2, const FlowEstimatorConfig& cfg) {
  const Plane l1 = luma(f1);
  return {estimate_flow(luma(f0), l1, cfg), estimate_flow(l1, luma(f2), cfg)};
}

double ms2r(const ClipFlows& fused, const ClipFlows& ref_a, const ClipFlows& ref_b) {
  require_same_flow_shape(fused.f01, fused.f12);
  require_same_flow_shape(fused.f01, ref_a.f01);
  require_same_flow_shape(fused.f01, ref_a.f12);
  require_same_flow_shape(fused.f01, ref_b.f01);
  require_same_flow_shape(fused.f01, ref_b.f12);
  const std::size_t n = fused.f01.u.size();
  require(n > 0, "ms2r: empty flow fields");
  auto accel_u = [](const ClipFlows& c, std::size_t i) {
    return static_cast<double>(c.f12.u[i]) - static_cast<double>(c.f01.u[i]);
  };
  auto accel_v = [](const ClipFlows& c, std::size_t i) {
    return static_cast<double>(c.f12.v[i]) - static_cast<double>(c.f01.v[i]);
  };
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fu = accel_u(fused, i);
    const double fv = accel_v(fused, i);
    sum_a += std::abs(fu - accel_u(ref_a, i)) + std::abs(fv - accel_v(ref_a, i));
    sum_b += std::abs(fu - accel_u(ref_b, i)) + std::abs(fv - accel_v(ref_b, i));
  }
  return sum_a / static_cast<double>(n) + sum_b / static_cast<double>(n);
}

double ms2r(const Clip& fused, const Clip& ref_a, const Clip& ref_b, const FlowEstimatorConfig& cfg) {
  return ms2r(estimate_clip_flows(fused.f0, fused.f1, fused.f2, cfg),
              estimate_clip_flows(ref_a.f0, ref_a.f1, ref_a.f2, cfg),
              estimate_clip_flows(ref_b.f0, ref_b.f1, ref_b.f2, cfg));
}

}  // namespace vfb
