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

#include "vfbench/flow.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"

namespace vfb {

void FlowEstimatorConfig::validate() const {
  require(pyramid_levels >= 1, "pyramid_levels must be >= 1");
  require(window_radius >= 1, "window_radius must be >= 1");
  require(iterations >= 1, "iterations must be >= 1");
  require(smoothing >= 0.0 && std::isfinite(smoothing), "smoothing must be >= 0");
}

namespace {

// 5-tap binomial blur then decimation by two.
Plane pyr_down(const Plane& in) {
  static constexpr double k[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
  const int w = in.width();
  const int h = in.height();
  auto clampx = [w](int x) { return std::clamp(x, 0, w - 1); };
  auto clampy = [h](int y) { return std::clamp(y, 0, h - 1); };
  Plane tmp(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -2; i <= 2; ++i) acc += k[i + 2] * in.at(clampx(x + i), y);
      tmp.at(x, y) = acc;
    }
  }
  const int ow = (w + 1) / 2;
  const int oh = (h + 1) / 2;
  Plane out(ow, oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int i = -2; i <= 2; ++i) acc += k[i + 2] * tmp.at(2 * x, clampy(2 * y + i));
      out.at(x, y) = acc;
    }
  }
  return out;
}

// Window sums over a clipped square window via an integral image.
class BoxSum {
 public:
  BoxSum(const Plane& p, int radius) : w_(p.width()), h_(p.height()), r_(radius),
        sat_(static_cast<std::size_t>(w_ + 1) * (h_ + 1), 0.0) {
    for (int y = 0; y < h_; ++y) {
      double row = 0.0;
      for (int x = 0; x < w_; ++x) {
        row += p.at(x, y);
        at(x + 1, y + 1) = at(x + 1, y) + row;
      }
    }
  }

  double sum(int x, int y) const {
    const int x0 = std::max(0, x - r_);
    const int y0 = std::max(0, y - r_);
    const int x1 = std::min(w_, x + r_ + 1);
    const int y1 = std::min(h_, y + r_ + 1);
    return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
  }

  double count(int x, int y) const {
    const int x0 = std::max(0, x - r_);
    const int y0 = std::max(0, y - r_);
    const int x1 = std::min(w_, x + r_ + 1);
    const int y1 = std::min(h_, y + r_ + 1);
    return static_cast<double>(x1 - x0) * static_cast<double>(y1 - y0);
  }

 private:
  double& at(int x, int y) { return sat_[static_cast<std::size_t>(y) * (w_ + 1) + x]; }
  double at(int x, int y) const { return sat_[static_cast<std::size_t>(y) * (w_ + 1) + x]; }

  int w_, h_, r_;
  std::vector<double> sat_;
};

void refine_level(const Plane& src, const Plane& dst, Plane& u, Plane& v, const FlowEstimatorConfig& cfg) {
  const int w = src.width();
  const int h = src.height();
  Plane ix(w, h);
  Plane iy(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      ix.at(x, y) = 0.5 * (src.at(std::min(x + 1, w - 1), y) - src.at(std::max(x - 1, 0), y));
      iy.at(x, y) = 0.5 * (src.at(x, std::min(y + 1, h - 1)) - src.at(x, std::max(y - 1, 0)));
    }
  }
  Plane ixx(w, h);
  Plane ixy(w, h);
  Plane iyy(w, h);
  for (std::size_t i = 0; i < ix.size(); ++i) {
    ixx[i] = ix[i] * ix[i];
    ixy[i] = ix[i] * iy[i];
    iyy[i] = iy[i] * iy[i];
  }
  const BoxSum sxx(ixx, cfg.window_radius);
  const BoxSum sxy(ixy, cfg.window_radius);
  const BoxSum syy(iyy, cfg.window_radius);

  Plane ixt(w, h);
  Plane iyt(w, h);
  for (int it = 0; it < cfg.iterations; ++it) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double diff = sample_clamped(dst, x + u.at(x, y), y + v.at(x, y)) - src.at(x, y);
        ixt.at(x, y) = ix.at(x, y) * diff;
        iyt.at(x, y) = iy.at(x, y) * diff;
      }
    }
    const BoxSum sxt(ixt, cfg.window_radius);
    const BoxSum syt(iyt, cfg.window_radius);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double reg = cfg.smoothing * sxx.count(x, y);
        const double a = sxx.sum(x, y) + reg;
        const double b = sxy.sum(x, y);
        const double d = syy.sum(x, y) + reg;
        const double det = a * d - b * b;
        if (!(det > 1e-18)) continue;
        const double bx = -sxt.sum(x, y);
        const double by = -syt.sum(x, y);
        u.at(x, y) += (d * bx - b * by) / det;
        v.at(x, y) += (a * by - b * bx) / det;
      }
    }
  }
}

}  // namespace

FlowField estimate_flow(const Plane& src, const Plane& dst, const FlowEstimatorConfig& cfg) {
  cfg.validate();
  if (!src.same_shape(dst)) throw StructuralError("estimate_flow: frames differ in size");
  require(!src.empty(), "estimate_flow: empty frames");

  std::vector<Plane> ps{src};
  std::vector<Plane> pd{dst};
  while (static_cast<int>(ps.size()) < cfg.pyramid_levels &&
         std::min(ps.back().width(), ps.back().height()) >= 16) {
    ps.push_back(pyr_down(ps.back()));
    pd.push_back(pyr_down(pd.back()));
  }

  Plane u(ps.back().width(), ps.back().height());
  Plane v(ps.back().width(), ps.back().height());
  for (int level = static_cast<int>(ps.size()) - 1; level >= 0; --level) {
    const Plane& s = ps[static_cast<std::size_t>(level)];
    if (u.width() != s.width() || u.height() != s.height()) {
      Plane nu(s.width(), s.height());
      Plane nv(s.width(), s.height());
      for (int y = 0; y < s.height(); ++y) {
        for (int x = 0; x < s.width(); ++x) {
          nu.at(x, y) = 2.0 * sample_clamped(u, 0.5 * x, 0.5 * y);
          nv.at(x, y) = 2.0 * sample_clamped(v, 0.5 * x, 0.5 * y);
        }
      }
      u = std::move(nu);
      v = std::move(nv);
    }
    refine_level(s, pd[static_cast<std::size_t>(level)], u, v, cfg);
  }

  FlowField out(src.width(), src.height());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::isfinite(u[i]) && std::isfinite(v[i])) {
      out.u[i] = static_cast<float>(u[i]);
      out.v[i] = static_cast<float>(v[i]);
    } else {
      out.u[i] = 0.0f;
      out.v[i] = 0.0f;
      out.valid[i] = 0;
    }
  }
  return out;
}

FlowField estimate_flow(const Frame& src, const Frame& dst, const FlowEstimatorConfig& cfg) {
  if (src.width() != dst.width() || src.height() != dst.height()) {
    throw StructuralError("estimate_flow: frames differ in size");
  }
  return estimate_flow(luma(src), luma(dst), cfg);
}

namespace {

void require_flow_matches(int w, int h, const FlowField& flow, const char* op) {
  if (flow.width() != w || flow.height() != h) {
    throw StructuralError(std::string(op) + ": flow field and input differ in size");
  }
}

}  // namespace

WarpedPlane warp(const Plane& in, const FlowField& flow) {
  require_flow_matches(in.width(), in.height(), flow, "warp");
  WarpedPlane out{Plane(in.width(), in.height()), Mask(in.width(), in.height())};
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      if (!flow.valid.at(x, y)) continue;
      auto s = bilinear_sample(in, x + static_cast<double>(flow.u.at(x, y)), y + static_cast<double>(flow.v.at(x, y)));
      if (!s) continue;
      out.plane.at(x, y) = *s;
      out.valid.at(x, y) = 1;
    }
  }
  return out;
}

WarpedFrame warp(const Frame& in, const FlowField& flow) {
  std::vector<Plane> planes;
  Mask valid;
  for (int c = 0; c < in.channels(); ++c) {
    auto w = warp(in.plane(c), flow);
    planes.push_back(std::move(w.plane));
    if (c == 0) valid = std::move(w.valid);
  }
  return {Frame(std::move(planes), in.format()), std::move(valid)};
}

FlowField warp(const FlowField& field, const FlowField& flow) {
  require_flow_matches(field.width(), field.height(), flow, "warp");
  FlowField out(field.width(), field.height());
  for (int y = 0; y < field.height(); ++y) {
    for (int x = 0; x < field.width(); ++x) {
      const double sx = x + static_cast<double>(flow.u.at(x, y));
      const double sy = y + static_cast<double>(flow.v.at(x, y));
      auto su = bilinear_sample(field.u, sx, sy);
      auto sv = bilinear_sample(field.v, sx, sy);
      const bool ok = flow.valid.at(x, y) && su && sv &&
                      field.valid.at(static_cast<int>(std::lround(sx)), static_cast<int>(std::lround(sy)));
      out.valid.at(x, y) = ok ? 1 : 0;
      out.u.at(x, y) = ok ? static_cast<float>(*su) : 0.0f;
      out.v.at(x, y) = ok ? static_cast<float>(*sv) : 0.0f;
    }
  }
  return out;
}

Mask occlusion_mask(const FlowField& fwd, const FlowField& bwd, const OcclusionParams& params) {
  require(params.alpha >= 0.0 && params.beta >= 0.0, "occlusion alpha and beta must be >= 0");
  if (fwd.width() != bwd.width() || fwd.height() != bwd.height()) {
    throw StructuralError("occlusion_mask: forward and backward flows differ in size");
  }
  const FlowField back = warp(bwd, fwd);
  Mask out(fwd.width(), fwd.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!back.valid[i]) continue;
    const double fu = fwd.u[i];
    const double fv = fwd.v[i];
    const double bu = back.u[i];
    const double bv = back.v[i];
    const double sum = (fu + bu) * (fu + bu) + (fv + bv) * (fv + bv);
    const double mag = fu * fu + fv * fv + bu * bu + bv * bv;
    out[i] = sum < params.alpha * mag + params.beta ? 1 : 0;
  }
  return out;
}

FlowField EstimatorFlowProvider::flow(const FlowRequest& request) const {
  return estimate_flow(request.src, request.dst, cfg_);
}

std::string EstimatorFlowProvider::describe() const {
  return "internal:pyramidal-lk(levels=" + std::to_string(cfg_.pyramid_levels) +
         ",radius=" + std::to_string(cfg_.window_radius) + ",iterations=" + std::to_string(cfg_.iterations) + ")";
}

}  // namespace vfb
