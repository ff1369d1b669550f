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

#include "vfbench/fusers.hpp"

#include <algorithm>

#include "vfbench/errors.hpp"

namespace vfb {

namespace {

template <class Op>
VideoSequence combine(const VideoSequence& a, const VideoSequence& b, Op op, std::string_view name) {
  require_aligned(a, b, name);
  VideoSequence out;
  out.fps = a.fps;
  out.scene_id = a.scene_id;
  out.role = Role::kFused;
  out.frames.reserve(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    Frame f = a[t];
    for (int c = 0; c < f.channels(); ++c) {
      Plane& p = f.plane(c);
      const Plane& q = b[t].plane(c);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = op(p[i], q[i]);
    }
    out.frames.push_back(std::move(f));
  }
  return out;
}

}  // namespace

VideoSequence fuse_max(const VideoSequence& a, const VideoSequence& b) {
  return combine(a, b, [](double x, double y) { return std::max(x, y); }, "fuse_max");
}

VideoSequence fuse_mean(const VideoSequence& a, const VideoSequence& b) {
  return combine(a, b, [](double x, double y) { return (x + y) * 0.5; }, "fuse_mean");
}

VideoSequence temporal_smooth(const VideoSequence& seq, int window) {
  require(window >= 1 && window % 2 == 1, "temporal_smooth: window must be a positive odd integer");
  if (seq.frames.empty()) throw StructuralError("temporal_smooth: empty sequence");
  seq.validate();
  const int half = window / 2;
  const int last = static_cast<int>(seq.size()) - 1;
  VideoSequence out = seq;
  for (int t = 0; t <= last; ++t) {
    Frame& dst = out.frames[static_cast<std::size_t>(t)];
    for (int c = 0; c < dst.channels(); ++c) {
      Plane& p = dst.plane(c);
      for (std::size_t i = 0; i < p.size(); ++i) {
        double sum = 0.0;
        for (int k = -half; k <= half; ++k) {
          sum += seq[static_cast<std::size_t>(std::clamp(t + k, 0, last))].plane(c)[i];
        }
        p[i] = sum / window;
      }
    }
  }
  return out;
}

}  // namespace vfb
