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

#include <cmath>
#include <cstdint>
#include <random>

#include "vfbench/frame.hpp"

namespace vfb::bench {

// Smooth pattern plus mild noise, shifted by (dx, dy).
inline Plane pattern(int w, int h, std::uint32_t seed, double dx = 0.0, double dy = 0.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> noise(-0.02, 0.02);
  Plane p(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double u = (x - dx) / 9.0;
      const double v = (y - dy) / 7.0;
      p.at(x, y) = 0.5 + 0.2 * std::sin(u + 0.3 * v) + 0.15 * std::cos(0.7 * v - 0.4 * u) + noise(rng);
    }
  }
  return p;
}

inline Frame gray(Plane p) {
  Frame f(p.width(), p.height(), 1);
  f.plane(0) = std::move(p);
  return f;
}

}  // namespace vfb::bench
