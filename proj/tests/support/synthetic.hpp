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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vfbench/frame.hpp"

namespace vfb::test {

/// Uniform samples in [lo, hi).
Plane random_plane(int width, int height, std::uint32_t seed, double lo = 0.0, double hi = 1.0);

/// Smooth band-limited pattern in roughly [0.2, 0.8], evaluated analytically
/// at (x - dx, y - dy) so sub-pixel translations are exact.
Plane textured_plane(int width, int height, std::uint32_t seed, double dx = 0.0, double dy = 0.0);

/// Adds uniform noise in [-amplitude, amplitude) and clamps to [0,1].
Plane add_noise(const Plane& p, double amplitude, std::uint32_t seed);

Frame gray(Plane p);
VideoSequence sequence(std::vector<Frame> frames, Role role = Role::kSourceA);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace vfb::test
