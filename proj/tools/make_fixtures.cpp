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

// Writes the deterministic 5-frame 128x128 fixture set used by the
// end-to-end tests:
//   hdr/                 HLG BT.2020 RGB, 10-bit codes left-justified in 16-bit PNG
//   mff/frames|depth|masks
//   ivf/manifest.json    four infrared-visible scenes for screening
//
// usage: vfb_make_fixtures <output-dir>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numbers>

#include "vfbench/errors.hpp"
#include "vfbench/manifest.hpp"
#include "vfbench/sequence_io.hpp"

namespace fs = std::filesystem;
using namespace vfb;

namespace {

constexpr int kSize = 128;
constexpr std::size_t kFrames = 5;

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Position-keyed noise in [0,1), so content moves rigidly with a shift.
double noise(int x, int y, std::uint64_t seed) {
  const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
                            static_cast<std::uint32_t>(y);
  return static_cast<double>(splitmix(key ^ splitmix(seed)) >> 11) * 0x1.0p-53;
}

double texture(double x, double y, std::uint64_t seed) {
  const double two_pi = 2.0 * std::numbers::pi;
  const int xi = static_cast<int>(std::floor(x));
  const int yi = static_cast<int>(std::floor(y));
  return 0.5 + 0.22 * std::sin(two_pi * x / 29.0 + seed) * std::cos(two_pi * y / 23.0) +
         0.12 * std::sin(two_pi * (x + y) / 11.0) + 0.3 * (noise(xi, yi, seed) - 0.5);
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

VideoSequence make_sequence(int channels, const auto& pixel) {
  VideoSequence seq;
  for (std::size_t t = 0; t < kFrames; ++t) {
    Frame f(kSize, kSize, channels);
    for (int c = 0; c < channels; ++c) {
      for (int y = 0; y < kSize; ++y) {
        for (int x = 0; x < kSize; ++x) f.at(x, y, c) = clamp01(pixel(x, y, c, static_cast<int>(t)));
      }
    }
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

void write_hdr(const fs::path& root) {
  // Scene-referred signal with a bright highlight that clips under +3 EV.
  const auto seq = make_sequence(3, [](int x, int y, int c, int t) {
    const double base = 0.15 + 0.55 * texture(x - 2.0 * t, y - t, 11 + c);
    const double dx = x - (40 + 3 * t);
    const double dy = y - 64;
    const double highlight = std::exp(-(dx * dx + dy * dy) / (2.0 * 12.0 * 12.0));
    return base + 0.45 * highlight;
  });
  save_sequence(seq, root / "hdr", BitDepth::k10In16, TenBitPacking::kLeftJustified);
}

void write_mff(const fs::path& root) {
  const auto frames = make_sequence(3, [](int x, int y, int c, int t) {
    return 0.1 + 0.8 * texture(x - t, y, 21 + c);
  });
  save_sequence(frames, root / "mff" / "frames", BitDepth::k8);
  fs::create_directories(root / "mff" / "depth");
  fs::create_directories(root / "mff" / "masks");
  for (std::size_t t = 0; t < kFrames; ++t) {
    DepthMap depth{Plane(kSize, kSize)};
    LabelMap labels(kSize, kSize, 0);
    const double cx = 44.0 + 4.0 * static_cast<double>(t);
    for (int y = 0; y < kSize; ++y) {
      for (int x = 0; x < kSize; ++x) {
        const double r = std::hypot(x - cx, y - 70.0);
        const bool object = r < 22.0;
        depth.values.at(x, y) = object ? 0.85 - 0.002 * r : 0.08 + 0.30 * y / (kSize - 1.0);
        labels.at(x, y) = object ? 1 : 0;
      }
    }
    save_depth_map(depth, root / "mff" / "depth" / frame_filename(t));
    save_label_map(labels, root / "mff" / "masks" / frame_filename(t));
  }
}

void write_ivf(const fs::path& root) {
  struct SceneSpec {
    const char* id;
    double ir_offset;
    double ir_amplitude;
    double rgb_gain;
  };
  // The last scene is flat in infrared and fails the contrast rule.
  const SceneSpec scenes[] = {{"scene-000", 0.06, 0.95, 0.45},
                              {"scene-001", 0.08, 0.90, 0.80},
                              {"scene-002", 0.07, 0.88, 0.60},
                              {"scene-003", 0.45, 0.08, 0.50}};
  Manifest manifest;
  std::uint64_t seed = 31;
  for (const auto& s : scenes) {
    const auto ir = make_sequence(1, [&](int x, int y, int, int t) {
      return s.ir_offset + s.ir_amplitude * (texture(x - t, y, seed) - 0.5) + 0.5 * s.ir_amplitude;
    });
    const auto rgb = make_sequence(3, [&](int x, int y, int c, int t) {
      return s.rgb_gain * texture(x - t, y, seed + 1 + c);
    });
    const fs::path dir = root / "ivf" / s.id;
    save_sequence(ir, dir / "ir", BitDepth::k8);
    save_sequence(rgb, dir / "rgb", BitDepth::k8);
    SceneEntry e;
    e.scene_id = s.id;
    e.roles[Role::kSourceA] = dir / "ir";
    e.roles[Role::kSourceB] = dir / "rgb";
    e.provenance = "synthetic";
    manifest.scenes.push_back(std::move(e));
    seed += 7;
  }
  save_manifest(manifest, root / "ivf" / "manifest.json");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: vfb_make_fixtures <output-dir>\n";
    return 1;
  }
  try {
    const fs::path root = argv[1];
    write_hdr(root);
    write_mff(root);
    write_ivf(root);
  } catch (const Error& e) {
    std::cerr << "vfb_make_fixtures: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
