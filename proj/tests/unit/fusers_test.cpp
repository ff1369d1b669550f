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

#include <gtest/gtest.h>

#include "synthetic.hpp"
#include "vfbench/errors.hpp"
#include "vfbench/flow.hpp"
#include "vfbench/fusers.hpp"
#include "vfbench/temporal.hpp"

namespace vfb {
namespace {

VideoSequence noise_sequence(int frames, std::uint32_t seed, int w = 16, int h = 12) {
  std::vector<Frame> out;
  for (int i = 0; i < frames; ++i) {
    Frame f(w, h, 3);
    for (int c = 0; c < 3; ++c) f.plane(c) = test::random_plane(w, h, seed + 10 * i + c);
    out.push_back(std::move(f));
  }
  return test::sequence(out);
}

VideoSequence complement(const VideoSequence& s) {
  VideoSequence out = s;
  for (auto& f : out.frames) {
    for (int c = 0; c < f.channels(); ++c) {
      for (double& v : f.plane(c).values()) v = 1.0 - v;
    }
  }
  return out;
}

TEST(FuseMax, IdempotentAndCommutative) {
  const VideoSequence a = noise_sequence(3, 1);
  const VideoSequence b = noise_sequence(3, 2);
  EXPECT_EQ(fuse_max(a, a).frames, a.frames);
  EXPECT_EQ(fuse_max(a, b).frames, fuse_max(b, a).frames);
  const VideoSequence f = fuse_max(a, b);
  EXPECT_EQ(f.role, Role::kFused);
  for (std::size_t t = 0; t < 3; ++t) {
    for (int c = 0; c < 3; ++c) {
      for (std::size_t i = 0; i < a[t].pixel_count(); ++i) {
        EXPECT_EQ(f[t].plane(c)[i], std::max(a[t].plane(c)[i], b[t].plane(c)[i]));
      }
    }
  }
}

TEST(FuseMax, ZeroSourceYieldsOther) {
  const VideoSequence b = noise_sequence(2, 3);
  VideoSequence zero = b;
  for (auto& f : zero.frames) f = Frame(f.width(), f.height(), f.channels(), f.format(), 0.0);
  EXPECT_EQ(fuse_max(zero, b).frames, b.frames);
}

TEST(FuseMean, Examples) {
  const VideoSequence a = noise_sequence(2, 4);
  const VideoSequence b = noise_sequence(2, 5);
  EXPECT_EQ(fuse_mean(a, a).frames, a.frames);
  EXPECT_EQ(fuse_mean(a, b).frames, fuse_mean(b, a).frames);
  const VideoSequence half = fuse_mean(a, complement(a));
  for (const auto& f : half.frames) {
    for (int c = 0; c < 3; ++c) {
      for (double v : f.plane(c).values()) EXPECT_NEAR(v, 0.5, 1e-15);
    }
  }
  const VideoSequence m = fuse_mean(a, b);
  for (std::size_t i = 0; i < a[1].pixel_count(); ++i) {
    EXPECT_EQ(m[1].plane(2)[i], (a[1].plane(2)[i] + b[1].plane(2)[i]) / 2.0);
  }
}

TEST(Fusers, RequireAlignment) {
  EXPECT_THROW(fuse_max(noise_sequence(2, 1), noise_sequence(3, 1)), StructuralError);
  EXPECT_THROW(fuse_mean(noise_sequence(2, 1, 16, 12), noise_sequence(2, 1, 12, 16)), StructuralError);
}

TEST(TemporalSmooth, WindowOneIsIdentity) {
  const VideoSequence s = noise_sequence(4, 6);
  EXPECT_EQ(temporal_smooth(s, 1).frames, s.frames);
}

TEST(TemporalSmooth, StaticSequenceUnchanged) {
  const Frame f = test::gray(test::random_plane(10, 10, 7));
  const VideoSequence s = test::sequence({f, f, f, f, f});
  const VideoSequence out = temporal_smooth(s, 3);
  for (const auto& g : out.frames) {
    for (std::size_t i = 0; i < f.pixel_count(); ++i) EXPECT_NEAR(g.plane(0)[i], f.plane(0)[i], 1e-15);
  }
}

TEST(TemporalSmooth, EdgeClampedAverage) {
  std::vector<Frame> frames;
  for (double v : {0.0, 0.3, 0.9}) frames.push_back(Frame(1, 1, 1, {}, v));
  const VideoSequence out = temporal_smooth(test::sequence(frames), 3);
  EXPECT_NEAR(out[0].at(0, 0), (0.0 + 0.0 + 0.3) / 3.0, 1e-15);
  EXPECT_NEAR(out[1].at(0, 0), (0.0 + 0.3 + 0.9) / 3.0, 1e-15);
  EXPECT_NEAR(out[2].at(0, 0), (0.3 + 0.9 + 0.9) / 3.0, 1e-15);
}

// With a 3-frame window the clamped end frame is counted twice in its own
// output and once in its neighbor's, three times like every other frame, so
// the per-pixel sum over time is unchanged.
TEST(TemporalSmooth, PreservesTemporalMean) {
  const VideoSequence s = noise_sequence(12, 8, 6, 6);
  const VideoSequence out = temporal_smooth(s, 3);
  for (std::size_t i = 0; i < s[0].pixel_count(); ++i) {
    double in_sum = 0.0;
    double out_sum = 0.0;
    for (std::size_t t = 0; t < 12; ++t) {
      in_sum += s[t].plane(0)[i];
      out_sum += out[t].plane(0)[i];
    }
    EXPECT_NEAR(out_sum, in_sum, 1e-12);
  }
}

TEST(TemporalSmooth, Contracts) {
  const VideoSequence s = noise_sequence(3, 9);
  EXPECT_THROW(temporal_smooth(s, 2), ContractError);
  EXPECT_THROW(temporal_smooth(s, 0), ContractError);
  EXPECT_THROW(temporal_smooth(s, -1), ContractError);
}

TEST(TemporalSmooth, ReducesBisweOnNoisyStaticSequence) {
  const Plane base = test::textured_plane(48, 48, 3);
  std::vector<Frame> frames;
  for (int t = 0; t < 5; ++t) frames.push_back(test::gray(test::add_noise(base, 0.08, 30 + t)));
  const VideoSequence noisy = test::sequence(frames);
  const VideoSequence smooth = temporal_smooth(noisy, 3);
  const FlowField zero(48, 48);
  const Mask all(48, 48, 1);
  auto score = [&](const VideoSequence& s) {
    return biswe(s[1], s[2], s[3], zero, zero, all, all).value;
  };
  EXPECT_LT(score(smooth), score(noisy));
}

}  // namespace
}  // namespace vfb
