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

#include <cmath>

#include "synthetic.hpp"
#include "vfbench/colorpipe.hpp"
#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"

namespace vfb {
namespace {

// Written out independently of the library so a typo in either copy shows up.
double hlg_direct(double v) {
  if (v <= 0.5) return v * v / 3.0;
  return (std::exp((v - 0.5599) / 0.1788) + 0.2847) / 12.0;
}

double bt709_direct(double l) {
  if (l < 0.018) return 4.5 * l;
  return 1.099 * std::pow(l, 0.45) - 0.099;
}

// Produced by tests/oracles/gamut_matrix.py (numpy, primaries -> XYZ -> primaries).
constexpr double kGamutOracle[3][3] = {
    {1.6604910021084338, -0.58764113878854951, -0.072849863319884786},
    {-0.12455047452159049, 1.1328998971259601, -0.0083494226043694924},
    {-0.018150763354905234, -0.1005788980080074, 1.1187296613629125},
};

Frame hdr_frame(int w, int h, double fill) {
  return Frame(w, h, 3, {BitDepth::k10In16, Encoding::kHlg, Primaries::kBt2020}, fill);
}

Frame linear2020(double r, double g, double b) {
  Frame f(1, 1, 3, {BitDepth::k16, Encoding::kLinear, Primaries::kBt2020});
  f.at(0, 0, 0) = r;
  f.at(0, 0, 1) = g;
  f.at(0, 0, 2) = b;
  return f;
}

TEST(HlgEotf, MatchesDirectFormulaOnDenseGrid) {
  for (int i = 0; i <= 10000; ++i) {
    const double v = i / 10000.0;
    EXPECT_DOUBLE_EQ(hlg_eotf(v), hlg_direct(v)) << v;
  }
}

TEST(HlgEotf, Endpoints) {
  EXPECT_EQ(hlg_eotf(0.0), 0.0);
  EXPECT_NEAR(hlg_eotf(0.5), 0.25 / 3.0, 1e-15);
  EXPECT_NEAR(hlg_eotf(1.0), 1.0, 1e-3);
  EXPECT_NEAR(hlg_eotf(1.0), 1.0005016570747152, 1e-12);
}

TEST(HlgEotf, KneeMismatchWithinTolerance) {
  const double below = 0.25 / 3.0;
  const double above = (std::exp((0.5 - 0.5599) / 0.1788) + 0.2847) / 12.0;
  EXPECT_NE(below, above);
  EXPECT_LT(std::abs(below - above), 2e-3);
}

TEST(HlgEotf, StrictlyMonotone) {
  double prev = hlg_eotf(0.0);
  for (int i = 1; i <= 10000; ++i) {
    const double cur = hlg_eotf(i / 10000.0);
    ASSERT_GT(cur, prev) << i;
    prev = cur;
  }
}

TEST(HlgEotf, FrameContract) {
  Frame f = hdr_frame(2, 2, 0.5);
  Frame out = hlg_eotf(f);
  EXPECT_EQ(out.format().encoding, Encoding::kLinear);
  EXPECT_EQ(out.format().primaries, Primaries::kBt2020);
  EXPECT_NEAR(out.at(1, 1, 2), 0.25 / 3.0, 1e-15);

  f.format().encoding = Encoding::kLinear;
  EXPECT_THROW(hlg_eotf(f), ContractError);
  Frame bad = hdr_frame(2, 2, 0.5);
  bad.at(0, 0, 0) = 1.5;
  EXPECT_THROW(hlg_eotf(bad), ContractError);
}

TEST(Bt709Oetf, MatchesDirectFormulaOnDenseGrid) {
  for (int i = 0; i <= 10000; ++i) {
    const double l = i / 10000.0;
    EXPECT_DOUBLE_EQ(bt709_oetf(l), bt709_direct(l)) << l;
  }
}

TEST(Bt709Oetf, EndpointsAndKnee) {
  EXPECT_EQ(bt709_oetf(0.0), 0.0);
  EXPECT_NEAR(bt709_oetf(1.0), 1.0, 1e-15);
  const double linear_branch = 4.5 * 0.018;
  const double power_branch = 1.099 * std::pow(0.018, 0.45) - 0.099;
  EXPECT_NEAR(linear_branch, 0.081, 1e-15);
  EXPECT_NEAR(power_branch, 0.081247944, 1e-8);
  EXPECT_LT(std::abs(linear_branch - power_branch), 5e-4);
}

TEST(Bt709Oetf, MonotoneAndClamped) {
  double prev = bt709_oetf(0.0);
  for (int i = 1; i <= 10000; ++i) {
    const double cur = bt709_oetf(i / 10000.0);
    ASSERT_GE(cur, prev) << i;
    ASSERT_LE(cur, 1.0 + 1e-15);
    prev = cur;
  }
  EXPECT_EQ(bt709_oetf(-0.2), 0.0);
  EXPECT_NEAR(bt709_oetf(7.0), 1.0, 1e-15);
}

TEST(Bt709Oetf, FrameContract) {
  Frame f(2, 1, 3, {BitDepth::k8, Encoding::kLinear, Primaries::kBt709}, 2.0);
  Frame out = bt709_oetf(f);
  EXPECT_EQ(out.format().encoding, Encoding::kBt709Gamma);
  EXPECT_TRUE(out.in_unit_range());
  f.format().encoding = Encoding::kHlg;
  EXPECT_THROW(bt709_oetf(f), ContractError);
}

TEST(Exposure, MultiplierIsPowerOfTwo) {
  EXPECT_EQ(ExposureSpec{3}.multiplier(), 8.0);
  EXPECT_EQ(ExposureSpec{-3}.multiplier(), 0.125);
  EXPECT_EQ(ExposureSpec{0}.multiplier(), 1.0);
}

TEST(Exposure, ScalesWithoutClamping) {
  Frame f(1, 1, 3, {BitDepth::k16, Encoding::kLinear, Primaries::kBt2020}, 0.05);
  Frame up = adjust_exposure(f, {3});
  EXPECT_EQ(up.at(0, 0, 1), 0.4);
  Frame way_up = adjust_exposure(up, {3});
  EXPECT_EQ(way_up.at(0, 0, 0), 3.2);
  Frame down = adjust_exposure(Frame(1, 1, 1, {BitDepth::k16, Encoding::kLinear}, 0.4), {-3});
  EXPECT_EQ(down.at(0, 0), 0.05);
  EXPECT_EQ(adjust_exposure(f, {0}), f);
}

TEST(Exposure, RoundTripIsExact) {
  Frame f = test::gray(test::random_plane(32, 32, 11));
  f.format().encoding = Encoding::kLinear;
  for (double ev : {1.0, 3.0, 5.0}) {
    EXPECT_EQ(adjust_exposure(adjust_exposure(f, {ev}), {-ev}), f) << ev;
  }
}

TEST(Exposure, RequiresLinear) {
  Frame f(1, 1, 1, {BitDepth::k8, Encoding::kHlg}, 0.5);
  EXPECT_THROW(adjust_exposure(f, {1}), ContractError);
}

TEST(Gamut, MatrixMatchesOracle) {
  const Mat3 m = bt2020_to_bt709();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(m[i][j], kGamutOracle[i][j], 1e-12) << i << "," << j;
  }
}

TEST(Gamut, RowsSumToOne) {
  const Mat3 m = bt2020_to_bt709();
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(m[i][0] + m[i][1] + m[i][2], 1.0, 1e-10);
}

TEST(Gamut, InverseIsIdentity) {
  const Mat3 m = bt2020_to_bt709();
  const Mat3 p = multiply(m, invert(m));
  const Mat3 q = multiply(invert(m), m);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(p[i][j], i == j ? 1.0 : 0.0, 1e-10);
      EXPECT_NEAR(q[i][j], i == j ? 1.0 : 0.0, 1e-10);
    }
  }
}

TEST(Gamut, WhiteMapsToUnitLuminance) {
  for (const auto& prim : {kBt709Primaries, kBt2020Primaries}) {
    const Mat3 m = rgb_to_xyz(prim);
    EXPECT_NEAR(m[1][0] + m[1][1] + m[1][2], 1.0, 1e-12);
  }
}

TEST(Gamut, NeutralGrayPreserved) {
  for (double c : {0.0, 0.18, 0.5, 1.0}) {
    Frame out = gamut_map_2020_to_709(linear2020(c, c, c));
    EXPECT_EQ(out.format().primaries, Primaries::kBt709);
    for (int ch = 0; ch < 3; ++ch) EXPECT_NEAR(out.at(0, 0, ch), c, 1e-12);
  }
}

TEST(Gamut, PureRedClips) {
  Frame out = gamut_map_2020_to_709(linear2020(1, 0, 0));
  EXPECT_EQ(out.at(0, 0, 0), 1.0);  // 1.66 clipped
  EXPECT_EQ(out.at(0, 0, 1), 0.0);  // -0.12 clipped
  EXPECT_EQ(out.at(0, 0, 2), 0.0);
}

TEST(Gamut, Contracts) {
  Frame gray(1, 1, 1, {BitDepth::k16, Encoding::kLinear, Primaries::kBt2020});
  EXPECT_THROW(gamut_map_2020_to_709(gray), ContractError);
  Frame wrong = linear2020(0.5, 0.5, 0.5);
  wrong.format().primaries = Primaries::kBt709;
  EXPECT_THROW(gamut_map_2020_to_709(wrong), ContractError);
  wrong = linear2020(0.5, 0.5, 0.5);
  wrong.format().encoding = Encoding::kHlg;
  EXPECT_THROW(gamut_map_2020_to_709(wrong), ContractError);
}

TEST(SynthMef, BlackStaysBlack) {
  const ExposurePair p = synth_mef_frame(hdr_frame(8, 8, 0.0), 3);
  for (const Frame* f : {&p.over, &p.under}) {
    EXPECT_EQ(f->format().bit_depth, BitDepth::k8);
    EXPECT_EQ(f->format().encoding, Encoding::kBt709Gamma);
    EXPECT_EQ(f->format().primaries, Primaries::kBt709);
    for (int c = 0; c < 3; ++c) {
      for (double v : f->plane(c).values()) EXPECT_EQ(v, 0.0);
    }
  }
}

TEST(SynthMef, UnderNeverBrighterOnRamp) {
  Frame f = hdr_frame(256, 4, 0.0);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 256; ++x) {
      for (int c = 0; c < 3; ++c) f.at(x, y, c) = x / 255.0;
    }
  }
  const ExposurePair p = synth_mef_frame(f, 3);
  bool differs = false;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < f.pixel_count(); ++i) {
      ASSERT_LE(p.under.plane(c)[i], p.over.plane(c)[i]);
      differs |= p.under.plane(c)[i] != p.over.plane(c)[i];
    }
  }
  EXPECT_TRUE(differs);
  // Along the ramp the over-exposed output is monotone and saturates.
  for (int x = 1; x < 256; ++x) EXPECT_GE(p.over.at(x, 0, 1), p.over.at(x - 1, 0, 1));
  EXPECT_EQ(p.over.at(255, 0, 1), 1.0);
}

TEST(SynthMef, OutputsAreOnTheEightBitGrid) {
  Frame f = hdr_frame(16, 16, 0.0);
  for (int c = 0; c < 3; ++c) f.plane(c) = test::random_plane(16, 16, 40 + c);
  const ExposurePair p = synth_mef_frame(f, 2);
  for (int c = 0; c < 3; ++c) {
    for (double v : p.over.plane(c).values()) EXPECT_EQ(v * 255.0, std::round(v * 255.0));
  }
}

TEST(SynthMef, SequenceIsDeterministicAcrossJobCounts) {
  std::vector<Frame> frames;
  for (int i = 0; i < 4; ++i) {
    Frame f = hdr_frame(24, 16, 0.0);
    for (int c = 0; c < 3; ++c) f.plane(c) = test::random_plane(24, 16, 100 + 3 * i + c);
    frames.push_back(std::move(f));
  }
  const VideoSequence hdr = test::sequence(frames);
  const auto [over1, under1] = synth_mef_pair(hdr, 3, 1);
  const auto [over4, under4] = synth_mef_pair(hdr, 3, 4);
  ASSERT_EQ(over1.size(), 4u);
  EXPECT_EQ(over1.frames, over4.frames);
  EXPECT_EQ(under1.frames, under4.frames);
  EXPECT_EQ(over1.role, Role::kSourceA);
  EXPECT_EQ(under1.role, Role::kSourceB);
}

TEST(SynthMef, RejectsNonPositiveEv) {
  const VideoSequence hdr = test::sequence({hdr_frame(4, 4, 0.2)});
  EXPECT_THROW(synth_mef_pair(hdr, 0.0), ContractError);
  EXPECT_THROW(synth_mef_pair(hdr, -3.0), ContractError);
}

}  // namespace
}  // namespace vfb
