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

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "synthetic.hpp"
#include "vfbench/errors.hpp"
#include "vfbench/frame.hpp"
#include "vfbench/image_ops.hpp"
#include "vfbench/parallel.hpp"

namespace vfb {
namespace {

TEST(Grid, RowMajorIndexing) {
  Grid<int> g(3, 2, 7);
  EXPECT_EQ(g.size(), 6u);
  g.at(2, 1) = 5;
  EXPECT_EQ(g[5], 5);
  EXPECT_EQ(g.row(1)[2], 5);
  EXPECT_TRUE(g.contains(2, 1));
  EXPECT_FALSE(g.contains(3, 0));
  EXPECT_FALSE(g.contains(0, -1));
}

TEST(Frame, RejectsUnsupportedChannelCounts) {
  EXPECT_THROW(Frame(4, 4, 2), ContractError);
  EXPECT_THROW(Frame(0, 4, 1), ContractError);
  EXPECT_NO_THROW(Frame(4, 4, 3));
}

TEST(Frame, UnitRangeCheck) {
  Frame f(2, 2, 1, {}, 0.5);
  EXPECT_TRUE(f.in_unit_range());
  f.at(1, 1) = 1.0000001;
  EXPECT_FALSE(f.in_unit_range());
  f.at(1, 1) = std::nan("");
  EXPECT_FALSE(f.in_unit_range());
}

TEST(Frame, RequireEncoding) {
  Frame f(2, 2, 3);
  f.format().encoding = Encoding::kHlg;
  EXPECT_NO_THROW(require_encoding(f, Encoding::kHlg, "op"));
  EXPECT_THROW(require_encoding(f, Encoding::kLinear, "op"), ContractError);
}

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("30000/1001"), (Rational{30000, 1001}));
  EXPECT_EQ(parse_rational("25"), (Rational{25, 1}));
  EXPECT_EQ(parse_rational("30000/1001").to_string(), "30000/1001");
  EXPECT_THROW(parse_rational("0/1"), ContractError);
  EXPECT_THROW(parse_rational("abc"), ContractError);
}

TEST(Role, RoundTrip) {
  for (Role r : {Role::kSourceA, Role::kSourceB, Role::kFused, Role::kReference}) {
    EXPECT_EQ(parse_role(to_string(r)), r);
  }
  EXPECT_THROW(parse_role("source-c"), ContractError);
}

TEST(VideoSequence, ValidateCatchesMixedShapes) {
  auto s = test::sequence({Frame(4, 4, 1), Frame(4, 5, 1)});
  EXPECT_THROW(s.validate(), StructuralError);
  EXPECT_THROW(test::sequence({}).validate(), StructuralError);
}

TEST(VideoSequence, AlignmentRequiresEqualLengths) {
  auto a = test::sequence({Frame(4, 4, 1), Frame(4, 4, 1)});
  auto b = test::sequence({Frame(4, 4, 1)});
  EXPECT_THROW(require_aligned(a, b, "op"), StructuralError);
}

TEST(Bilinear, ExactAtIntegersAndInterpolatesBetween) {
  Plane p(3, 2);
  p.at(0, 0) = 0.0;
  p.at(1, 0) = 1.0;
  p.at(0, 1) = 2.0;
  p.at(1, 1) = 3.0;
  EXPECT_EQ(*bilinear_sample(p, 1.0, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(*bilinear_sample(p, 0.5, 0.5), 1.5);
  EXPECT_EQ(*bilinear_sample(p, 2.0, 1.0), p.at(2, 1));
  EXPECT_FALSE(bilinear_sample(p, -0.01, 0.0).has_value());
  EXPECT_FALSE(bilinear_sample(p, 0.0, 1.01).has_value());
  EXPECT_FALSE(bilinear_sample(p, std::nan(""), 0.0).has_value());
}

TEST(Luma, UsesBt709Weights) {
  Frame f(1, 1, 3);
  f.at(0, 0, 0) = 1.0;
  EXPECT_DOUBLE_EQ(luma(f)[0], 0.2126);
  f.at(0, 0, 1) = 1.0;
  f.at(0, 0, 2) = 1.0;
  EXPECT_NEAR(luma(f)[0], 1.0, 1e-15);
}

TEST(Levels, RoundAndClamp) {
  Plane p(4, 1);
  p[0] = 0.0;
  p[1] = 0.5 / 255.0;
  p[2] = 1.0;
  p[3] = 1.2;
  const auto l = to_levels(p);
  EXPECT_EQ(l[0], 0);
  EXPECT_EQ(l[1], 1);
  EXPECT_EQ(l[2], 255);
  EXPECT_EQ(l[3], 255);
}

TEST(GaussianKernel, NormalizedAndSymmetric) {
  const auto k = gaussian_kernel(1.5, 5);
  ASSERT_EQ(k.size(), 11u);
  double s = 0.0;
  for (double v : k) s += v;
  EXPECT_NEAR(s, 1.0, 1e-15);
  for (std::size_t i = 0; i < k.size(); ++i) EXPECT_EQ(k[i], k[k.size() - 1 - i]);
  EXPECT_THROW(gaussian_kernel(0.0, 3), ContractError);
}

TEST(ConvolveNormalized, PreservesConstants) {
  Plane p(9, 7, 0.37);
  const Plane out = convolve_normalized(p, gaussian_kernel(2.0, 6));
  for (double v : out.values()) EXPECT_NEAR(v, 0.37, 1e-15);
}

TEST(ConvolveNormalized, MatchesDenseGaussian) {
  const Plane p = test::random_plane(20, 17, 3);
  const double sd = 1.7;
  const int r = 4;
  const Plane fast = convolve_normalized(p, gaussian_kernel(sd, r));
  const Plane slow = oracle::gaussian_blur(p, sd, r);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(fast[i], slow[i], 1e-12);
}

TEST(FilterValid, OutputShapeAndValues) {
  const Plane p = test::random_plane(12, 10, 5);
  const auto k = gaussian_kernel(1.0, 2);
  const Plane out = filter_valid(p, k);
  ASSERT_EQ(out.width(), 8);
  ASSERT_EQ(out.height(), 6);
  double expected = 0.0;
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) expected += k[i] * k[j] * p.at(3 + i, 2 + j);
  }
  EXPECT_NEAR(out.at(3, 2), expected, 1e-14);
}

TEST(Sobel, LinearRampHasConstantGradient) {
  Plane p(6, 6);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 6; ++x) p.at(x, y) = 0.1 * x + 0.02 * y;
  }
  const Gradients g = sobel(p);
  EXPECT_NEAR(g.gx.at(2, 3), 8 * 0.1, 1e-14);
  EXPECT_NEAR(g.gy.at(2, 3), 8 * 0.02, 1e-14);
  // Replicated borders halve the central difference at the edge.
  EXPECT_NEAR(g.gx.at(0, 3), 4 * 0.1, 1e-14);
}

TEST(Entropy, UniformAndDegenerate) {
  EXPECT_DOUBLE_EQ(entropy_bits({0.25, 0.25, 0.25, 0.25}), 2.0);
  EXPECT_EQ(entropy_bits({1.0, 0.0}), 0.0);
  EXPECT_EQ(entropy_bits({0.1, 0.2, 0.7}), entropy_bits({0.7, 0.1, 0.2}));
}

TEST(Parallel, ResultsAreOrderedByIndex) {
  const auto v = parallel_map<std::size_t>(1000, 8, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(v[i], i * i);
}

TEST(Parallel, RethrowsLowestFailingIndex) {
  for (int jobs : {1, 4, 16}) {
    try {
      parallel_for(200, jobs, [](std::size_t i) {
        if (i == 37 || i == 150) throw std::runtime_error("item " + std::to_string(i));
      });
      FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "item 37");
    }
  }
}

TEST(Parallel, RunsEveryItemOnce) {
  std::vector<std::atomic<int>> hits(513);
  parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, DefaultJobsReadsEnvironment) {
  ::setenv("VFB_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3);
  ::unsetenv("VFB_JOBS");
  EXPECT_GE(default_jobs(), 1);
}

}  // namespace
}  // namespace vfb
