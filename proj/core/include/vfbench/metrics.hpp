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

#include <string_view>

#include "vfbench/frame.hpp"

namespace vfb {

// All Frame overloads evaluate on BT.709 luma in [0,1].

/// Gaussian-window SSIM (Wang et al. 2004): 11x11 window, std 1.5,
/// K1 = 0.01, K2 = 0.03, dynamic range 1. Mean over fully supported windows.
struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;
};

double ssim(const Plane& a, const Plane& b, const SsimParams& params = {});
double ssim(const Frame& a, const Frame& b);

/// Mutual information in bits of the 256x256 joint histogram of 8-bit levels,
/// computed as H(A) + H(B) - H(A,B).
double mutual_information(const Plane& a, const Plane& b);
double mutual_information(const Frame& a, const Frame& b);

/// Pixel-domain VIF over four scales (Sheikh & Bovik, vifp_mscale). Inputs in
/// [0,1] are rescaled to 0-255 so the noise variance sigma_n^2 = 2 keeps its
/// usual meaning. A reference without any local variance scores 1.
double vif(const Plane& ref, const Plane& dist);
double vif(const Frame& ref, const Frame& dist);

/// Xydeas-Petrovic edge preservation constants.
struct QabfParams {
  double gamma_g = 0.9994;
  double kappa_g = -15.0;
  double sigma_g = 0.5;
  double gamma_a = 0.9879;
  double kappa_a = -22.0;
  double sigma_a = 0.8;
  double weight_exponent = 1.0;  // L
};

/// Q^{AB/F}. With the default constants a perfect copy of both sources scores
/// Qg(1) * Qa(1) ~ 0.97479, not 1. Returns 0 when both sources are flat.
double qabf(const Plane& a, const Plane& b, const Plane& fused, const QabfParams& params = {});
double qabf(const Frame& a, const Frame& b, const Frame& fused);

enum class SpatialMetric { kVif, kSsim, kMi, kQabf };
enum class Aggregation { kSum, kMean };

std::string_view to_string(SpatialMetric m);
std::string_view to_string(Aggregation a);
Aggregation parse_aggregation(std::string_view s);

/// How single-source metrics combine over two sources. Qabf is inherently
/// two-source and ignores this.
struct AggregationConvention {
  Aggregation vif = Aggregation::kSum;
  Aggregation ssim = Aggregation::kMean;
  Aggregation mi = Aggregation::kSum;
};

double two_source_aggregate(SpatialMetric metric, const Plane& a, const Plane& b, const Plane& fused,
                            const AggregationConvention& convention = {});

}  // namespace vfb
