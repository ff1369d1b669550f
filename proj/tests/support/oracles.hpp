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

// Direct, unoptimized reference implementations. They share no code with the
// library beyond the Grid container: windows are summed in 2-D, histograms are
// keyed maps, derivatives are explicit 3x3 loops.

#include <vector>

#include "vfbench/grid.hpp"

namespace vfb::oracle {

double ssim(const Plane& a, const Plane& b);
double mutual_information(const Plane& a, const Plane& b);
double qabf(const Plane& a, const Plane& b, const Plane& f);
double vif(const Plane& ref, const Plane& dist);

/// Shannon entropy in bits of the 8-bit level histogram.
double entropy(const Plane& p);

/// Dense Gaussian gather with std `sd` over a square window of `radius`,
/// dropping out-of-image taps and renormalizing.
Plane gaussian_blur(const Plane& p, double sd, int radius);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace vfb::oracle
