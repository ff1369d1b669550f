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

#include <array>
#include <utility>

#include "vfbench/frame.hpp"

namespace vfb {

// Transfer functions --------------------------------------------------------

/// HLG signal V in [0,1] to linear light:
///   V^2 / 3                                    for 0 <= V <= 0.5
///   (exp((V - 0.5599) / 0.1788) + 0.2847) / 12 for 0.5 < V <= 1
/// The constants are used verbatim; the branches meet at V = 0.5 only to
/// within ~3e-6 and the curve reaches ~1.0005 at V = 1.
double hlg_eotf(double v);

/// Linear light L to BT.709 signal. L is clamped to [0,1] first.
///   4.5 L                  for 0 <= L < 0.018
///   1.099 L^0.45 - 0.099   for 0.018 <= L <= 1
double bt709_oetf(double l);

/// Requires HLG encoding and samples in [0,1]; returns linear encoding.
Frame hlg_eotf(const Frame& frame);

/// Requires linear encoding; clamps to [0,1] and returns BT709-gamma encoding.
Frame bt709_oetf(const Frame& frame);

// Exposure ------------------------------------------------------------------

/// Exposure shift in EV stops; one stop doubles linear light.
struct ExposureSpec {
  double ev_shift = 0.0;

  /// 2^ev_shift (exact for integer shifts).
  double multiplier() const;
};

/// Scales linear light by 2^ev. No clamping: headroom above 1.0 survives
/// until the OETF.
Frame adjust_exposure(const Frame& frame, ExposureSpec spec);

// Gamut ---------------------------------------------------------------------

using Mat3 = std::array<std::array<double, 3>, 3>;

struct Chromaticity {
  double x;
  double y;
};

struct ColorPrimaries {
  Chromaticity red;
  Chromaticity green;
  Chromaticity blue;
  Chromaticity white;
};

inline constexpr ColorPrimaries kBt2020Primaries{{0.708, 0.292}, {0.170, 0.797}, {0.131, 0.046}, {0.3127, 0.3290}};
inline constexpr ColorPrimaries kBt709Primaries{{0.640, 0.330}, {0.300, 0.600}, {0.150, 0.060}, {0.3127, 0.3290}};

Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 invert(const Mat3& m);

/// Linear RGB -> CIE XYZ for a set of primaries (white maps to Y = 1).
Mat3 rgb_to_xyz(const ColorPrimaries& p);

/// Linear BT.2020 RGB -> linear BT.709 RGB (shared D65 white).
Mat3 bt2020_to_bt709();

/// Applies the 3x3 primaries conversion per pixel and clips to [0,1].
/// Requires a 3-channel linear frame with BT.2020 primaries.
Frame gamut_map_2020_to_709(const Frame& frame);

// Pair synthesis ------------------------------------------------------------

struct ExposurePair {
  Frame over;
  Frame under;
};

/// HLG/BT.2020 frame -> 8-bit BT.709 over/under pair at +ev / -ev:
/// EOTF, exposure gain, gamut map, OETF, 8-bit quantization.
ExposurePair synth_mef_frame(const Frame& hdr, double ev);

/// Sequence version of synth_mef_frame; ev must be positive.
std::pair<VideoSequence, VideoSequence> synth_mef_pair(const VideoSequence& hdr, double ev, int jobs = 1);

}  // namespace vfb
