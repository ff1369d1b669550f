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

#include "vfbench/colorpipe.hpp"

#include <algorithm>
#include <cmath>

#include "vfbench/errors.hpp"
#include "vfbench/parallel.hpp"
#include "vfbench/image_ops.hpp"

namespace vfb {

double hlg_eotf(double v) {
  if (v <= 0.5) return v * v / 3.0;
  return (std::exp((v - 0.5599) / 0.1788) + 0.2847) / 12.0;
}

double bt709_oetf(double l) {
  l = std::clamp(l, 0.0, 1.0);
  if (l < 0.018) return 4.5 * l;
  return 1.099 * std::pow(l, 0.45) - 0.099;
}

namespace {

template <class Fn>
Frame map_samples(const Frame& in, Fn fn) {
  Frame out = in;
  for (int c = 0; c < out.channels(); ++c) {
    for (double& s : out.plane(c).values()) s = fn(s);
  }
  return out;
}

}  // namespace

Frame hlg_eotf(const Frame& frame) {
  require_encoding(frame, Encoding::kHlg, "hlg_eotf");
  require(frame.in_unit_range(), "hlg_eotf: samples must lie in [0,1]");
  Frame out = map_samples(frame, [](double v) { return hlg_eotf(v); });
  out.format().encoding = Encoding::kLinear;
  return out;
}

Frame bt709_oetf(const Frame& frame) {
  require_encoding(frame, Encoding::kLinear, "bt709_oetf");
  Frame out = map_samples(frame, [](double l) { return bt709_oetf(l); });
  out.format().encoding = Encoding::kBt709Gamma;
  return out;
}

double ExposureSpec::multiplier() const {
  require(std::isfinite(ev_shift), "exposure shift must be finite");
  return std::exp2(ev_shift);
}

Frame adjust_exposure(const Frame& frame, ExposureSpec spec) {
  require_encoding(frame, Encoding::kLinear, "adjust_exposure");
  const double gain = spec.multiplier();
  return map_samples(frame, [gain](double s) { return s * gain; });
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

Mat3 invert(const Mat3& m) {
  const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  require(std::abs(det) > 1e-300, "matrix is singular");
  const double inv = 1.0 / det;
  Mat3 out{};
  out[0][0] = c00 * inv;
  out[1][0] = c01 * inv;
  out[2][0] = c02 * inv;
  out[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv;
  out[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv;
  out[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * inv;
  out[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv;
  out[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * inv;
  out[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv;
  return out;
}

Mat3 rgb_to_xyz(const ColorPrimaries& p) {
  auto xyz = [](Chromaticity c) { return std::array<double, 3>{c.x / c.y, 1.0, (1.0 - c.x - c.y) / c.y}; };
  const auto r = xyz(p.red);
  const auto g = xyz(p.green);
  const auto b = xyz(p.blue);
  const auto w = xyz(p.white);
  const Mat3 prim{{{r[0], g[0], b[0]}, {r[1], g[1], b[1]}, {r[2], g[2], b[2]}}};
  const Mat3 inv = invert(prim);
  std::array<double, 3> s{};
  for (int i = 0; i < 3; ++i) s[i] = inv[i][0] * w[0] + inv[i][1] * w[1] + inv[i][2] * w[2];
  Mat3 out = prim;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] *= s[j];
  }
  return out;
}

Mat3 bt2020_to_bt709() {
  return multiply(invert(rgb_to_xyz(kBt709Primaries)), rgb_to_xyz(kBt2020Primaries));
}

Frame gamut_map_2020_to_709(const Frame& frame) {
  require_encoding(frame, Encoding::kLinear, "gamut_map_2020_to_709");
  require(frame.channels() == 3, "gamut_map_2020_to_709 requires a 3-channel frame");
  require(frame.format().primaries == Primaries::kBt2020, "gamut_map_2020_to_709 requires BT.2020 primaries");
  static const Mat3 m = bt2020_to_bt709();
  Frame out = frame;
  out.format().primaries = Primaries::kBt709;
  const auto& r = frame.plane(0);
  const auto& g = frame.plane(1);
  const auto& b = frame.plane(2);
  for (std::size_t i = 0; i < frame.pixel_count(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const double v = m[c][0] * r[i] + m[c][1] * g[i] + m[c][2] * b[i];
      out.plane(c)[i] = std::clamp(v, 0.0, 1.0);
    }
  }
  return out;
}

ExposurePair synth_mef_frame(const Frame& hdr, double ev) {
  require(ev > 0.0 && std::isfinite(ev), "synth_mef_pair: ev must be positive");
  require(hdr.format().primaries == Primaries::kBt2020, "synth_mef_pair requires BT.2020 input");
  const Frame linear = hlg_eotf(hdr);
  auto render = [&](double shift) {
    Frame f = bt709_oetf(gamut_map_2020_to_709(adjust_exposure(linear, {shift})));
    return quantize(f, BitDepth::k8);
  };
  return {render(ev), render(-ev)};
}

std::pair<VideoSequence, VideoSequence> synth_mef_pair(const VideoSequence& hdr, double ev, int jobs) {
  hdr.validate();
  VideoSequence over{{}, hdr.fps, hdr.scene_id, Role::kSourceA};
  VideoSequence under{{}, hdr.fps, hdr.scene_id, Role::kSourceB};
  auto pairs = parallel_map<ExposurePair>(hdr.size(), jobs, [&](std::size_t i) { return synth_mef_frame(hdr[i], ev); });
  for (auto& pair : pairs) {
    over.frames.push_back(std::move(pair.over));
    under.frames.push_back(std::move(pair.under));
  }
  return {std::move(over), std::move(under)};
}

}  // namespace vfb
