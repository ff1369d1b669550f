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

#include "vfbench/frame.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "vfbench/errors.hpp"

namespace vfb {

std::string_view to_string(Encoding e) {
  switch (e) {
    case Encoding::kLinear: return "linear";
    case Encoding::kHlg: return "hlg";
    case Encoding::kBt709Gamma: return "bt709-gamma";
    case Encoding::kUnspecified: break;
  }
  return "unspecified";
}

std::string_view to_string(Primaries p) {
  switch (p) {
    case Primaries::kBt709: return "bt709";
    case Primaries::kBt2020: return "bt2020";
    case Primaries::kNone: break;
  }
  return "none";
}

std::string_view to_string(BitDepth d) {
  switch (d) {
    case BitDepth::k10In16: return "10bit-in-16bit";
    case BitDepth::k16: return "16bit";
    case BitDepth::k8: break;
  }
  return "8bit";
}

Encoding parse_encoding(std::string_view s) {
  if (s == "linear") return Encoding::kLinear;
  if (s == "hlg") return Encoding::kHlg;
  if (s == "bt709-gamma") return Encoding::kBt709Gamma;
  if (s == "unspecified") return Encoding::kUnspecified;
  throw ContractError("unknown encoding '" + std::string(s) + "'");
}

Primaries parse_primaries(std::string_view s) {
  if (s == "bt709") return Primaries::kBt709;
  if (s == "bt2020") return Primaries::kBt2020;
  if (s == "none") return Primaries::kNone;
  throw ContractError("unknown primaries '" + std::string(s) + "'");
}

Frame::Frame(int width, int height, int channels, FrameFormat format, double fill)
    : format_(format) {
  require(width > 0 && height > 0, "frame dimensions must be positive");
  require(channels == 1 || channels == 3, "frame must have 1 or 3 channels");
  planes_.assign(static_cast<std::size_t>(channels), Plane(width, height, fill));
}

Frame::Frame(std::vector<Plane> planes, FrameFormat format)
    : planes_(std::move(planes)), format_(format) {
  require(planes_.size() == 1 || planes_.size() == 3, "frame must have 1 or 3 channels");
  for (const auto& p : planes_) {
    require(p.same_shape(planes_.front()) && !p.empty(), "frame planes must share a non-empty shape");
  }
}

bool Frame::in_unit_range() const {
  for (const auto& p : planes_) {
    for (double s : p.values()) {
      if (!(s >= 0.0 && s <= 1.0)) return false;
    }
  }
  return true;
}

void require_encoding(const Frame& frame, Encoding required, std::string_view op) {
  if (frame.format().encoding != required) {
    throw ContractError(std::string(op) + " requires " + std::string(to_string(required)) +
                        " encoding, got " + std::string(to_string(frame.format().encoding)));
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ContractError("malformed frame rate '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  Rational r;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_int(s, s);
    r.den = 1;
  } else {
    r.num = parse_int(s.substr(0, slash), s);
    r.den = parse_int(s.substr(slash + 1), s);
  }
  if (r.num <= 0 || r.den <= 0) throw ContractError("frame rate must be positive: '" + std::string(s) + "'");
  auto g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::kSourceB: return "source-B";
    case Role::kFused: return "fused";
    case Role::kReference: return "reference";
    case Role::kSourceA: break;
  }
  return "source-A";
}

Role parse_role(std::string_view s) {
  if (s == "source-A") return Role::kSourceA;
  if (s == "source-B") return Role::kSourceB;
  if (s == "fused") return Role::kFused;
  if (s == "reference") return Role::kReference;
  throw ContractError("unknown role '" + std::string(s) + "'");
}

void VideoSequence::validate() const {
  if (frames.empty()) throw StructuralError("sequence '" + scene_id + "' has no frames");
  const Frame& first = frames.front();
  for (std::size_t i = 1; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    if (!f.same_shape(first)) {
      throw StructuralError("sequence '" + scene_id + "': frame " + std::to_string(i) +
                            " has a different size or channel count than frame 0");
    }
    if (f.format().bit_depth != first.format().bit_depth ||
        f.format().encoding != first.format().encoding) {
      throw StructuralError("sequence '" + scene_id + "': frame " + std::to_string(i) +
                            " has a different bit depth or encoding than frame 0");
    }
  }
}

void require_aligned(const VideoSequence& a, const VideoSequence& b, std::string_view op) {
  if (a.size() != b.size()) {
    throw StructuralError(std::string(op) + ": sequences have " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()) + " frames");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].same_shape(b[i])) {
      throw StructuralError(std::string(op) + ": frame " + std::to_string(i) + " differs in shape");
    }
  }
}

void DepthMap::validate() const {
  for (double d : values.values()) {
    if (!(d >= 0.0 && d <= 1.0)) throw ContractError("depth values must lie in [0,1]");
  }
}

FlowField::FlowField(int width, int height, float u0, float v0)
    : u(width, height, u0), v(width, height, v0), valid(width, height, 1) {}

}  // namespace vfb
