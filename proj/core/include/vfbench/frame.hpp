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
#include <string>
#include <string_view>
#include <vector>

#include "vfbench/grid.hpp"

namespace vfb {

enum class Encoding { kUnspecified, kLinear, kHlg, kBt709Gamma };
enum class Primaries { kNone, kBt709, kBt2020 };

/// Storage depth of the PNG a frame came from or will be written to.
enum class BitDepth { k8, k10In16, k16 };

/// How 10-bit codes sit inside a 16-bit container.
///   kLeftJustified: stored = code << 6
///   kValueScaled:   stored = round(code * 65535 / 1023)
enum class TenBitPacking { kLeftJustified, kValueScaled };

struct FrameFormat {
  BitDepth bit_depth = BitDepth::k8;
  Encoding encoding = Encoding::kUnspecified;
  Primaries primaries = Primaries::kNone;
  TenBitPacking packing = TenBitPacking::kLeftJustified;

  friend bool operator==(const FrameFormat&, const FrameFormat&) = default;
};

std::string_view to_string(Encoding e);
std::string_view to_string(Primaries p);
std::string_view to_string(BitDepth d);
Encoding parse_encoding(std::string_view s);
Primaries parse_primaries(std::string_view s);

/// One image with 1 or 3 channel planes. Samples are stored as doubles in
/// [0,1] regardless of the bit depth they were loaded from; the format only
/// records provenance and the quantization used when saving.
class Frame {
 public:
  Frame() = default;
  Frame(int width, int height, int channels, FrameFormat format = {}, double fill = 0.0);
  Frame(std::vector<Plane> planes, FrameFormat format);

  int width() const { return planes_.empty() ? 0 : planes_.front().width(); }
  int height() const { return planes_.empty() ? 0 : planes_.front().height(); }
  int channels() const { return static_cast<int>(planes_.size()); }
  std::size_t pixel_count() const { return planes_.empty() ? 0 : planes_.front().size(); }
  bool empty() const { return planes_.empty(); }

  const FrameFormat& format() const { return format_; }
  FrameFormat& format() { return format_; }

  Plane& plane(int c) { return planes_[static_cast<std::size_t>(c)]; }
  const Plane& plane(int c) const { return planes_[static_cast<std::size_t>(c)]; }

  double& at(int x, int y, int c = 0) { return plane(c).at(x, y); }
  double at(int x, int y, int c = 0) const { return plane(c).at(x, y); }

  bool same_shape(const Frame& other) const {
    return channels() == other.channels() && width() == other.width() &&
           height() == other.height();
  }

  /// True when every sample is finite and inside [0,1].
  bool in_unit_range() const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<Plane> planes_;
  FrameFormat format_;
};

/// Throws ContractError unless the frame carries `required` encoding.
void require_encoding(const Frame& frame, Encoding required, std::string_view op);

/// Frame rate as an exact rational, e.g. 30000/1001.
struct Rational {
  std::int64_t num = 30;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parses "30000/1001" or "30".
Rational parse_rational(std::string_view s);

enum class Role { kSourceA, kSourceB, kFused, kReference };

std::string_view to_string(Role r);
Role parse_role(std::string_view s);

struct VideoSequence {
  std::vector<Frame> frames;
  Rational fps;
  std::string scene_id;
  Role role = Role::kSourceA;

  std::size_t size() const { return frames.size(); }
  const Frame& operator[](std::size_t i) const { return frames[i]; }

  /// Throws StructuralError unless the sequence is non-empty and all frames
  /// share dimensions, channel count, bit depth and encoding.
  void validate() const;
};

/// Throws StructuralError unless `a` and `b` have equal length and every
/// frame pair has the same shape.
void require_aligned(const VideoSequence& a, const VideoSequence& b, std::string_view op);

/// Per-pixel normalized inverse depth in [0,1]; larger is closer.
struct DepthMap {
  Plane values;

  int width() const { return values.width(); }
  int height() const { return values.height(); }
  /// Throws ContractError when a value is outside [0,1] or non-finite.
  void validate() const;
};

/// Per-frame integer object labels, 0 = background.
using SegmentMaskSet = std::vector<LabelMap>;

/// Per-pixel displacement (u, v) in pixels plus a validity flag.
/// Invalid pixels always carry a zero displacement.
struct FlowField {
  Grid<float> u;
  Grid<float> v;
  Mask valid;

  FlowField() = default;
  FlowField(int width, int height, float u0 = 0.0f, float v0 = 0.0f);

  int width() const { return u.width(); }
  int height() const { return u.height(); }

  friend bool operator==(const FlowField&, const FlowField&) = default;
};

}  // namespace vfb
