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

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "vfbench/frame.hpp"

namespace vfb {

/// How the PNG files of a directory are to be interpreted.
struct LoadSpec {
  BitDepth bit_depth = BitDepth::k8;
  Encoding encoding = Encoding::kUnspecified;
  Primaries primaries = Primaries::kNone;
  TenBitPacking packing = TenBitPacking::kLeftJustified;

  FrameFormat format() const { return {bit_depth, encoding, primaries, packing}; }
};

/// Parses the CLI spelling of a container depth: "8bit", "16bit",
/// "10bit-in-16bit" (left-justified) or "10bit-in-16bit-scaled".
LoadSpec parse_input_depth(const std::string& s);

/// "%06d.png"
std::string frame_filename(std::size_t index);

/// Lexicographically sorted *.png files of `dir`.
/// Throws IoError if `dir` is missing, StructuralError if it holds no PNGs.
std::vector<std::filesystem::path> list_frames(const std::filesystem::path& dir);

Frame load_frame(const std::filesystem::path& path, const LoadSpec& spec);
VideoSequence load_sequence(const std::filesystem::path& dir, const LoadSpec& spec);

/// Writes samples quantized to `depth`. Throws ContractError when a sample
/// lies outside [0,1] (no clamping here).
void save_frame(const Frame& frame, const std::filesystem::path& path, BitDepth depth,
                TenBitPacking packing = TenBitPacking::kLeftJustified);
void save_sequence(const VideoSequence& seq, const std::filesystem::path& dir, BitDepth depth,
                   TenBitPacking packing = TenBitPacking::kLeftJustified);

/// Depth maps: 16-bit (or 8-bit) gray PNG, value / max code.
DepthMap load_depth_map(const std::filesystem::path& path);
std::vector<DepthMap> load_depth_maps(const std::filesystem::path& dir);

/// Masks: indexed (palette) or gray PNG; the stored index is the label.
LabelMap load_label_map(const std::filesystem::path& path);
SegmentMaskSet load_masks(const std::filesystem::path& dir);

void save_depth_map(const DepthMap& depth, const std::filesystem::path& path);
void save_label_map(const LabelMap& labels, const std::filesystem::path& path);

}  // namespace vfb
