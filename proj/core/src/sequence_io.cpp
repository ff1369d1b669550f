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

#include "vfbench/sequence_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"
#include "vfbench/png_io.hpp"

namespace fs = std::filesystem;

namespace vfb {

LoadSpec parse_input_depth(const std::string& s) {
  LoadSpec spec;
  if (s == "8bit") {
    spec.bit_depth = BitDepth::k8;
  } else if (s == "16bit") {
    spec.bit_depth = BitDepth::k16;
  } else if (s == "10bit-in-16bit") {
    spec.bit_depth = BitDepth::k10In16;
    spec.packing = TenBitPacking::kLeftJustified;
  } else if (s == "10bit-in-16bit-scaled") {
    spec.bit_depth = BitDepth::k10In16;
    spec.packing = TenBitPacking::kValueScaled;
  } else {
    throw ContractError("unknown input depth '" + s + "'");
  }
  return spec;
}

std::string frame_filename(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu.png", index);
  return buf;
}

std::vector<fs::path> list_frames(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("directory '" + dir.string() + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".png") files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list '" + dir.string() + "': " + ec.message());
  if (files.empty()) throw StructuralError("directory '" + dir.string() + "' contains no PNG frames");
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
  return files;
}

namespace {

double decode_sample(std::uint16_t stored, const LoadSpec& spec) {
  switch (spec.bit_depth) {
    case BitDepth::k8: return stored / 255.0;
    case BitDepth::k16: return stored / 65535.0;
    case BitDepth::k10In16:
      if (spec.packing == TenBitPacking::kLeftJustified) return (stored >> 6) / 1023.0;
      return std::round(stored * 1023.0 / 65535.0) / 1023.0;
  }
  return 0.0;
}

std::uint16_t encode_sample(double v, BitDepth depth, TenBitPacking packing) {
  const double code = std::round(v * max_code(depth));
  if (depth == BitDepth::k10In16) {
    const auto c = static_cast<std::uint16_t>(code);
    if (packing == TenBitPacking::kLeftJustified) return static_cast<std::uint16_t>(c << 6);
    return static_cast<std::uint16_t>(std::round(c * 65535.0 / 1023.0));
  }
  return static_cast<std::uint16_t>(code);
}

}  // namespace

Frame load_frame(const fs::path& path, const LoadSpec& spec) {
  const PngImage img = read_png(path);
  const int expected_bits = spec.bit_depth == BitDepth::k8 ? 8 : 16;
  if (img.bit_depth != expected_bits) {
    throw StructuralError("frame '" + path.string() + "' is " + std::to_string(img.bit_depth) +
                          "-bit but " + std::string(to_string(spec.bit_depth)) + " was declared");
  }
  Frame frame(img.width, img.height, img.channels, spec.format());
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  for (int c = 0; c < img.channels; ++c) {
    auto& plane = frame.plane(c);
    for (std::size_t i = 0; i < n; ++i) {
      plane[i] = decode_sample(img.samples[i * img.channels + c], spec);
    }
  }
  return frame;
}

VideoSequence load_sequence(const fs::path& dir, const LoadSpec& spec) {
  VideoSequence seq;
  seq.scene_id = dir.filename().string();
  for (const auto& file : list_frames(dir)) {
    Frame f = load_frame(file, spec);
    if (!seq.frames.empty() && !f.same_shape(seq.frames.front())) {
      throw StructuralError("frame '" + file.string() + "' differs in size from the first frame of '" +
                            dir.string() + "'");
    }
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

void save_frame(const Frame& frame, const fs::path& path, BitDepth depth, TenBitPacking packing) {
  if (!frame.in_unit_range()) {
    throw ContractError("frame '" + path.string() + "' has samples outside [0,1]");
  }
  PngImage img;
  img.width = frame.width();
  img.height = frame.height();
  img.channels = frame.channels();
  img.bit_depth = depth == BitDepth::k8 ? 8 : 16;
  const std::size_t n = frame.pixel_count();
  img.samples.resize(n * img.channels);
  for (int c = 0; c < img.channels; ++c) {
    const auto& plane = frame.plane(c);
    for (std::size_t i = 0; i < n; ++i) img.samples[i * img.channels + c] = encode_sample(plane[i], depth, packing);
  }
  write_png(path, img);
}

void save_sequence(const VideoSequence& seq, const fs::path& dir, BitDepth depth, TenBitPacking packing) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  for (std::size_t i = 0; i < seq.size(); ++i) save_frame(seq[i], dir / frame_filename(i), depth, packing);
}

DepthMap load_depth_map(const fs::path& path) {
  const PngImage img = read_png(path);
  if (img.channels != 1) throw StructuralError("depth map '" + path.string() + "' must be single-channel");
  DepthMap d{Plane(img.width, img.height)};
  const double scale = img.bit_depth == 16 ? 65535.0 : 255.0;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] = img.samples[i] / scale;
  return d;
}

std::vector<DepthMap> load_depth_maps(const fs::path& dir) {
  std::vector<DepthMap> out;
  for (const auto& f : list_frames(dir)) out.push_back(load_depth_map(f));
  return out;
}

LabelMap load_label_map(const fs::path& path) {
  const PngImage img = read_png_indices(path);
  if (img.channels != 1) throw StructuralError("mask '" + path.string() + "' must be indexed or gray");
  LabelMap labels(img.width, img.height);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = img.samples[i];
  return labels;
}

SegmentMaskSet load_masks(const fs::path& dir) {
  SegmentMaskSet out;
  for (const auto& f : list_frames(dir)) out.push_back(load_label_map(f));
  return out;
}

void save_depth_map(const DepthMap& depth, const fs::path& path) {
  depth.validate();
  PngImage img{depth.width(), depth.height(), 1, 16, {}};
  img.samples.resize(depth.values.size());
  for (std::size_t i = 0; i < img.samples.size(); ++i) {
    img.samples[i] = static_cast<std::uint16_t>(std::round(depth.values[i] * 65535.0));
  }
  write_png(path, img);
}

void save_label_map(const LabelMap& labels, const fs::path& path) {
  PngImage img{labels.width(), labels.height(), 1, 8, {}};
  img.samples.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(labels[i] >= 0 && labels[i] <= 255, "label ids must fit in 8 bits");
    img.samples[i] = static_cast<std::uint16_t>(labels[i]);
  }
  write_png(path, img);
}

}  // namespace vfb
