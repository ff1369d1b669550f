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

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "vfbench/errors.hpp"
#include "vfbench/flow.hpp"

static_assert(std::endian::native == std::endian::little, ".flo I/O assumes a little-endian host");

namespace fs = std::filesystem;

namespace vfb {

void write_flo(const FlowField& flow, const fs::path& path) {
  require(flow.width() > 0 && flow.height() > 0, "write_flo: empty flow field");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create '" + path.string() + "'");
  const std::int32_t w = flow.width();
  const std::int32_t h = flow.height();
  out.write(reinterpret_cast<const char*>(&kFloMagic), 4);
  out.write(reinterpret_cast<const char*>(&w), 4);
  out.write(reinterpret_cast<const char*>(&h), 4);
  std::vector<float> buf(flow.u.size() * 2);
  for (std::size_t i = 0; i < flow.u.size(); ++i) {
    const bool ok = flow.valid[i] != 0;
    buf[2 * i] = ok ? flow.u[i] : kFloUnknown;
    buf[2 * i + 1] = ok ? flow.v[i] : kFloUnknown;
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

FlowField read_flo(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open flow file '" + path.string() + "'");
  float magic = 0.0f;
  std::int32_t w = 0;
  std::int32_t h = 0;
  in.read(reinterpret_cast<char*>(&magic), 4);
  in.read(reinterpret_cast<char*>(&w), 4);
  in.read(reinterpret_cast<char*>(&h), 4);
  if (!in || magic != kFloMagic) throw IoError("'" + path.string() + "' is not a Middlebury .flo file");
  if (w <= 0 || h <= 0 || w > 100000 || h > 100000) {
    throw IoError("'" + path.string() + "' has implausible dimensions");
  }
  std::vector<float> buf(static_cast<std::size_t>(w) * h * 2);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!in) throw IoError("'" + path.string() + "' is truncated");
  FlowField flow(w, h);
  for (std::size_t i = 0; i < flow.u.size(); ++i) {
    const float u = buf[2 * i];
    const float v = buf[2 * i + 1];
    if (std::isfinite(u) && std::isfinite(v) && std::abs(u) <= 1e9f && std::abs(v) <= 1e9f) {
      flow.u[i] = u;
      flow.v[i] = v;
    } else {
      flow.u[i] = 0.0f;
      flow.v[i] = 0.0f;
      flow.valid[i] = 0;
    }
  }
  return flow;
}

FloDirectoryProvider::FloDirectoryProvider(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) throw IoError("flow directory '" + root_.string() + "' does not exist");
}

fs::path FloDirectoryProvider::relative_path(std::string_view stream, std::size_t src, std::size_t dst) {
  char name[48];
  std::snprintf(name, sizeof(name), "%06zu_%06zu.flo", src, dst);
  return fs::path(std::string(stream)) / name;
}

FlowField FloDirectoryProvider::flow(const FlowRequest& request) const {
  FlowField f = read_flo(root_ / relative_path(request.stream, request.src_index, request.dst_index));
  if (f.width() != request.src.width() || f.height() != request.src.height()) {
    throw StructuralError("flow " + relative_path(request.stream, request.src_index, request.dst_index).string() +
                          " does not match the frame size");
  }
  return f;
}

std::string FloDirectoryProvider::describe() const { return "flo-directory"; }

}  // namespace vfb
