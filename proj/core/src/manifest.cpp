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

#include "vfbench/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include "vfbench/errors.hpp"
#include "vfbench/sequence_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace vfb {

const fs::path& SceneEntry::dir(Role role) const {
  auto it = roles.find(role);
  if (it == roles.end()) {
    throw StructuralError("scene '" + scene_id + "' has no '" + std::string(to_string(role)) + "' role");
  }
  return it->second;
}

Manifest parse_manifest(const std::string& json_text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("manifest is not valid JSON: ") + e.what());
  }
  Manifest m;
  try {
    if (doc.contains("ten_bit_packing")) {
      const auto p = doc.at("ten_bit_packing").get<std::string>();
      if (p == "left-justified") {
        m.packing = TenBitPacking::kLeftJustified;
      } else if (p == "value-scaled") {
        m.packing = TenBitPacking::kValueScaled;
      } else {
        throw StructuralError("unknown ten_bit_packing '" + p + "'");
      }
    }
    std::set<std::string> seen;
    for (const auto& s : doc.at("scenes")) {
      SceneEntry e;
      e.scene_id = s.at("scene_id").get<std::string>();
      if (!seen.insert(e.scene_id).second) throw StructuralError("duplicate scene id '" + e.scene_id + "'");
      if (s.contains("fps")) {
        const auto& fps = s.at("fps");
        e.fps = fps.is_string() ? parse_rational(fps.get<std::string>())
                                : parse_rational(std::to_string(fps.get<std::int64_t>()));
      }
      if (s.contains("split")) {
        e.split = s.at("split").get<std::string>();
        if (e.split != "train" && e.split != "test") {
          throw StructuralError("scene '" + e.scene_id + "': split must be train or test");
        }
      }
      if (s.contains("provenance")) e.provenance = s.at("provenance").get<std::string>();
      for (const auto& [role, rel] : s.at("roles").items()) {
        e.roles[parse_role(role)] = base_dir / rel.get<std::string>();
      }
      if (e.roles.empty()) throw StructuralError("scene '" + e.scene_id + "' lists no roles");
      m.scenes.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

Manifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read manifest '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Manifest m = parse_manifest(buf.str(), path.parent_path());
  for (const auto& scene : m.scenes) {
    std::size_t count = 0;
    bool first = true;
    for (const auto& [role, dir] : scene.roles) {
      const std::size_t n = list_frames(dir).size();
      if (!first && n != count) {
        throw StructuralError("scene '" + scene.scene_id + "': role '" + std::string(to_string(role)) +
                              "' has " + std::to_string(n) + " frames, expected " + std::to_string(count));
      }
      count = n;
      first = false;
    }
  }
  return m;
}

void save_manifest(const Manifest& manifest, const fs::path& path) {
  json doc;
  doc["ten_bit_packing"] =
      manifest.packing == TenBitPacking::kLeftJustified ? "left-justified" : "value-scaled";
  doc["scenes"] = json::array();
  const fs::path base = path.parent_path();
  for (const auto& s : manifest.scenes) {
    json roles = json::object();
    for (const auto& [role, dir] : s.roles) {
      roles[std::string(to_string(role))] = dir.lexically_relative(base).generic_string();
    }
    doc["scenes"].push_back({{"scene_id", s.scene_id},
                             {"fps", s.fps.to_string()},
                             {"split", s.split},
                             {"roles", roles},
                             {"provenance", s.provenance}});
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace vfb
