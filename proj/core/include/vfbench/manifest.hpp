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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vfbench/frame.hpp"

namespace vfb {

struct SceneEntry {
  std::string scene_id;
  std::map<Role, std::filesystem::path> roles;  // resolved against the manifest directory
  Rational fps;
  std::string split = "test";  // "train" | "test"
  std::string provenance;

  const std::filesystem::path& dir(Role role) const;
};

/// A JSON scene list:
///   {"ten_bit_packing": "left-justified" | "value-scaled",   (optional)
///    "scenes": [{"scene_id": "...", "fps": "30000/1001" | 30,
///                "split": "train" | "test",
///                "roles": {"source-A": "rel/dir", "source-B": "rel/dir", ...},
///                "provenance": "..."}]}
struct Manifest {
  std::vector<SceneEntry> scenes;
  TenBitPacking packing = TenBitPacking::kLeftJustified;
};

/// Parses and validates a manifest: every role directory must exist (IoError)
/// and all roles of a scene must hold the same number of frames
/// (StructuralError). Duplicate scene ids are a StructuralError.
Manifest load_manifest(const std::filesystem::path& path);

/// Parses without touching the filesystem beyond reading `path`.
Manifest parse_manifest(const std::string& json_text, const std::filesystem::path& base_dir);

void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

}  // namespace vfb
