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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vfbench/evaluation.hpp"
#include "vfbench/screening.hpp"

namespace vfb::cli {

using nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double ("nan"/"inf" spelled out).
std::string format_number(double v);

ordered_json to_json(const MetricReport& report);
std::string to_csv(const MetricReport& report);

ordered_json to_json(const ScreenReport& report);
std::string to_csv(const ScreenReport& report);

/// Table-shaped summary: one row per (method, task), sorted by method then
/// task, columns VIF, SSIM, MI, Qabf, BiSWE, MS2R. Throws ContractError on a
/// duplicate key or a report without a summary.
ordered_json merge_reports(const std::vector<ordered_json>& reports);
std::string merged_csv(const ordered_json& merged);

/// Creates parent directories as needed. Throws IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace vfb::cli
