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

#include "report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "vfbench/errors.hpp"

namespace vfb::cli {

namespace {

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json number(const std::optional<double>& v) { return v ? number(*v) : ordered_json(nullptr); }

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

ordered_json loss_json(const LossBreakdown& l) {
  return {{"l_spatial", number(l.l_spatial)}, {"l_int", number(l.l_int)},   {"l_ssim", number(l.l_ssim)},
          {"l_grad", number(l.l_grad)},       {"l_temp", number(l.l_temp)}, {"total", number(l.total)},
          {"temp_flagged", l.temp_flagged}};
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

ordered_json to_json(const MetricReport& report) {
  ordered_json per_frame = ordered_json::array();
  for (const auto& f : report.per_frame) {
    ordered_json row{{"index", f.index},
                     {"vif", number(f.vif)},
                     {"ssim", number(f.ssim)},
                     {"mi", number(f.mi)},
                     {"qabf", number(f.qabf)}};
    if (f.temporal) {
      row["biswe"] = number(f.temporal->biswe);
      row["ms2r"] = number(f.temporal->ms2r);
      row["mask_flagged"] = f.temporal->mask_flagged;
      row["loss"] = loss_json(f.temporal->loss);
    } else {
      row["biswe"] = nullptr;
      row["ms2r"] = nullptr;
    }
    per_frame.push_back(std::move(row));
  }
  const MetricSummary& s = report.summary;
  ordered_json summary{{"vif", number(s.vif)},
                       {"ssim", number(s.ssim)},
                       {"mi", number(s.mi)},
                       {"qabf", number(s.qabf)},
                       {"biswe", number(s.biswe)},
                       {"ms2r", number(s.ms2r)},
                       {"l_spatial", number(s.l_spatial)},
                       {"l_grad", number(s.l_grad)},
                       {"l_temp", number(s.l_temp)},
                       {"total", number(s.total)},
                       {"frames", s.frames},
                       {"triples", s.triples},
                       {"flagged_triples", s.flagged_triples}};
  return {{"task", std::string(to_string(report.task))},
          {"aggregation",
           {{"vif", std::string(to_string(report.aggregation.vif))},
            {"ssim", std::string(to_string(report.aggregation.ssim))},
            {"mi", std::string(to_string(report.aggregation.mi))}}},
          {"loss_weights", {{"alpha1", report.weights.alpha1}, {"alpha2", report.weights.alpha2}}},
          {"flow_source", report.flow_source},
          {"biswe_scale", kBisweScale},
          {"per_frame", std::move(per_frame)},
          {"summary", std::move(summary)}};
}

std::string to_csv(const MetricReport& report) {
  std::ostringstream os;
  os << "frame,vif,ssim,mi,qabf,biswe,ms2r,l_spatial,l_grad,l_temp,total\n";
  for (const auto& f : report.per_frame) {
    os << f.index << ',' << format_number(f.vif) << ',' << format_number(f.ssim) << ',' << format_number(f.mi) << ','
       << format_number(f.qabf);
    if (f.temporal) {
      const auto& t = *f.temporal;
      os << ',' << format_number(t.biswe) << ',' << format_number(t.ms2r) << ',' << format_number(t.loss.l_spatial)
         << ',' << format_number(t.loss.l_grad) << ',' << format_number(t.loss.l_temp) << ','
         << format_number(t.loss.total);
    } else {
      os << ",,,,,,";
    }
    os << '\n';
  }
  const MetricSummary& s = report.summary;
  os << "mean," << format_number(s.vif) << ',' << format_number(s.ssim) << ',' << format_number(s.mi) << ','
     << format_number(s.qabf) << ',' << cell(s.biswe) << ',' << cell(s.ms2r) << ',' << cell(s.l_spatial) << ','
     << cell(s.l_grad) << ',' << cell(s.l_temp) << ',' << cell(s.total) << '\n';
  return os.str();
}

ordered_json to_json(const ScreenReport& report) {
  const ScreenThresholds& t = report.thresholds;
  ordered_json scenes = ordered_json::array();
  for (const auto& d : report.scenes) {
    ordered_json frames = ordered_json::array();
    for (std::size_t i = 0; i < d.ir.size(); ++i) {
      const auto& m = d.ir[i];
      frames.push_back({{"index", i},
                        {"entropy", number(m.entropy)},
                        {"contrast", number(m.contrast)},
                        {"dark", number(m.dark)},
                        {"pass", m.pass},
                        {"reasons", m.reasons},
                        {"score", number(m.score)}});
    }
    ordered_json illum = ordered_json::array();
    for (double v : d.rgb_mean_illumination) illum.push_back(number(v));
    scenes.push_back({{"scene_id", d.scene_id},
                      {"decision", std::string(to_string(d.dropped_at))},
                      {"reasons", d.reasons},
                      {"failing_fraction", number(d.failing_fraction)},
                      {"score", number(d.score)},
                      {"mean_illumination", number(d.mean_illumination)},
                      {"ir_frames", std::move(frames)},
                      {"rgb_mean_illumination", std::move(illum)}});
  }
  return {{"thresholds",
           {{"entropy_min", t.entropy_min},
            {"contrast_min", t.contrast_min},
            {"dark_max", t.dark_max},
            {"dark_level", t.dark_level},
            {"max_fail_fraction", t.max_fail_fraction},
            {"drop_bottom", t.drop_bottom},
            {"drop_top_illumination", t.drop_top_illumination},
            {"weights",
             {{"entropy", t.weights.entropy}, {"contrast", t.weights.contrast}, {"brightness", t.weights.brightness}}}}},
          {"entropy_max", number(report.entropy_max)},
          {"contrast_max", number(report.contrast_max)},
          {"kept", report.kept},
          {"scenes", std::move(scenes)}};
}

std::string to_csv(const ScreenReport& report) {
  std::ostringstream os;
  os << "scene_id,decision,failing_fraction,score,mean_illumination\n";
  for (const auto& d : report.scenes) {
    os << d.scene_id << ',' << to_string(d.dropped_at) << ',' << format_number(d.failing_fraction) << ','
       << format_number(d.score) << ',' << format_number(d.mean_illumination) << '\n';
  }
  return os.str();
}

namespace {

constexpr std::array<std::pair<const char*, const char*>, 6> kTableColumns{{
    {"VIF", "vif"}, {"SSIM", "ssim"}, {"MI", "mi"}, {"Qabf", "qabf"}, {"BiSWE", "biswe"}, {"MS2R", "ms2r"}}};

}  // namespace

ordered_json merge_reports(const std::vector<ordered_json>& reports) {
  std::map<std::pair<std::string, std::string>, ordered_json> rows;
  for (const auto& r : reports) {
    if (!r.is_object() || !r.contains("summary") || !r.contains("method") || !r.contains("task")) {
      throw ContractError("merge: input is not an evaluate report (needs method, task and summary)");
    }
    const std::string method = r.at("method").get<std::string>();
    const std::string task = r.at("task").get<std::string>();
    ordered_json row{{"method", method}, {"task", task}};
    for (const auto& [column, key] : kTableColumns) {
      row[column] = r.at("summary").contains(key) ? r.at("summary").at(key) : ordered_json(nullptr);
    }
    if (!rows.emplace(std::pair{method, task}, std::move(row)).second) {
      throw ContractError("merge: duplicate report for method '" + method + "' task '" + task + "'");
    }
  }
  ordered_json columns = ordered_json::array();
  for (const auto& [column, key] : kTableColumns) columns.push_back(column);
  ordered_json out{{"columns", std::move(columns)}, {"rows", ordered_json::array()}};
  for (auto& [key, row] : rows) out["rows"].push_back(std::move(row));
  return out;
}

std::string merged_csv(const ordered_json& merged) {
  std::ostringstream os;
  os << "method,task";
  for (const auto& [column, key] : kTableColumns) os << ',' << column;
  os << '\n';
  for (const auto& row : merged.at("rows")) {
    os << row.at("method").get<std::string>() << ',' << row.at("task").get<std::string>();
    for (const auto& [column, key] : kTableColumns) {
      const auto& v = row.at(column);
      os << ',' << (v.is_number() ? format_number(v.get<double>()) : std::string());
    }
    os << '\n';
  }
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write '" + path.string() + "'");
  f << text;
  f.close();
  if (!f) throw IoError("error writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace vfb::cli
