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

#include "vfbench/screening.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "vfbench/errors.hpp"
#include "vfbench/parallel.hpp"

namespace vfb {

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double image_entropy(const LevelImage& levels) {
  require(!levels.empty(), "entropy of an empty image");
  const auto hist = histogram256(levels);
  const double n = static_cast<double>(levels.size());
  std::vector<double> p;
  p.reserve(256);
  for (auto c : hist) p.push_back(static_cast<double>(c) / n);
  return entropy_bits(std::move(p));
}

double image_entropy(const Frame& frame) { return image_entropy(to_levels(frame)); }

double global_contrast(const LevelImage& levels) {
  require(!levels.empty(), "contrast of an empty image");
  const double n = static_cast<double>(levels.size());
  double mean = 0.0;
  for (auto v : levels.values()) mean += v;
  mean /= n;
  double ss = 0.0;
  for (auto v : levels.values()) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / n);
}

double global_contrast(const Frame& frame) { return global_contrast(to_levels(frame)); }

double dark_area_proportion(const LevelImage& levels, int dark_level) {
  require(!levels.empty(), "dark proportion of an empty image");
  std::size_t dark = 0;
  for (auto v : levels.values()) dark += v <= dark_level ? 1 : 0;
  return static_cast<double>(dark) / static_cast<double>(levels.size());
}

double dark_area_proportion(const Frame& frame, int dark_level) {
  return dark_area_proportion(to_levels(frame), dark_level);
}

double composite_score(double entropy, double contrast, double dark_fraction, double entropy_max,
                       double contrast_max, const ScoreWeights& w) {
  require(entropy_max > 0.0 && contrast_max > 0.0, "score normalizers H_max and sigma_max must be positive");
  return w.entropy * (entropy / entropy_max) + w.contrast * (contrast / contrast_max) +
         w.brightness * (1.0 - dark_fraction);
}

Illumination retinex_illumination(const Frame& frame) {
  require(!frame.empty(), "illumination of an empty frame");
  Plane peak = frame.plane(0);
  for (int c = 1; c < frame.channels(); ++c) {
    const auto& p = frame.plane(c);
    for (std::size_t i = 0; i < peak.size(); ++i) peak[i] = std::max(peak[i], p[i]);
  }
  const int edge = std::max(frame.width(), frame.height());
  const double sigma = edge / 8.0;
  const int radius = std::min(edge, static_cast<int>(std::ceil(3.0 * sigma)));
  const auto kernel = gaussian_kernel(sigma, radius);
  Illumination out{convolve_normalized(peak, kernel), 0.0};
  out.mean = std::accumulate(out.map.values().begin(), out.map.values().end(), 0.0) /
             static_cast<double>(out.map.size());
  return out;
}

IrFrameMeasure measure_ir_frame(const Frame& frame, const ScreenThresholds& t) {
  const LevelImage levels = to_levels(frame);
  IrFrameMeasure m;
  m.entropy = image_entropy(levels);
  m.contrast = global_contrast(levels);
  m.dark = dark_area_proportion(levels, t.dark_level);
  if (!(m.entropy > t.entropy_min)) m.reasons.push_back("entropy <= " + fmt_g(t.entropy_min));
  if (!(m.contrast > t.contrast_min)) m.reasons.push_back("contrast <= " + fmt_g(t.contrast_min));
  if (!(m.dark < t.dark_max)) m.reasons.push_back("dark ratio >= " + fmt_g(t.dark_max));
  m.pass = m.reasons.empty();
  return m;
}

std::size_t floor_count(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 1e-9));
}

std::size_t ceil_count(double fraction, std::size_t n) {
  const double c = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  return c <= 0.0 ? 0 : static_cast<std::size_t>(c);
}

const SceneDecision& ScreenReport::scene(const std::string& id) const {
  for (const auto& s : scenes) {
    if (s.scene_id == id) return s;
  }
  throw ContractError("no scene '" + id + "' in screening report");
}

std::string_view to_string(ScreenStage s) {
  switch (s) {
    case ScreenStage::kFrameRules: return "stage1-frame-rules";
    case ScreenStage::kScore: return "stage2-score";
    case ScreenStage::kIllumination: return "stage3-illumination";
    case ScreenStage::kKept: break;
  }
  return "kept";
}

ScreenReport rank_scenes(std::vector<SceneMeasurements> scenes, const ScreenThresholds& t) {
  if (scenes.empty()) throw StructuralError("screening needs at least one scene");
  require(t.drop_bottom >= 0.0 && t.drop_bottom <= 1.0, "drop-bottom fraction must lie in [0,1]");
  require(t.drop_top_illumination >= 0.0 && t.drop_top_illumination <= 1.0,
          "drop-top-illum fraction must lie in [0,1]");
  {
    std::set<std::string> ids;
    for (const auto& s : scenes) {
      if (!ids.insert(s.scene_id).second) throw StructuralError("duplicate scene id '" + s.scene_id + "'");
      if (s.ir.empty()) throw StructuralError("scene '" + s.scene_id + "' has no infrared frames");
    }
  }

  ScreenReport report;
  report.thresholds = t;

  // Dataset-wide normalizers over every infrared frame.
  if (!t.entropy_max || !t.contrast_max) {
    require(scenes.size() >= 2,
            "score normalization needs at least two scenes or explicit H_max / sigma_max overrides");
  }
  double h_max = 0.0;
  double s_max = 0.0;
  for (const auto& s : scenes) {
    for (const auto& f : s.ir) {
      h_max = std::max(h_max, f.entropy);
      s_max = std::max(s_max, f.contrast);
    }
  }
  report.entropy_max = t.entropy_max.value_or(h_max);
  report.contrast_max = t.contrast_max.value_or(s_max);

  // Stage 1: per-frame rules.
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    auto& in = scenes[i];
    SceneDecision d;
    d.scene_id = in.scene_id;
    d.ir = std::move(in.ir);
    d.rgb_mean_illumination = std::move(in.rgb_mean_illumination);
    std::size_t failing = 0;
    std::set<std::string> rules;
    for (const auto& f : d.ir) {
      if (!f.pass) {
        ++failing;
        rules.insert(f.reasons.begin(), f.reasons.end());
      }
    }
    d.failing_fraction = static_cast<double>(failing) / static_cast<double>(d.ir.size());
    d.mean_illumination = mean_of(d.rgb_mean_illumination);
    if (d.failing_fraction > t.max_fail_fraction) {
      d.dropped_at = ScreenStage::kFrameRules;
      std::string why = "stage 1: " + std::to_string(failing) + "/" + std::to_string(d.ir.size()) +
                        " infrared frames failed (";
      bool first = true;
      for (const auto& r : rules) {
        why += (first ? "" : "; ") + r;
        first = false;
      }
      d.reasons.push_back(why + ")");
    } else {
      alive.push_back(i);
    }
    report.scenes.push_back(std::move(d));
  }

  // Stage 2: composite score over retained frames, drop the lowest.
  for (std::size_t i : alive) {
    auto& d = report.scenes[i];
    double sum = 0.0;
    std::size_t n = 0;
    for (auto& f : d.ir) {
      f.score = composite_score(f.entropy, f.contrast, f.dark, report.entropy_max, report.contrast_max,
                                t.weights);
      if (f.pass) {
        sum += f.score;
        ++n;
      }
    }
    d.score = n == 0 ? 0.0 : sum / static_cast<double>(n);
  }
  {
    std::vector<std::size_t> order = alive;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& da = report.scenes[a];
      const auto& db = report.scenes[b];
      if (da.score != db.score) return da.score < db.score;
      return da.scene_id < db.scene_id;
    });
    const std::size_t drop = floor_count(t.drop_bottom, order.size());
    for (std::size_t k = 0; k < drop; ++k) {
      auto& d = report.scenes[order[k]];
      d.dropped_at = ScreenStage::kScore;
      d.reasons.push_back("stage 2: composite score " + fmt_g(d.score) + " in bottom " +
                          fmt_g(t.drop_bottom * 100.0) + "%");
    }
    std::erase_if(alive, [&](std::size_t i) { return report.scenes[i].dropped_at != ScreenStage::kKept; });
  }

  // Stage 3: drop the brightest visible scenes.
  {
    std::vector<std::size_t> order = alive;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& da = report.scenes[a];
      const auto& db = report.scenes[b];
      if (da.mean_illumination != db.mean_illumination) return da.mean_illumination > db.mean_illumination;
      return da.scene_id < db.scene_id;
    });
    const std::size_t drop = ceil_count(t.drop_top_illumination, order.size());
    for (std::size_t k = 0; k < drop; ++k) {
      auto& d = report.scenes[order[k]];
      d.dropped_at = ScreenStage::kIllumination;
      d.reasons.push_back("stage 3: mean illumination " + fmt_g(d.mean_illumination) + " in top " +
                          fmt_g(t.drop_top_illumination * 100.0) + "%");
    }
  }

  for (const auto& d : report.scenes) {
    if (d.dropped_at == ScreenStage::kKept) report.kept.push_back(d.scene_id);
  }
  return report;
}

ScreenReport screen_scene_set(const std::vector<ScenePair>& scenes, const ScreenThresholds& t, int jobs) {
  if (scenes.empty()) throw StructuralError("screening needs at least one scene");
  for (const auto& s : scenes) {
    s.ir.validate();
    s.rgb.validate();
  }
  // Flatten to one work item per frame so small scene counts still spread.
  struct Item {
    std::size_t scene;
    std::size_t frame;
    bool ir;
  };
  std::vector<Item> items;
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    for (std::size_t f = 0; f < scenes[s].ir.size(); ++f) items.push_back({s, f, true});
    for (std::size_t f = 0; f < scenes[s].rgb.size(); ++f) items.push_back({s, f, false});
  }
  std::vector<SceneMeasurements> measured(scenes.size());
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    measured[s].scene_id = scenes[s].scene_id;
    measured[s].ir.resize(scenes[s].ir.size());
    measured[s].rgb_mean_illumination.resize(scenes[s].rgb.size());
  }
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    const Item& it = items[i];
    if (it.ir) {
      measured[it.scene].ir[it.frame] = measure_ir_frame(scenes[it.scene].ir[it.frame], t);
    } else {
      measured[it.scene].rgb_mean_illumination[it.frame] = retinex_illumination(scenes[it.scene].rgb[it.frame]).mean;
    }
  });
  return rank_scenes(std::move(measured), t);
}

}  // namespace vfb
