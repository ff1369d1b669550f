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

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "report.hpp"
#include "vfbench/colorpipe.hpp"
#include "vfbench/defocus.hpp"
#include "vfbench/errors.hpp"
#include "vfbench/evaluation.hpp"
#include "vfbench/flow.hpp"
#include "vfbench/fusers.hpp"
#include "vfbench/manifest.hpp"
#include "vfbench/parallel.hpp"
#include "vfbench/screening.hpp"
#include "vfbench/sequence_io.hpp"

#ifndef VFB_VERSION
#define VFB_VERSION "unknown"
#endif

namespace vfb::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kUsage =
    "usage: vfb <command> [options]\n"
    "\n"
    "commands:\n"
    "  gen-mef    synthesize over/under exposed pairs from HLG BT.2020 video\n"
    "  gen-mff    synthesize far/near focus pairs from video, depth and masks\n"
    "  screen     screen infrared-visible scenes listed in a manifest\n"
    "  flow       estimate optical flow between two frames into a .flo file\n"
    "  fuse       fuse two sequences with a baseline operator\n"
    "  evaluate   score a fused sequence against its two sources\n"
    "  merge      combine evaluate reports into one table\n"
    "\n"
    "Run 'vfb <command> --help' for the options of a command.\n";

const std::set<std::string> kCommands{"gen-mef", "gen-mff", "screen", "flow", "fuse", "evaluate", "merge"};

// Options shared by every command. Output destinations, the config path and
// the worker count are not echoed, so reports only depend on inputs and
// parameters.
struct Common {
  std::string config;
  int jobs = 1;
  int seed = 0;
  std::string report;
  std::string csv;
};

void add_common(CLI::App* sub, Common& c, bool csv) {
  sub->add_option("--config", c.config, "JSON config document");
  sub->add_option("--jobs", c.jobs, "worker threads (default: $VFB_JOBS or hardware concurrency)");
  sub->add_option("--seed", c.seed, "reserved; all pipelines are deterministic");
  sub->add_option("--report", c.report, "JSON report path");
  if (csv) sub->add_option("--csv", c.csv, "CSV report path");
}

void add_flow_options(CLI::App* sub, FlowEstimatorConfig& f) {
  sub->add_option("--flow-levels", f.pyramid_levels, "pyramid levels");
  sub->add_option("--flow-radius", f.window_radius, "Lucas-Kanade window radius");
  sub->add_option("--flow-iterations", f.iterations, "iterations per level");
  sub->add_option("--flow-smoothing", f.smoothing, "Tikhonov weight per window pixel");
}

ordered_json flow_json(const FlowEstimatorConfig& f) {
  return {{"levels", f.pyramid_levels},
          {"radius", f.window_radius},
          {"iterations", f.iterations},
          {"smoothing", f.smoothing}};
}

ordered_json envelope(const std::string& command, const Common& c, ordered_json config) {
  config["seed"] = c.seed;
  return {{"tool", "vfb"}, {"version", VFB_VERSION}, {"command", command}, {"config", std::move(config)}};
}

void write_report(const Common& c, const ordered_json& report) {
  if (!c.report.empty()) write_text(c.report, report.dump(2) + "\n");
}

LoadSpec load_spec(const std::string& depth) { return parse_input_depth(depth); }

// gen-mef ---------------------------------------------------------------------

struct GenMef {
  Common common;
  std::string input;
  double ev = 3.0;
  std::string out_over;
  std::string out_under;
  std::string input_depth = "10bit-in-16bit";

  void add(CLI::App* sub) {
    sub->add_option("--input", input, "HLG BT.2020 frame directory")->required();
    sub->add_option("--ev", ev, "exposure shift in stops");
    sub->add_option("--out-over", out_over, "over-exposed output directory")->required();
    sub->add_option("--out-under", out_under, "under-exposed output directory")->required();
    sub->add_option("--input-depth", input_depth, "8bit | 16bit | 10bit-in-16bit | 10bit-in-16bit-scaled");
    add_common(sub, common, false);
  }

  int run(std::ostream& out, std::ostream&) const {
    LoadSpec spec = load_spec(input_depth);
    spec.encoding = Encoding::kHlg;
    spec.primaries = Primaries::kBt2020;
    const VideoSequence hdr = load_sequence(input, spec);
    const auto [over, under] = synth_mef_pair(hdr, ev, common.jobs);
    save_sequence(over, out_over, BitDepth::k8);
    save_sequence(under, out_under, BitDepth::k8);
    ordered_json r = envelope("gen-mef", common, {{"input", input}, {"ev", ev}, {"input_depth", input_depth}});
    r["frames"] = hdr.size();
    write_report(common, r);
    out << "gen-mef: wrote " << hdr.size() << " exposure pairs\n";
    return 0;
  }
};

// gen-mff ---------------------------------------------------------------------

struct GenMff {
  Common common;
  std::string input;
  std::string depth;
  std::string masks;
  double sigma = 0.025;
  std::string out_far;
  std::string out_near;
  std::string input_depth = "8bit";

  void add(CLI::App* sub) {
    sub->add_option("--input", input, "all-in-focus frame directory")->required();
    sub->add_option("--depth", depth, "16-bit normalized inverse depth directory")->required();
    sub->add_option("--masks", masks, "indexed segmentation mask directory")->required();
    sub->add_option("--sigma", sigma, "blur strength");
    sub->add_option("--out-far", out_far, "far-focus output directory")->required();
    sub->add_option("--out-near", out_near, "near-focus output directory")->required();
    sub->add_option("--input-depth", input_depth, "8bit | 16bit | 10bit-in-16bit | 10bit-in-16bit-scaled");
    add_common(sub, common, false);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const LoadSpec spec = load_spec(input_depth);
    const VideoSequence video = load_sequence(input, spec);
    const std::vector<DepthMap> depths = load_depth_maps(depth);
    const SegmentMaskSet labels = load_masks(masks);
    if (depths.size() != video.size()) {
      throw StructuralError("gen-mff: " + std::to_string(depths.size()) + " depth maps for " +
                            std::to_string(video.size()) + " frames");
    }
    const FocalDepths focus = select_focal_depths(depths.front(), labels.front());

    struct Result {
      FocusPair pair;
      BlurStats stats;
    };
    const auto results = parallel_map<Result>(video.size(), common.jobs, [&](std::size_t i) {
      Result r;
      r.pair = synth_mff_frame(video[i], depths[i], focus, sigma, &r.stats);
      return r;
    });

    VideoSequence far{{}, video.fps, video.scene_id, Role::kSourceA};
    VideoSequence near{{}, video.fps, video.scene_id, Role::kSourceB};
    std::size_t capped = 0;
    int cap = 0;
    for (const auto& r : results) {
      far.frames.push_back(r.pair.far_focus);
      near.frames.push_back(r.pair.near_focus);
      capped += r.stats.capped_pixels;
      cap = r.stats.radius_cap;
    }
    save_sequence(far, out_far, spec.bit_depth, spec.packing);
    save_sequence(near, out_near, spec.bit_depth, spec.packing);
    if (capped > 0) err << "gen-mff: " << capped << " pixel windows clamped to radius " << cap << "\n";

    ordered_json r = envelope("gen-mff", common,
                              {{"input", input},
                               {"depth", depth},
                               {"masks", masks},
                               {"sigma", sigma},
                               {"input_depth", input_depth}});
    r["frames"] = video.size();
    r["focal_depths"] = {{"far", focus.far}, {"near", focus.near}};
    r["blur"] = {{"radius_cap", cap}, {"capped_pixels", capped}};
    write_report(common, r);
    out << "gen-mff: wrote " << video.size() << " focus pairs (far d_f=" << format_number(focus.far)
        << ", near d_f=" << format_number(focus.near) << ")\n";
    return 0;
  }
};

// screen ----------------------------------------------------------------------

struct Screen {
  Common common;
  std::string manifest;
  ScreenThresholds t;
  std::optional<double> h_max;
  std::optional<double> sigma_max;
  std::string ir_role = "source-A";
  std::string rgb_role = "source-B";
  std::string input_depth = "8bit";

  void add(CLI::App* sub) {
    sub->add_option("--manifest", manifest, "scene manifest (JSON)")->required();
    sub->add_option("--h-min", t.entropy_min, "keep frames with entropy above this");
    sub->add_option("--sigma-min", t.contrast_min, "keep frames with contrast above this");
    sub->add_option("--dark-max", t.dark_max, "keep frames with dark ratio below this");
    sub->add_option("--dark-level", t.dark_level, "dark pixel level T (inclusive)");
    sub->add_option("--max-fail-fraction", t.max_fail_fraction, "scene fails above this fraction of bad frames");
    sub->add_option("--drop-bottom", t.drop_bottom, "fraction of lowest-scoring scenes removed");
    sub->add_option("--drop-top-illum", t.drop_top_illumination, "fraction of brightest scenes removed");
    sub->add_option("--w-entropy", t.weights.entropy, "composite score weight of entropy");
    sub->add_option("--w-contrast", t.weights.contrast, "composite score weight of contrast");
    sub->add_option("--w-brightness", t.weights.brightness, "composite score weight of 1 - dark ratio");
    sub->add_option("--h-max", h_max, "entropy normalizer (default: dataset maximum)");
    sub->add_option("--sigma-max", sigma_max, "contrast normalizer (default: dataset maximum)");
    sub->add_option("--ir-role", ir_role, "manifest role holding the infrared stream");
    sub->add_option("--rgb-role", rgb_role, "manifest role holding the visible stream");
    sub->add_option("--input-depth", input_depth, "8bit | 16bit | 10bit-in-16bit | 10bit-in-16bit-scaled");
    add_common(sub, common, true);
  }

  int run(std::ostream& out, std::ostream&) const {
    ScreenThresholds th = t;
    th.entropy_max = h_max;
    th.contrast_max = sigma_max;
    const Manifest m = load_manifest(manifest);
    LoadSpec spec = load_spec(input_depth);
    if (spec.bit_depth == BitDepth::k10In16) spec.packing = m.packing;
    const Role ir = parse_role(ir_role);
    const Role rgb = parse_role(rgb_role);
    std::vector<ScenePair> pairs;
    for (const auto& s : m.scenes) {
      ScenePair p{s.scene_id, load_sequence(s.dir(ir), spec), load_sequence(s.dir(rgb), spec)};
      p.ir.scene_id = p.rgb.scene_id = s.scene_id;
      pairs.push_back(std::move(p));
    }
    const ScreenReport result = screen_scene_set(pairs, th, common.jobs);

    ordered_json config{{"manifest", manifest},
                        {"h_min", t.entropy_min},
                        {"sigma_min", t.contrast_min},
                        {"dark_max", t.dark_max},
                        {"dark_level", t.dark_level},
                        {"max_fail_fraction", t.max_fail_fraction},
                        {"drop_bottom", t.drop_bottom},
                        {"drop_top_illum", t.drop_top_illumination},
                        {"weights", {t.weights.entropy, t.weights.contrast, t.weights.brightness}},
                        {"h_max", h_max ? ordered_json(*h_max) : ordered_json(nullptr)},
                        {"sigma_max", sigma_max ? ordered_json(*sigma_max) : ordered_json(nullptr)},
                        {"ir_role", ir_role},
                        {"rgb_role", rgb_role},
                        {"input_depth", input_depth}};
    ordered_json r = envelope("screen", common, std::move(config));
    r["result"] = to_json(result);
    write_report(common, r);
    if (!common.csv.empty()) write_text(common.csv, to_csv(result));
    out << "screen: kept " << result.kept.size() << " of " << result.scenes.size() << " scenes\n";
    for (const auto& id : result.kept) out << "  " << id << "\n";
    return 0;
  }
};

// flow ------------------------------------------------------------------------

struct Flow {
  Common common;
  std::string a;
  std::string b;
  std::string out_path;
  std::string input_depth = "8bit";
  FlowEstimatorConfig cfg;

  void add(CLI::App* sub) {
    sub->add_option("--a", a, "source frame (flow lives on its grid)")->required();
    sub->add_option("--b", b, "target frame")->required();
    sub->add_option("--out", out_path, "output .flo path")->required();
    sub->add_option("--input-depth", input_depth, "8bit | 16bit | 10bit-in-16bit | 10bit-in-16bit-scaled");
    add_flow_options(sub, cfg);
    add_common(sub, common, false);
  }

  int run(std::ostream& out, std::ostream&) const {
    const LoadSpec spec = load_spec(input_depth);
    const FlowField f = estimate_flow(load_frame(a, spec), load_frame(b, spec), cfg);
    const fs::path p(out_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    write_flo(f, p);
    std::size_t valid = 0;
    for (auto v : f.valid.values()) valid += v != 0;
    ordered_json r = envelope("flow", common, {{"a", a}, {"b", b}, {"input_depth", input_depth}, {"flow", flow_json(cfg)}});
    r["width"] = f.width();
    r["height"] = f.height();
    r["valid_pixels"] = valid;
    write_report(common, r);
    out << "flow: wrote " << f.width() << "x" << f.height() << " field to " << out_path << "\n";
    return 0;
  }
};

// fuse ------------------------------------------------------------------------

struct Fuse {
  Common common;
  std::string method = "max";
  std::string a;
  std::string b;
  std::string out_dir;
  int smooth_window = 1;
  std::string input_depth = "8bit";

  void add(CLI::App* sub) {
    sub->add_option("--method", method, "max | mean");
    sub->add_option("--a", a, "source A directory")->required();
    sub->add_option("--b", b, "source B directory")->required();
    sub->add_option("--out", out_dir, "output directory")->required();
    sub->add_option("--smooth-window", smooth_window, "odd temporal moving-average window applied after fusion");
    sub->add_option("--input-depth", input_depth, "8bit | 16bit | 10bit-in-16bit | 10bit-in-16bit-scaled");
    add_common(sub, common, false);
  }

  int run(std::ostream& out, std::ostream&) const {
    const LoadSpec spec = load_spec(input_depth);
    const VideoSequence sa = load_sequence(a, spec);
    const VideoSequence sb = load_sequence(b, spec);
    VideoSequence fused;
    if (method == "max") {
      fused = fuse_max(sa, sb);
    } else if (method == "mean") {
      fused = fuse_mean(sa, sb);
    } else {
      throw ContractError("unknown fuse method '" + method + "' (expected max or mean)");
    }
    if (smooth_window != 1) fused = temporal_smooth(fused, smooth_window);
    save_sequence(fused, out_dir, spec.bit_depth, spec.packing);
    ordered_json r = envelope("fuse", common,
                              {{"method", method},
                               {"a", a},
                               {"b", b},
                               {"smooth_window", smooth_window},
                               {"input_depth", input_depth}});
    r["frames"] = fused.size();
    write_report(common, r);
    out << "fuse: wrote " << fused.size() << " frames\n";
    return 0;
  }
};

// evaluate --------------------------------------------------------------------

struct Evaluate {
  Common common;
  std::string fused;
  std::string src_a;
  std::string src_b;
  std::string task = "ivf";
  std::string flows = "internal";
  std::string method;
  std::string input_depth = "8bit";
  std::string vif_agg = "sum";
  std::string ssim_agg = "mean";
  std::string mi_agg = "sum";
  std::optional<double> alpha1;
  std::optional<double> alpha2;
  OcclusionParams occlusion;
  FlowEstimatorConfig cfg;

  void add(CLI::App* sub) {
    sub->add_option("--fused", fused, "fused frame directory")->required();
    sub->add_option("--src-a", src_a, "source A directory")->required();
    sub->add_option("--src-b", src_b, "source B directory")->required();
    sub->add_option("--task", task, "mef | mff | ivf | mvf");
    sub->add_option("--flows", flows, "'internal' or a directory of <stream>/<src>_<dst>.flo files");
    sub->add_option("--method", method, "method name for merged tables (default: fused directory name)");
    sub->add_option("--input-depth", input_depth, "8bit | 16bit | 10bit-in-16bit | 10bit-in-16bit-scaled");
    sub->add_option("--vif-agg", vif_agg, "sum | mean over the two sources");
    sub->add_option("--ssim-agg", ssim_agg, "sum | mean over the two sources");
    sub->add_option("--mi-agg", mi_agg, "sum | mean over the two sources");
    sub->add_option("--alpha1", alpha1, "gradient loss weight (default: task preset)");
    sub->add_option("--alpha2", alpha2, "temporal loss weight (default: task preset)");
    sub->add_option("--occ-alpha", occlusion.alpha, "forward-backward relative tolerance");
    sub->add_option("--occ-beta", occlusion.beta, "forward-backward absolute tolerance (px^2)");
    add_flow_options(sub, cfg);
    add_common(sub, common, true);
  }

  int run(std::ostream& out, std::ostream&) const {
    EvaluationOptions opt;
    opt.task = parse_task(task);
    opt.aggregation.vif = parse_aggregation(vif_agg);
    opt.aggregation.ssim = parse_aggregation(ssim_agg);
    opt.aggregation.mi = parse_aggregation(mi_agg);
    opt.occlusion = occlusion;
    if (alpha1 || alpha2) {
      LossWeights w = LossWeights::preset(opt.task);
      if (alpha1) w.alpha1 = *alpha1;
      if (alpha2) w.alpha2 = *alpha2;
      opt.weights = w;
    }
    const LoadSpec spec = load_spec(input_depth);
    const VideoSequence f = load_sequence(fused, spec);
    const VideoSequence a = load_sequence(src_a, spec);
    const VideoSequence b = load_sequence(src_b, spec);

    std::unique_ptr<FlowProvider> provider;
    if (flows == "internal") {
      provider = std::make_unique<EstimatorFlowProvider>(cfg);
    } else {
      if (!fs::is_directory(flows)) throw IoError("flow directory '" + flows + "' does not exist");
      provider = std::make_unique<FloDirectoryProvider>(flows);
    }
    const MetricReport result = evaluate_sequences(f, a, b, opt, *provider, common.jobs);

    std::string name = method;
    if (name.empty()) name = fs::path(fused).lexically_normal().filename().string();
    if (name.empty()) name = fs::path(fused).lexically_normal().parent_path().filename().string();

    ordered_json config{{"fused", fused},
                        {"src_a", src_a},
                        {"src_b", src_b},
                        {"task", task},
                        {"flows", flows},
                        {"method", method},
                        {"input_depth", input_depth},
                        {"vif_agg", vif_agg},
                        {"ssim_agg", ssim_agg},
                        {"mi_agg", mi_agg},
                        {"alpha1", alpha1 ? ordered_json(*alpha1) : ordered_json(nullptr)},
                        {"alpha2", alpha2 ? ordered_json(*alpha2) : ordered_json(nullptr)},
                        {"occ_alpha", occlusion.alpha},
                        {"occ_beta", occlusion.beta},
                        {"flow", flow_json(cfg)}};
    ordered_json r = envelope("evaluate", common, std::move(config));
    r["method"] = name;
    const ordered_json body = to_json(result);
    for (const auto& [k, v] : body.items()) r[k] = v;
    write_report(common, r);
    if (!common.csv.empty()) write_text(common.csv, to_csv(result));

    const MetricSummary& s = result.summary;
    auto opt_str = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string("n/a"); };
    out << "evaluate " << name << " [" << to_string(opt.task) << "]: VIF " << format_number(s.vif) << "  SSIM "
        << format_number(s.ssim) << "  MI " << format_number(s.mi) << "  Qabf " << format_number(s.qabf)
        << "  BiSWE " << opt_str(s.biswe) << "  MS2R " << opt_str(s.ms2r) << "\n";
    return 0;
  }
};

// merge -----------------------------------------------------------------------

struct Merge {
  Common common;
  std::vector<std::string> inputs;

  void add(CLI::App* sub) {
    sub->add_option("reports", inputs, "evaluate report JSON files")->required();
    add_common(sub, common, true);
  }

  int run(std::ostream& out, std::ostream&) const {
    std::vector<ordered_json> reports;
    for (const auto& p : inputs) {
      try {
        reports.push_back(ordered_json::parse(read_text(p)));
      } catch (const nlohmann::json::parse_error& e) {
        throw ContractError("'" + p + "' is not valid JSON: " + e.what());
      }
    }
    const ordered_json merged = merge_reports(reports);
    const std::string csv = merged_csv(merged);
    if (!common.report.empty()) write_text(common.report, merged.dump(2) + "\n");
    if (!common.csv.empty()) write_text(common.csv, csv);
    if (common.report.empty() && common.csv.empty()) out << csv;
    return 0;
  }
};

// Config documents ------------------------------------------------------------

std::string config_value(const ordered_json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw ContractError("config key '" + key + "' must be a string, number or boolean");
}

// Appends config-file values for every flag not given on the command line, so
// CLI flags win over the file and the file wins over built-in defaults.
std::vector<std::string> apply_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  std::set<std::string> explicit_flags;
  for (std::size_t i = 2; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) continue;
    const std::string name = a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2);
    explicit_flags.insert(name);
    if (name == "config") {
      if (a.find('=') != std::string::npos) {
        path = a.substr(a.find('=') + 1);
      } else if (i + 1 < args.size()) {
        path = args[i + 1];
      }
    }
  }
  if (!path) return args;

  ordered_json doc;
  try {
    doc = ordered_json::parse(read_text(*path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractError("config '" + *path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ContractError("config '" + *path + "' must be a JSON object");

  std::vector<std::string> out = args;
  auto inject = [&](const std::string& key, const ordered_json& v) {
    if (explicit_flags.contains(key)) return;
    explicit_flags.insert(key);
    out.push_back("--" + key);
    out.push_back(config_value(v, key));
  };
  const std::string& command = args[1];
  if (doc.contains(command)) {
    const auto& section = doc.at(command);
    if (!section.is_object()) throw ContractError("config section '" + command + "' must be an object");
    for (const auto& [k, v] : section.items()) inject(k, v);
  }
  if (doc.contains("seed")) inject("seed", doc.at("seed"));
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() < 2 || args[1] == "--help" || args[1] == "-h") {
    (args.size() < 2 ? err : out) << kUsage;
    return args.size() < 2 ? 1 : 0;
  }
  if (args[1] == "--version") {
    out << "vfb " << VFB_VERSION << "\n";
    return 0;
  }
  if (!kCommands.contains(args[1])) {
    err << "vfb: unknown command '" << args[1] << "'\n\n" << kUsage;
    return 1;
  }

  try {
    const std::vector<std::string> full = apply_config(args);

    CLI::App app{"video fusion benchmark toolkit", "vfb"};
    app.require_subcommand(1);
    GenMef gen_mef;
    GenMff gen_mff;
    Screen screen;
    Flow flow;
    Fuse fuse;
    Evaluate evaluate;
    Merge merge;
    const int jobs = default_jobs();
    for (Common* c : {&gen_mef.common, &gen_mff.common, &screen.common, &flow.common, &fuse.common,
                      &evaluate.common, &merge.common}) {
      c->jobs = jobs;
    }
    gen_mef.add(app.add_subcommand("gen-mef", "synthesize multi-exposure pairs"));
    gen_mff.add(app.add_subcommand("gen-mff", "synthesize multi-focus pairs"));
    screen.add(app.add_subcommand("screen", "screen infrared-visible scenes"));
    flow.add(app.add_subcommand("flow", "estimate optical flow"));
    fuse.add(app.add_subcommand("fuse", "baseline fusion"));
    evaluate.add(app.add_subcommand("evaluate", "evaluate a fused sequence"));
    merge.add(app.add_subcommand("merge", "merge evaluate reports"));

    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      if (code != 0) {
        err << "\n" << kUsage;
        return 1;
      }
      return 0;
    }

    const std::string& command = full[1];
    auto run = [&](const auto& cmd) {
      require(cmd.common.jobs >= 1, "--jobs must be at least 1");
      return cmd.run(out, err);
    };
    if (command == "gen-mef") return run(gen_mef);
    if (command == "gen-mff") return run(gen_mff);
    if (command == "screen") return run(screen);
    if (command == "flow") return run(flow);
    if (command == "fuse") return run(fuse);
    if (command == "evaluate") return run(evaluate);
    return run(merge);
  } catch (const IoError& e) {
    err << "vfb " << args[1] << ": " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "vfb " << args[1] << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "vfb " << args[1] << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "vfb " << args[1] << ": " << e.what() << "\n";
    return 1;
  }
}

int dispatch(int argc, char** argv) {
  return dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace vfb::cli
