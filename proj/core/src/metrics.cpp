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

#include "vfbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "vfbench/errors.hpp"
#include "vfbench/image_ops.hpp"

namespace vfb {

namespace {

void require_same(const Plane& a, const Plane& b, const char* op) {
  if (!a.same_shape(b)) throw StructuralError(std::string(op) + ": inputs differ in size");
}

Plane multiply(const Plane& a, const Plane& b) {
  Plane out(a.width(), a.height());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Plane scaled(const Plane& p, double s) {
  Plane out = p;
  for (double& v : out.values()) v *= s;
  return out;
}

Plane decimate(const Plane& p) {
  Plane out((p.width() + 1) / 2, (p.height() + 1) / 2);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) out.at(x, y) = p.at(2 * x, 2 * y);
  }
  return out;
}

}  // namespace

double ssim(const Plane& a, const Plane& b, const SsimParams& params) {
  require_same(a, b, "ssim");
  require(a.width() >= params.window && a.height() >= params.window, "ssim: image smaller than the window");
  const auto k = gaussian_kernel(params.sigma, params.window / 2);
  const double c1 = std::pow(params.k1 * params.dynamic_range, 2);
  const double c2 = std::pow(params.k2 * params.dynamic_range, 2);
  const Plane mu_a = filter_valid(a, k);
  const Plane mu_b = filter_valid(b, k);
  const Plane e_aa = filter_valid(multiply(a, a), k);
  const Plane e_bb = filter_valid(multiply(b, b), k);
  const Plane e_ab = filter_valid(multiply(a, b), k);
  double sum = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i];
    const double mb = mu_b[i];
    const double va = e_aa[i] - ma * ma;
    const double vb = e_bb[i] - mb * mb;
    const double cov = e_ab[i] - ma * mb;
    sum += ((2.0 * ma * mb + c1) * (2.0 * cov + c2)) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
  }
  return sum / static_cast<double>(mu_a.size());
}

double ssim(const Frame& a, const Frame& b) { return ssim(luma(a), luma(b)); }

double mutual_information(const Plane& a, const Plane& b) {
  require_same(a, b, "mutual_information");
  require(!a.empty(), "mutual_information: empty images");
  const LevelImage la = to_levels(a);
  const LevelImage lb = to_levels(b);
  const double n = static_cast<double>(la.size());
  std::vector<double> joint(256 * 256, 0.0);
  std::vector<double> pa(256, 0.0);
  std::vector<double> pb(256, 0.0);
  for (std::size_t i = 0; i < la.size(); ++i) {
    joint[static_cast<std::size_t>(la[i]) * 256 + lb[i]] += 1.0;
    pa[la[i]] += 1.0;
    pb[lb[i]] += 1.0;
  }
  for (double& p : joint) p /= n;
  for (double& p : pa) p /= n;
  for (double& p : pb) p /= n;
  const double mi = entropy_bits(std::move(pa)) + entropy_bits(std::move(pb)) - entropy_bits(std::move(joint));
  return std::max(0.0, mi);
}

double mutual_information(const Frame& a, const Frame& b) { return mutual_information(luma(a), luma(b)); }

double vif(const Plane& ref_in, const Plane& dist_in) {
  require_same(ref_in, dist_in, "vif");
  constexpr double kNoiseVar = 2.0;
  constexpr double kEps = 1e-10;
  Plane ref = scaled(ref_in, 255.0);
  Plane dist = scaled(dist_in, 255.0);
  double num = 0.0;
  double den = 0.0;
  for (int scale = 1; scale <= 4; ++scale) {
    const int n = (1 << (4 - scale + 1)) + 1;
    const auto win = gaussian_kernel(n / 5.0, n / 2);
    if (scale > 1) {
      require(ref.width() >= n && ref.height() >= n, "vif: image too small for four scales");
      ref = decimate(filter_valid(ref, win));
      dist = decimate(filter_valid(dist, win));
    }
    require(ref.width() >= n && ref.height() >= n, "vif: image too small for four scales");
    const Plane mu1 = filter_valid(ref, win);
    const Plane mu2 = filter_valid(dist, win);
    const Plane e11 = filter_valid(multiply(ref, ref), win);
    const Plane e22 = filter_valid(multiply(dist, dist), win);
    const Plane e12 = filter_valid(multiply(ref, dist), win);
    for (std::size_t i = 0; i < mu1.size(); ++i) {
      double s1 = std::max(0.0, e11[i] - mu1[i] * mu1[i]);
      double s2 = std::max(0.0, e22[i] - mu2[i] * mu2[i]);
      const double s12 = e12[i] - mu1[i] * mu2[i];
      double g = s12 / (s1 + kEps);
      double sv = s2 - g * s12;
      if (s1 < kEps) {
        g = 0.0;
        sv = s2;
        s1 = 0.0;
      }
      if (s2 < kEps) {
        g = 0.0;
        sv = 0.0;
      }
      if (g < 0.0) {
        sv = s2;
        g = 0.0;
      }
      sv = std::max(sv, kEps);
      num += std::log10(1.0 + g * g * s1 / (sv + kNoiseVar));
      den += std::log10(1.0 + s1 / kNoiseVar);
    }
  }
  if (den <= 0.0) return 1.0;
  return num / den;
}

double vif(const Frame& ref, const Frame& dist) { return vif(luma(ref), luma(dist)); }

namespace {

struct EdgeField {
  Plane strength;
  Plane angle;
};

EdgeField edges(const Plane& p) {
  const Gradients g = sobel(p);
  EdgeField e{Plane(p.width(), p.height()), Plane(p.width(), p.height())};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double gx = g.gx[i];
    const double gy = g.gy[i];
    e.strength[i] = std::sqrt(gx * gx + gy * gy);
    e.angle[i] = gx == 0.0 ? std::numbers::pi / 2.0 : std::atan(gy / gx);
  }
  return e;
}

double preservation(double gs, double as, double gf, double af, const QabfParams& q) {
  const double g_ratio = (gs == 0.0 || gf == 0.0) ? 0.0 : std::min(gs, gf) / std::max(gs, gf);
  const double a_ratio = 1.0 - std::abs(as - af) / (std::numbers::pi / 2.0);
  const double qg = q.gamma_g / (1.0 + std::exp(q.kappa_g * (g_ratio - q.sigma_g)));
  const double qa = q.gamma_a / (1.0 + std::exp(q.kappa_a * (a_ratio - q.sigma_a)));
  return qg * qa;
}

}  // namespace

double qabf(const Plane& a, const Plane& b, const Plane& fused, const QabfParams& params) {
  require_same(a, b, "qabf");
  require_same(a, fused, "qabf");
  const EdgeField ea = edges(a);
  const EdgeField eb = edges(b);
  const EdgeField ef = edges(fused);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double wa = std::pow(ea.strength[i], params.weight_exponent);
    const double wb = std::pow(eb.strength[i], params.weight_exponent);
    const double qa = preservation(ea.strength[i], ea.angle[i], ef.strength[i], ef.angle[i], params);
    const double qb = preservation(eb.strength[i], eb.angle[i], ef.strength[i], ef.angle[i], params);
    num += qa * wa + qb * wb;
    den += wa + wb;
  }
  return den > 0.0 ? num / den : 0.0;
}

double qabf(const Frame& a, const Frame& b, const Frame& fused) { return qabf(luma(a), luma(b), luma(fused)); }

std::string_view to_string(SpatialMetric m) {
  switch (m) {
    case SpatialMetric::kSsim: return "ssim";
    case SpatialMetric::kMi: return "mi";
    case SpatialMetric::kQabf: return "qabf";
    case SpatialMetric::kVif: break;
  }
  return "vif";
}

std::string_view to_string(Aggregation a) { return a == Aggregation::kSum ? "sum" : "mean"; }

Aggregation parse_aggregation(std::string_view s) {
  if (s == "sum") return Aggregation::kSum;
  if (s == "mean") return Aggregation::kMean;
  throw ContractError("unknown aggregation '" + std::string(s) + "'");
}

double two_source_aggregate(SpatialMetric metric, const Plane& a, const Plane& b, const Plane& fused,
                            const AggregationConvention& convention) {
  auto combine = [](Aggregation how, double x, double y) {
    return how == Aggregation::kSum ? x + y : 0.5 * (x + y);
  };
  switch (metric) {
    case SpatialMetric::kVif: return combine(convention.vif, vif(a, fused), vif(b, fused));
    case SpatialMetric::kSsim: return combine(convention.ssim, ssim(a, fused), ssim(b, fused));
    case SpatialMetric::kMi:
      return combine(convention.mi, mutual_information(a, fused), mutual_information(b, fused));
    case SpatialMetric::kQabf: return qabf(a, b, fused);
  }
  return 0.0;
}

}  // namespace vfb
