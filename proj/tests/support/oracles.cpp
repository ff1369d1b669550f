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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vfb::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

int level(double v) {
  const double s = std::floor(v * 255.0 + 0.5);
  return static_cast<int>(std::min(255.0, std::max(0.0, s)));
}

std::vector<std::vector<double>> gaussian_window(int size, double sd) {
  std::vector<std::vector<double>> w(size, std::vector<double>(size));
  const int r = size / 2;
  double total = 0.0;
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      w[j][i] = std::exp(-((i - r) * (i - r) + (j - r) * (j - r)) / (2.0 * sd * sd));
      total += w[j][i];
    }
  }
  for (auto& row : w) {
    for (double& v : row) v /= total;
  }
  return w;
}

Plane filter2_valid(const Plane& p, const std::vector<std::vector<double>>& w) {
  const int n = static_cast<int>(w.size());
  Plane out(p.width() - n + 1, p.height() - n + 1);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) s += w[j][i] * p.at(x + i, y + j);
      }
      out.at(x, y) = s;
    }
  }
  return out;
}

Plane product(const Plane& a, const Plane& b) {
  Plane out(a.width(), a.height());
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) out.at(x, y) = a.at(x, y) * b.at(x, y);
  }
  return out;
}

struct Edge {
  double g;
  double a;
};

Grid<Edge> sobel_edges(const Plane& p) {
  static const int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
  static const int ky[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
  Grid<Edge> out(p.width(), p.height());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < p.width(); ++x) {
      double sx = 0.0;
      double sy = 0.0;
      for (int j = -1; j <= 1; ++j) {
        for (int i = -1; i <= 1; ++i) {
          const int xx = std::min(p.width() - 1, std::max(0, x + i));
          const int yy = std::min(p.height() - 1, std::max(0, y + j));
          sx += kx[j + 1][i + 1] * p.at(xx, yy);
          sy += ky[j + 1][i + 1] * p.at(xx, yy);
        }
      }
      out.at(x, y) = {std::sqrt(sx * sx + sy * sy), sx == 0.0 ? kPi / 2.0 : std::atan(sy / sx)};
    }
  }
  return out;
}

}  // namespace

double ssim(const Plane& a, const Plane& b) {
  const int n = 11;
  const auto w = gaussian_window(n, 1.5);
  const double c1 = 0.01 * 0.01;
  const double c2 = 0.03 * 0.03;
  double total = 0.0;
  int count = 0;
  for (int y = 0; y + n <= a.height(); ++y) {
    for (int x = 0; x + n <= a.width(); ++x) {
      double ma = 0.0;
      double mb = 0.0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          ma += w[j][i] * a.at(x + i, y + j);
          mb += w[j][i] * b.at(x + i, y + j);
        }
      }
      double va = 0.0;
      double vb = 0.0;
      double cov = 0.0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const double da = a.at(x + i, y + j) - ma;
          const double db = b.at(x + i, y + j) - mb;
          va += w[j][i] * da * da;
          vb += w[j][i] * db * db;
          cov += w[j][i] * da * db;
        }
      }
      total += ((2 * ma * mb + c1) * (2 * cov + c2)) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++count;
    }
  }
  return total / count;
}

double mutual_information(const Plane& a, const Plane& b) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> pa;
  std::map<int, double> pb;
  const double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int la = level(a[i]);
    const int lb = level(b[i]);
    joint[{la, lb}] += 1.0 / n;
    pa[la] += 1.0 / n;
    pb[lb] += 1.0 / n;
  }
  double mi = 0.0;
  for (const auto& [key, p] : joint) mi += p * std::log2(p / (pa[key.first] * pb[key.second]));
  return mi;
}

double entropy(const Plane& p) {
  std::map<int, double> h;
  for (std::size_t i = 0; i < p.size(); ++i) h[level(p[i])] += 1.0;
  double e = 0.0;
  for (const auto& [l, c] : h) {
    const double q = c / static_cast<double>(p.size());
    e -= q * std::log2(q);
  }
  return e;
}

double qabf(const Plane& a, const Plane& b, const Plane& f) {
  const auto ea = sobel_edges(a);
  const auto eb = sobel_edges(b);
  const auto ef = sobel_edges(f);
  auto q = [](Edge s, Edge t) {
    double g = 0.0;
    if (s.g > 0.0 && t.g > 0.0) g = s.g > t.g ? t.g / s.g : s.g / t.g;
    const double al = 1.0 - std::fabs(s.a - t.a) / (kPi / 2.0);
    const double qg = 0.9994 / (1.0 + std::exp(-15.0 * (g - 0.5)));
    const double qa = 0.9879 / (1.0 + std::exp(-22.0 * (al - 0.8)));
    return qg * qa;
  };
  double num = 0.0;
  double den = 0.0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      const Edge sa = ea.at(x, y);
      const Edge sb = eb.at(x, y);
      const Edge sf = ef.at(x, y);
      num += q(sa, sf) * sa.g + q(sb, sf) * sb.g;
      den += sa.g + sb.g;
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

double vif(const Plane& ref_in, const Plane& dist_in) {
  const double sigma_nsq = 2.0;
  const double eps = 1e-10;
  Plane ref(ref_in.width(), ref_in.height());
  Plane dist(ref_in.width(), ref_in.height());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    ref[i] = ref_in[i] * 255.0;
    dist[i] = dist_in[i] * 255.0;
  }
  double num = 0.0;
  double den = 0.0;
  for (int scale = 1; scale <= 4; ++scale) {
    const int n = static_cast<int>(std::pow(2.0, 4 - scale + 1)) + 1;
    const auto w = gaussian_window(n, n / 5.0);
    if (scale > 1) {
      const Plane fr = filter2_valid(ref, w);
      const Plane fd = filter2_valid(dist, w);
      Plane sr((fr.width() + 1) / 2, (fr.height() + 1) / 2);
      Plane sd(sr.width(), sr.height());
      for (int y = 0; y < sr.height(); ++y) {
        for (int x = 0; x < sr.width(); ++x) {
          sr.at(x, y) = fr.at(2 * x, 2 * y);
          sd.at(x, y) = fd.at(2 * x, 2 * y);
        }
      }
      ref = sr;
      dist = sd;
    }
    const Plane mu1 = filter2_valid(ref, w);
    const Plane mu2 = filter2_valid(dist, w);
    const Plane s11 = filter2_valid(product(ref, ref), w);
    const Plane s22 = filter2_valid(product(dist, dist), w);
    const Plane s12 = filter2_valid(product(ref, dist), w);
    for (std::size_t i = 0; i < mu1.size(); ++i) {
      double sigma1_sq = s11[i] - mu1[i] * mu1[i];
      double sigma2_sq = s22[i] - mu2[i] * mu2[i];
      const double sigma12 = s12[i] - mu1[i] * mu2[i];
      if (sigma1_sq < 0) sigma1_sq = 0;
      if (sigma2_sq < 0) sigma2_sq = 0;
      double g = sigma12 / (sigma1_sq + eps);
      double sv_sq = sigma2_sq - g * sigma12;
      if (sigma1_sq < eps) {
        g = 0;
        sv_sq = sigma2_sq;
        sigma1_sq = 0;
      }
      if (sigma2_sq < eps) {
        g = 0;
        sv_sq = 0;
      }
      if (g < 0) {
        sv_sq = sigma2_sq;
        g = 0;
      }
      if (sv_sq <= eps) sv_sq = eps;
      num += std::log10(1.0 + g * g * sigma1_sq / (sv_sq + sigma_nsq));
      den += std::log10(1.0 + sigma1_sq / sigma_nsq);
    }
  }
  return den > 0.0 ? num / den : 1.0;
}

Plane gaussian_blur(const Plane& p, double sd, int radius) {
  Plane out(p.width(), p.height());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < p.width(); ++x) {
      double s = 0.0;
      double wsum = 0.0;
      for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
          if (!p.contains(x + dx, y + dy)) continue;
          const double w = std::exp(-(dx * dx + dy * dy) / (2.0 * sd * sd));
          s += w * p.at(x + dx, y + dy);
          wsum += w;
        }
      }
      out.at(x, y) = s / wsum;
    }
  }
  return out;
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("spearman: bad sizes");
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace vfb::oracle
