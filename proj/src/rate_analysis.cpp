// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "loschmidt/rate_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "loschmidt/error.hpp"
#include "loschmidt/free_fermion.hpp"

namespace loschmidt {
namespace {

constexpr const char* kModule = "rate_analysis";
constexpr double kInf = std::numeric_limits<double>::infinity();

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

double curvature_at(const std::vector<double>& r, std::size_t i, double h) {
  return std::abs(r[i + 1] - 2.0 * r[i] + r[i - 1]) / (h * h);
}

}  // namespace

LoschmidtTrace rate_from_echo(LoschmidtTrace trace) {
  if (!(trace.size_L > 0.0)) throw Error(kModule, "size_L must be positive");
  if (trace.echo.size() != trace.times.size()) throw Error(kModule, "echo and time arrays differ in length");
  trace.rate.resize(trace.echo.size());
  for (std::size_t i = 0; i < trace.echo.size(); ++i) {
    const double e = trace.echo[i];
    if (!(e >= -1e-12)) {
      throw Error(kModule, "echo value " + format_number(e) + " at t = " + format_number(trace.times[i]) +
                               " is negative: corrupted data");
    }
    trace.rate[i] = rate_value(e, trace.size_L);
  }
  return trace;
}

std::string to_string(PeakClass c) { return c == PeakClass::cusp ? "cusp" : "smooth_max"; }

std::vector<double> CuspReport::cusps() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < cusp_times.size(); ++i) {
    if (classification[i] == PeakClass::cusp) out.push_back(cusp_times[i]);
  }
  return out;
}

nlohmann::json CuspReport::to_json() const {
  nlohmann::json j;
  j["cusp_times"] = cusp_times;
  auto sharp = nlohmann::json::array();
  for (double s : sharpness) sharp.push_back(std::isinf(s) ? nlohmann::json("inf") : nlohmann::json(s));
  j["sharpness"] = sharp;
  auto cls = nlohmann::json::array();
  for (auto c : classification) cls.push_back(to_string(c));
  j["classification"] = cls;
  j["grid_spacing"] = grid_spacing;
  j["coarse_grid_warning"] = coarse_grid;
  return j;
}

CuspReport detect_cusps(const LoschmidtTrace& trace, double curvature_threshold) {
  if (trace.rate.size() != trace.times.size()) throw Error(kModule, "rate and time arrays differ in length");
  CuspReport report;
  const std::size_t n = trace.size();
  if (n < 3) return report;
  const double h = (trace.times.back() - trace.times.front()) / double(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(trace.times[i] - trace.times[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw Error(kModule, "detect_cusps needs a uniform time grid");
    }
  }
  report.grid_spacing = h;
  const std::vector<double>& r = trace.rate;

  std::vector<double> curvatures;
  double scale = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (std::isfinite(r[i - 1]) && std::isfinite(r[i]) && std::isfinite(r[i + 1])) {
      curvatures.push_back(curvature_at(r, i, h));
    }
    if (std::isfinite(r[i])) scale = std::max(scale, std::abs(r[i]));
  }
  report.median_curvature = median(curvatures);
  const double noise = 1e-12 * scale;

  std::size_t i = 1;
  while (i + 1 < n) {
    if (std::isinf(r[i])) {
      // A run of infinite sentinels dominates its neighbourhood; report its centre.
      std::size_t j = i;
      while (j + 1 < n && std::isinf(r[j + 1])) ++j;
      const std::size_t centre = (i + j) / 2;
      report.cusp_times.push_back(trace.times[centre]);
      report.sharpness.push_back(kInf);
      report.classification.push_back(PeakClass::cusp);
      i = j + 1;
      continue;
    }
    if (std::isinf(r[i - 1]) || !(r[i] > r[i - 1] + noise)) {
      ++i;
      continue;
    }
    // Rising edge: walk across a flat top, then require a descent.
    std::size_t j = i;
    while (j + 1 < n && std::abs(r[j + 1] - r[i]) <= noise) ++j;
    if (j + 1 < n && r[j + 1] < r[i] - noise) {
      const std::size_t peak = (i + j) / 2;
      const double sharp = curvature_at(r, peak, h);
      report.cusp_times.push_back(trace.times[peak]);
      report.sharpness.push_back(sharp);
      report.classification.push_back(sharp > curvature_threshold * report.median_curvature ? PeakClass::cusp
                                                                                              : PeakClass::smooth_max);
    }
    i = j + 1;
  }

  if (report.cusp_times.size() >= 2) {
    const double mean_gap = (report.cusp_times.back() - report.cusp_times.front()) / double(report.cusp_times.size() - 1);
    report.coarse_grid = mean_gap < 8.0 * h;
  }
  return report;
}

bool ScalingScan::sharpness_increasing() const {
  if (peak_sharpness.empty()) return false;
  for (std::size_t i = 0; i < peak_sharpness.size(); ++i) {
    if (std::isnan(peak_times[i])) return false;
    if (i > 0 && !(peak_sharpness[i] > peak_sharpness[i - 1])) return false;
  }
  return true;
}

double ScalingScan::sharpness_spread() const {
  double lo = kInf, hi = 0.0;
  for (std::size_t i = 0; i < peak_sharpness.size(); ++i) {
    if (std::isnan(peak_times[i])) continue;
    lo = std::min(lo, peak_sharpness[i]);
    hi = std::max(hi, peak_sharpness[i]);
  }
  if (hi == 0.0) return 1.0;
  return hi / lo;
}

void ScalingScan::write_csv(std::ostream& out) const {
  out << "L,peak_time,sharpness\n";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out << sizes[i] << ',' << format_number(peak_times[i]) << ',' << format_number(peak_sharpness[i]) << '\n';
  }
}

ScalingScan scaling_scan(const QuenchSpec& quench, std::span<const int> sizes) {
  ScalingScan scan;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    if (s > 0 && sizes[s] <= sizes[s - 1]) throw Error(kModule, "scan sizes must be strictly increasing");
  }
  for (int size : sizes) {
    QuenchSpec q = quench;
    q.sites = size;
    const LoschmidtTrace trace = free_fermion_quench_trace(q);
    const CuspReport report = detect_cusps(trace);
    scan.sizes.push_back(size);
    if (report.cusp_times.empty()) {
      scan.peak_times.push_back(std::numeric_limits<double>::quiet_NaN());
      scan.peak_sharpness.push_back(0.0);
    } else {
      scan.peak_times.push_back(report.cusp_times.front());
      scan.peak_sharpness.push_back(report.sharpness.front());
    }
  }
  return scan;
}

double echo_floor_rate_bound(std::span<const double> weights, double size_L) {
  if (weights.empty()) throw Error(kModule, "no spectral weights");
  if (!(size_L > 0.0)) throw Error(kModule, "size_L must be positive");
  double total = 0.0, dominant = 0.0;
  for (double w : weights) {
    total += w;
    dominant = std::max(dominant, w);
  }
  const double a = dominant - (total - dominant);
  if (a <= 0.0) return kInf;
  return -2.0 * std::log(a) / size_L;
}

}  // namespace loschmidt
