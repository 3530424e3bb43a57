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
#ifndef LOSCHMIDT_RATE_ANALYSIS_HPP
#define LOSCHMIDT_RATE_ANALYSIS_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loschmidt/trace.hpp"

namespace loschmidt {

inline constexpr double kDefaultCurvatureThreshold = 10.0;

/// Recomputes rate = -ln(echo)/size_L. Echo values below -1e-12 are treated as
/// corrupted data and rejected; exact zeros become +inf.
LoschmidtTrace rate_from_echo(LoschmidtTrace trace);

enum class PeakClass { cusp, smooth_max };

std::string to_string(PeakClass c);

/// Local maxima of a rate function.
///
/// sharpness is the discrete curvature |r[i+1] - 2 r[i] + r[i-1]| / dt^2 at
/// the maximum (+inf when the maximum is an infinite sentinel). A maximum is a
/// cusp when its sharpness exceeds threshold x the median curvature of the
/// whole trace.
struct CuspReport {
  std::vector<double> cusp_times;
  std::vector<double> sharpness;
  std::vector<PeakClass> classification;
  double grid_spacing = 0.0;
  double median_curvature = 0.0;
  bool coarse_grid = false;  // fewer than 8 samples between neighbouring maxima

  /// Times of the maxima classified as cusps.
  std::vector<double> cusps() const;
  nlohmann::json to_json() const;
};

CuspReport detect_cusps(const LoschmidtTrace& trace, double curvature_threshold = kDefaultCurvatureThreshold);

struct ScalingScan {
  std::vector<int> sizes;
  std::vector<double> peak_times;      // NaN when no peak exists
  std::vector<double> peak_sharpness;  // 0 when no peak exists

  bool sharpness_increasing() const;
  /// max / min of the sharpness over sizes with a peak.
  double sharpness_spread() const;
  void write_csv(std::ostream& out) const;
};

/// Free-fermion finite-L rate for each size; records the first local maximum
/// of r(t) after t_start and its discrete curvature.
ScalingScan scaling_scan(const QuenchSpec& quench, std::span<const int> sizes);

/// Triangle-inequality ceiling on the rate of a state with spectral weights
/// w_k = |alpha_k|^2 and dominant weight w0:
///   |sum_k w_k e^{-i E_k t}| >= w0 - sum_{k != 0} w_k = a
/// so r(t) <= -2 ln(a) / size_L. Returns +inf when a <= 0.
double echo_floor_rate_bound(std::span<const double> weights, double size_L);

}  // namespace loschmidt

#endif  // LOSCHMIDT_RATE_ANALYSIS_HPP
