// Copyright 2026 The farmlayout Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace farmlayout {

inline constexpr int kRoseBins = 36;
inline constexpr double kRoseBinWidthDeg = 10.0;

/// One wind observation. Either (u, v) components or (speed, direction) must
/// be present; direction is the meteorological from-direction in degrees.
struct WindSample {
  std::string timestamp;
  std::optional<double> u_ms;
  std::optional<double> v_ms;
  std::optional<double> speed_ms;
  std::optional<double> direction_deg;
};

struct RoseBin {
  double center_deg = 0.0;
  double frequency = 0.0;
  double mean_speed_ms = 0.0;
};

/// 36 directional bins of 10 degrees, centers at 5, 15, ..., 355. Frequencies
/// are nonnegative and sum to 1.
struct WindRose {
  std::array<RoseBin, kRoseBins> bins;

  /// Throws InvalidInput if the bin structure or frequency sum is off.
  void validate() const;

  /// Index of the most frequent bin (lowest index wins ties).
  int dominant_bin() const;

  /// Frequency-weighted mean of the bin speeds.
  double mean_speed_ms() const;
};

/// How the representative speed of a bin is formed from its samples.
enum class BinSpeedMean {
  kArithmetic,  // plain average
  kCubic,       // (mean of v^3)^(1/3), energy-weighted
};

/// Converts eastward/northward components to (speed, meteorological
/// from-direction in [0, 360)). Calm (0, 0) maps to (0, 0) by convention.
std::pair<double, double> components_to_met(double u_ms, double v_ms);

/// Bins a time series into the 36-direction rose. Speeds are shear
/// extrapolated from z_ref to z_hub first; each sample lands in the half-open
/// bin [10k, 10(k+1)) covering its direction. Empty bins get frequency 0 and
/// mean speed 0. Throws InvalidInput on an empty series or a sample with
/// neither component nor speed/direction form.
WindRose bin_time_series(const std::vector<WindSample>& samples,
                         double shear_alpha, double z_ref_m, double z_hub_m,
                         BinSpeedMean mean = BinSpeedMean::kArithmetic);

/// Bin index for a direction in degrees (any real value, wrapped to [0, 360)).
int direction_bin(double direction_deg);

/// Rose with bins cyclically shifted by the given number of 10-degree steps.
WindRose rotate_rose(const WindRose& rose, int bin_steps);

}  // namespace farmlayout
