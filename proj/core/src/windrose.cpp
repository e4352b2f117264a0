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

#include "farmlayout/windrose.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "farmlayout/errors.hpp"
#include "farmlayout/turbine.hpp"

namespace farmlayout {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double wrap_degrees(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d < 0.0) d += 360.0;
  // fmod can round back up to 360 for tiny negative inputs.
  if (d >= 360.0) d = 0.0;
  return d;
}

}  // namespace

void WindRose::validate() const {
  double sum = 0.0;
  for (int i = 0; i < kRoseBins; ++i) {
    const RoseBin& bin = bins[i];
    const double expected_center = kRoseBinWidthDeg * i + 5.0;
    if (std::abs(bin.center_deg - expected_center) > 1e-9) {
      throw InvalidInput("rose bin " + std::to_string(i) +
                         " center must be " + std::to_string(expected_center));
    }
    if (bin.frequency < 0.0) {
      throw InvalidInput("rose bin " + std::to_string(i) +
                         " frequency is negative");
    }
    if (bin.mean_speed_ms < 0.0) {
      throw InvalidInput("rose bin " + std::to_string(i) +
                         " mean speed is negative");
    }
    sum += bin.frequency;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidInput("rose frequencies sum to " + std::to_string(sum) +
                       ", expected 1");
  }
}

int WindRose::dominant_bin() const {
  int best = 0;
  for (int i = 1; i < kRoseBins; ++i) {
    if (bins[i].frequency > bins[best].frequency) best = i;
  }
  return best;
}

double WindRose::mean_speed_ms() const {
  double sum = 0.0;
  for (const RoseBin& bin : bins) sum += bin.frequency * bin.mean_speed_ms;
  return sum;
}

std::pair<double, double> components_to_met(double u_ms, double v_ms) {
  const double speed = std::hypot(u_ms, v_ms);
  if (speed == 0.0) return {0.0, 0.0};
  const double direction = wrap_degrees(270.0 - std::atan2(v_ms, u_ms) * kRadToDeg);
  return {speed, direction};
}

int direction_bin(double direction_deg) {
  const double wrapped = wrap_degrees(direction_deg);
  int bin = static_cast<int>(wrapped / kRoseBinWidthDeg);
  if (bin >= kRoseBins) bin = kRoseBins - 1;
  return bin;
}

WindRose bin_time_series(const std::vector<WindSample>& samples,
                         double shear_alpha, double z_ref_m, double z_hub_m,
                         BinSpeedMean mean) {
  if (samples.empty()) {
    throw InvalidInput("wind time series is empty");
  }

  std::array<long long, kRoseBins> counts{};
  std::array<double, kRoseBins> speed_sum{};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const WindSample& s = samples[i];
    double speed;
    double direction;
    if (s.speed_ms && s.direction_deg) {
      speed = *s.speed_ms;
      direction = *s.direction_deg;
    } else if (s.u_ms && s.v_ms) {
      std::tie(speed, direction) = components_to_met(*s.u_ms, *s.v_ms);
    } else {
      throw InvalidInput("sample " + std::to_string(i) +
                         " has neither (u, v) nor (speed, direction)");
    }
    if (speed < 0.0) {
      throw InvalidInput("sample " + std::to_string(i) + " has negative speed");
    }
    const double hub_speed = shear_extrapolate(speed, z_ref_m, z_hub_m, shear_alpha);
    const int bin = direction_bin(direction);
    counts[bin] += 1;
    speed_sum[bin] += mean == BinSpeedMean::kCubic
                          ? hub_speed * hub_speed * hub_speed
                          : hub_speed;
  }

  WindRose rose;
  const double total = static_cast<double>(samples.size());
  for (int i = 0; i < kRoseBins; ++i) {
    rose.bins[i].center_deg = kRoseBinWidthDeg * i + 5.0;
    rose.bins[i].frequency = static_cast<double>(counts[i]) / total;
    if (counts[i] == 0) {
      rose.bins[i].mean_speed_ms = 0.0;
    } else {
      const double avg = speed_sum[i] / static_cast<double>(counts[i]);
      rose.bins[i].mean_speed_ms =
          mean == BinSpeedMean::kCubic ? std::cbrt(avg) : avg;
    }
  }
  return rose;
}

WindRose rotate_rose(const WindRose& rose, int bin_steps) {
  WindRose out;
  for (int i = 0; i < kRoseBins; ++i) {
    const int from = ((i - bin_steps) % kRoseBins + kRoseBins) % kRoseBins;
    out.bins[i] = rose.bins[from];
    out.bins[i].center_deg = kRoseBinWidthDeg * i + 5.0;
  }
  return out;
}

}  // namespace farmlayout
