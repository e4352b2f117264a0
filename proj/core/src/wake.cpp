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

#include "farmlayout/wake.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "deficit_math.hpp"
#include "farmlayout/errors.hpp"

namespace farmlayout {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

FrameLayout rotate_to_wind_frame(const Layout& layout, double direction_deg) {
  // Wind from direction_deg travels along bearing direction_deg + 180; the
  // downstream axis follows the travel direction.
  const double rad = direction_deg * kDegToRad;
  const double dx_unit_x = -std::sin(rad);
  const double dx_unit_y = -std::cos(rad);
  // Crosswind axis: downstream rotated +90 degrees.
  const double cr_unit_x = -dx_unit_y;
  const double cr_unit_y = dx_unit_x;

  FrameLayout frame;
  frame.downstream_m.reserve(layout.size());
  frame.crosswind_m.reserve(layout.size());
  for (const Point& p : layout) {
    frame.downstream_m.push_back(p.x * dx_unit_x + p.y * dx_unit_y);
    frame.crosswind_m.push_back(p.x * cr_unit_x + p.y * cr_unit_y);
  }
  return frame;
}

double jensen_deficit(double dx_m, double dr_m, double ct, double d_rotor_m,
                      double k) {
  return detail::jensen_deficit_impl(dx_m, dr_m, ct, d_rotor_m, k);
}

double bastankhah_deficit(double dx_m, double dr_m, double ct, double d_rotor_m,
                          double k_star) {
  return detail::bastankhah_deficit_impl(dx_m, dr_m, ct, d_rotor_m, k_star);
}

double combine_deficits(std::span<const double> deficits) {
  double sumsq = 0.0;
  for (double d : deficits) sumsq += d * d;
  return std::min(1.0, std::sqrt(sumsq));
}

std::vector<double> effective_speeds(const Layout& layout,
                                     const TurbinePerformance& turbine,
                                     double direction_deg, double free_speed_ms,
                                     const WakeModelConfig& cfg) {
  const int n = static_cast<int>(layout.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(layout[i], layout[j]) <= kUpstreamToleranceM) {
        throw InvalidLayout("turbines " + std::to_string(i) + " and " +
                            std::to_string(j) + " are coincident");
      }
    }
  }
  if (free_speed_ms <= 0.0) return std::vector<double>(n, 0.0);

  const FrameLayout frame = rotate_to_wind_frame(layout, direction_deg);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (frame.downstream_m[a] != frame.downstream_m[b]) {
      return frame.downstream_m[a] < frame.downstream_m[b];
    }
    return a < b;
  });

  const double d_rotor = turbine.rotor_diameter_m();
  std::vector<double> speeds(n, 0.0);
  for (int m = 0; m < n; ++m) {
    const int j = order[m];
    double sumsq = 0.0;
    for (int r = 0; r < m; ++r) {
      const int k = order[r];
      const double dx = frame.downstream_m[j] - frame.downstream_m[k];
      if (dx <= kUpstreamToleranceM) continue;
      const double dr = frame.crosswind_m[j] - frame.crosswind_m[k];
      const double ct = turbine.thrust_coefficient(speeds[k]);
      double deficit =
          cfg.model == WakeModel::kJensen
              ? detail::jensen_deficit_expanded(dx, dr, ct, d_rotor,
                                                cfg.k_jensen, cfg.wake_expansion)
              : detail::bastankhah_deficit_expanded(dx, dr, ct, d_rotor,
                                                    cfg.k_star,
                                                    cfg.wake_expansion);
      if (cfg.basis == DeficitBasis::kLocal) {
        deficit *= speeds[k] / free_speed_ms;
      }
      sumsq += deficit * deficit;
    }
    const double combined = std::min(1.0, std::sqrt(sumsq));
    speeds[j] = free_speed_ms * (1.0 - combined);
  }
  return speeds;
}

std::vector<double> effective_speeds(const Layout& layout,
                                     const TurbineSpec& spec,
                                     double direction_deg, double free_speed_ms,
                                     const WakeModelConfig& cfg) {
  return effective_speeds(layout, TurbinePerformance::from_spec(spec),
                          direction_deg, free_speed_ms, cfg);
}

WakeModel wake_model_from_string(const std::string& name) {
  std::string lower;
  lower.reserve(name.size());
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(c)));
  if (lower == "jensen") return WakeModel::kJensen;
  if (lower == "bastankhah") return WakeModel::kBastankhah;
  throw InvalidInput("unknown wake model '" + name +
                     "' (expected jensen or bastankhah)");
}

std::string to_string(WakeModel model) {
  return model == WakeModel::kJensen ? "jensen" : "bastankhah";
}

}  // namespace farmlayout
