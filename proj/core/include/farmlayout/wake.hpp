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

#include <span>
#include <vector>

#include "farmlayout/geometry.hpp"
#include "farmlayout/turbine.hpp"

namespace farmlayout {

enum class WakeModel {
  kJensen,      // top-hat deficit, linear wake growth
  kBastankhah,  // self-similar Gaussian deficit
};

/// Whether an upstream wake deficit is scaled by the upstream turbine's own
/// inflow or by the freestream speed.
enum class DeficitBasis {
  kLocal,
  kFreestream,
};

struct WakeModelConfig {
  WakeModel model = WakeModel::kBastankhah;
  double k_jensen = 0.05;   // top-hat expansion rate
  double k_star = 0.025;    // Gaussian growth rate
  DeficitBasis basis = DeficitBasis::kLocal;
  // Smoothing device for optimization: widens the wake footprint (Gaussian
  // spread, top-hat radius) by this factor without raising peak deficits, so
  // distant turbines still feel a gradient. 1 is the physical model; all
  // reporting paths use 1.
  double wake_expansion = 1.0;
};

/// Turbines processed strictly upstream of another only when the downstream
/// gap exceeds this tolerance; ties do not interact.
inline constexpr double kUpstreamToleranceM = 1e-9;

/// Layout expressed in the wind-aligned frame, indexed by original turbine.
/// downstream_m grows along the direction of wind travel.
struct FrameLayout {
  std::vector<double> downstream_m;
  std::vector<double> crosswind_m;
};

/// Rotates plan coordinates into the frame of a wind arriving from
/// direction_deg (meteorological). Pure rotation, distances preserved.
FrameLayout rotate_to_wind_frame(const Layout& layout, double direction_deg);

/// Top-hat deficit fraction at downstream distance dx and crosswind offset dr.
/// Zero outside the expanding wake cone and for dx <= 0.
double jensen_deficit(double dx_m, double dr_m, double ct, double d_rotor_m,
                      double k);

/// Gaussian deficit fraction. Zero for dx <= 0; the near-wake radical is
/// clamped so the value stays real and below 1.
double bastankhah_deficit(double dx_m, double dr_m, double ct, double d_rotor_m,
                          double k_star);

/// Root-sum-square superposition, clamped to 1.
double combine_deficits(std::span<const double> deficits);

/// Per-turbine effective inflow for one direction. Turbines are swept in
/// increasing downstream order; each sees the freestream reduced by the
/// combined deficits of all strictly upstream turbines, whose Ct is evaluated
/// at their own effective inflow. Returns speeds by original index, all in
/// [0, free_speed]. Throws InvalidLayout on coincident positions.
std::vector<double> effective_speeds(const Layout& layout,
                                     const TurbinePerformance& turbine,
                                     double direction_deg, double free_speed_ms,
                                     const WakeModelConfig& cfg);

std::vector<double> effective_speeds(const Layout& layout,
                                     const TurbineSpec& spec,
                                     double direction_deg, double free_speed_ms,
                                     const WakeModelConfig& cfg);

WakeModel wake_model_from_string(const std::string& name);
std::string to_string(WakeModel model);

}  // namespace farmlayout
