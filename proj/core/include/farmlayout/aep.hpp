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
#include <vector>

#include "farmlayout/geometry.hpp"
#include "farmlayout/turbine.hpp"
#include "farmlayout/wake.hpp"
#include "farmlayout/windrose.hpp"

namespace farmlayout {

inline constexpr double kHoursPerYear = 8760.0;

struct EvaluationReport {
  double aep_gwh = 0.0;
  double gross_aep_gwh = 0.0;
  double wake_loss = 0.0;  // 1 - aep/gross, in [0, 1]
  std::array<double, kRoseBins> per_direction_power_mw{};
  int n_turbines = 0;
  double installed_capacity_mw = 0.0;
};

struct CapacityPlan {
  double capacity_mw = 0.0;
  int n_turbines = 0;
};

/// capacity = area * density; turbine count = floor(capacity / unit rating).
/// Throws InvalidInput on non-positive arguments.
CapacityPlan capacity_plan(double area_km2, double density_mw_per_km2,
                           double unit_rating_mw);

/// Sum of turbine powers at their effective inflow, in MW.
double farm_power_mw(const Layout& layout, const TurbinePerformance& turbine,
                     double direction_deg, double speed_ms,
                     const WakeModelConfig& cfg);
double farm_power_mw(const Layout& layout, const TurbineSpec& spec,
                     double direction_deg, double speed_ms,
                     const WakeModelConfig& cfg);

/// Frequency-weighted AEP over the rose, 8760 h/yr, reported in GWh. Gross
/// AEP ignores wakes. Per-bin powers are accumulated in fixed bin order so
/// results are bit-stable regardless of n_threads.
EvaluationReport compute_aep(const Layout& layout, const TurbineSpec& spec,
                             const WindRose& rose, const WakeModelConfig& cfg,
                             int n_threads = 1);

struct GridSpec {
  double origin_x_m = 0.0;
  double origin_y_m = 0.0;
  double cell_size_m = 0.0;
  int nx = 0;
  int ny = 0;

  /// Grid covering a bounding box plus margin on every side.
  static GridSpec cover(const BoundingBox& box, double cell_size_m,
                        double margin_m);
};

/// Cell-centered horizontal speed field, row-major with x fastest.
struct FlowFieldGrid {
  GridSpec grid;
  std::vector<double> speeds_ms;

  double at(int ix, int iy) const { return speeds_ms[iy * grid.nx + ix]; }
  double cell_x(int ix) const {
    return grid.origin_x_m + (ix + 0.5) * grid.cell_size_m;
  }
  double cell_y(int iy) const {
    return grid.origin_y_m + (iy + 0.5) * grid.cell_size_m;
  }
};

/// Waked speed sampled on a grid for one direction. Each turbine's Ct is
/// frozen at its effective inflow for that direction, then deficits are
/// combined per cell. Throws InvalidInput on an empty grid.
FlowFieldGrid flow_field(const Layout& layout, const TurbineSpec& spec,
                         double direction_deg, double speed_ms,
                         const WakeModelConfig& cfg, const GridSpec& grid);

/// Evaluation engine used by the optimizer: caches the per-direction sweep
/// state for a layout so that single-turbine probes (finite-difference
/// gradients) only recompute the affected downstream suffix. Results are
/// bit-identical to a full re-evaluation.
///
/// Not safe for concurrent use of one instance; construct one per thread.
class FarmEvaluator {
 public:
  FarmEvaluator(const TurbineSpec& spec, const WindRose& rose,
                const WakeModelConfig& cfg);

  /// Rebuilds the cached sweep for a layout. Throws InvalidLayout on
  /// coincident positions.
  void set_layout(const Layout& layout);

  /// Changes the wake-widening factor; the caller must set_layout again
  /// before reading results.
  void set_wake_expansion(double factor) { cfg_.wake_expansion = factor; }

  int n_turbines() const { return n_; }
  const Layout& layout() const { return layout_; }

  double aep_gwh() const { return aep_gwh_; }
  double gross_aep_gwh() const;

  /// AEP of the cached layout with turbine `index` moved to `p`; the cached
  /// layout is left untouched.
  double aep_with_moved(int index, Point p) const;

  EvaluationReport report() const;

  const TurbinePerformance& turbine() const { return turbine_; }
  const WakeModelConfig& config() const { return cfg_; }
  const WindRose& rose() const { return rose_; }

 private:
  struct DirectionState {
    double cos_travel = 0.0;  // plan -> frame rotation for this bin
    double sin_travel = 0.0;
    std::vector<double> xd;     // downstream coordinate by turbine
    std::vector<double> yc;     // crosswind coordinate by turbine
    std::vector<int> order;     // turbine indices sorted by (xd, index)
    std::vector<double> speed;  // effective inflow by turbine
    // Per-turbine terms cached after the sweep so probes can reuse the
    // unchanged upstream prefix.
    std::vector<double> ct;
    std::vector<double> model_const;  // Jensen amplitude or Gaussian epsilon
    std::vector<double> scale;        // deficit scaling under the local basis
    std::vector<double> power;        // MW at the effective inflow
    double power_mw = 0.0;
  };

  double sweep_suffix(DirectionState& st, double free_speed,
                      int first_rank) const;
  double probe_sweep(const DirectionState& st, double free_speed,
                     int first_rank) const;

  TurbinePerformance turbine_;
  WindRose rose_;
  WakeModelConfig cfg_;
  Layout layout_;
  int n_ = 0;
  double aep_gwh_ = 0.0;
  std::vector<DirectionState> dirs_;
  // Sweep working arrays (indexed by turbine), reused across directions.
  mutable std::vector<double> ct_;
  mutable std::vector<double> model_const_;
  mutable std::vector<double> scale_;
  mutable std::vector<double> power_;
  // Scratch for aep_with_moved; mutable so probing stays const.
  mutable std::vector<int> probe_order_;
  mutable std::vector<double> probe_xd_;
  mutable std::vector<double> probe_yc_;
  mutable std::vector<double> probe_speed_;
  mutable std::vector<double> probe_ct_;
  mutable std::vector<double> probe_model_const_;
  mutable std::vector<double> probe_scale_;
  mutable std::vector<double> probe_power_;
};

}  // namespace farmlayout
