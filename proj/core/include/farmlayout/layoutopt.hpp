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

#include <cstdint>
#include <vector>

#include "farmlayout/aep.hpp"
#include "farmlayout/geometry.hpp"
#include "farmlayout/turbine.hpp"
#include "farmlayout/wake.hpp"
#include "farmlayout/windrose.hpp"

namespace farmlayout {

struct OptimizationConfig {
  int n_starts = 30;
  int n_sequences = 3;
  int n_iterations = 70;  // gradient iterations per sequence
  std::uint64_t seed = 1;
  double min_spacing_d = 2.0;    // rotor diameters
  double initial_step_m = 200.0;
  double fd_step_m = 1.0;
  // Penalty continuation: weight = initial * multiplier^sequence.
  double initial_penalty_weight = 1e-3;  // GWh per m^2 of violation
  double penalty_multiplier = 10.0;
  // Wake-expansion continuation: the first sequence optimizes with wakes
  // widened by this factor, relaxing linearly to the true model (1.0) in the
  // final sequence. Evaluation and reporting always use the true model.
  double initial_wake_expansion = 3.0;

  void validate() const;
};

struct StartResult {
  Layout initial_layout;
  Layout final_layout;
  std::vector<double> objective_history;  // accepted value after each iteration
  std::vector<int> history_sequence;      // sequence index per history entry
  bool feasible = false;
  double aep_gwh = 0.0;  // of the projected final layout
};

struct OptimizedResult {
  Layout best_layout;
  EvaluationReport best_report;
  std::vector<StartResult> starts;
  int best_start = -1;
  double wall_time_s = 0.0;
};

struct ModelComparison {
  double aep_bastankhah_gwh = 0.0;
  double aep_jensen_gwh = 0.0;
  double relative_gap = 0.0;  // |difference| / aep_bastankhah
};

/// One stratified sample with its stratum assignment. in_cell is false only
/// when the sample had to be moved to the nearest interior point after the
/// in-cell retries were exhausted.
struct LhsSample {
  Point position;
  int x_stratum = 0;
  int y_stratum = 0;
  bool in_cell = true;
};

/// Latin hypercube placement over the boundary's bounding box: n strata per
/// axis, randomly paired, one uniform sample per paired cell; samples outside
/// the polygon are redrawn in-cell up to 100 times, then moved to the nearest
/// interior point. Throws InitializationFailure if the result cannot keep
/// points at least 1 m apart.
Layout latin_hypercube_layout(int n, const Boundary& boundary,
                              std::uint64_t seed);
std::vector<LhsSample> latin_hypercube_detail(int n, const Boundary& boundary,
                                              std::uint64_t seed);

/// AEP in GWh minus quadratic penalties: squared meters outside the boundary
/// per turbine plus squared spacing shortfall per pair.
double penalized_objective(const Layout& layout, const TurbineSpec& spec,
                           const WindRose& rose, const WakeModelConfig& wake_cfg,
                           const Boundary& boundary, double min_spacing_m,
                           double penalty_weight);

/// Central finite-difference gradient of penalized_objective with respect to
/// every coordinate, layout order (x0, y0, x1, y1, ...).
std::vector<double> objective_gradient(const Layout& layout,
                                       const TurbineSpec& spec,
                                       const WindRose& rose,
                                       const WakeModelConfig& wake_cfg,
                                       const Boundary& boundary,
                                       double min_spacing_m,
                                       double penalty_weight, double fd_step_m);

/// Multi-start penalized gradient ascent on AEP. Start k uses seed
/// cfg.seed + k; starts are independent and may run on n_threads workers; the
/// best feasible layout (ties broken by lowest start index) is returned.
/// Throws OptimizationFailure if every start ends infeasible.
OptimizedResult optimize(const TurbineSpec& spec, const WindRose& rose,
                         const Boundary& boundary, int n_turbines,
                         const OptimizationConfig& cfg,
                         const WakeModelConfig& wake_cfg, int n_threads = 1);

/// Moves outside turbines to the nearest interior point and resolves spacing
/// shortfalls by iterated pairwise push-apart (up to 1000 passes). Returns
/// false if violations remain.
bool project_to_feasibility(Layout& layout, const Boundary& boundary,
                            double min_spacing_m);

bool is_feasible(const Layout& layout, const Boundary& boundary,
                 double min_spacing_m);

/// AEP under Bastankhah and Jensen with default constants, plus the relative
/// gap between them.
ModelComparison compare_models(const Layout& layout, const TurbineSpec& spec,
                               const WindRose& rose);

/// Fraction of turbines within band_m of the boundary polyline.
double edge_clustering_metric(const Layout& layout, const Boundary& boundary,
                              double band_m);

}  // namespace farmlayout
