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

#include "farmlayout/layoutopt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "farmlayout/errors.hpp"
#include "farmlayout/rng.hpp"
#include "farmlayout/threading.hpp"

namespace farmlayout {

namespace {

constexpr int kInCellRetries = 100;
constexpr int kMaxLineSearchHalvings = 8;
constexpr int kMaxProjectionPasses = 1000;
constexpr double kMinPointSeparationM = 1.0;  // floor for initial placements
constexpr double kSpacingSlackM = 1e-6;

double squared(double x) { return x * x; }

// Quadratic penalty on boundary and spacing violations, in (GWh-compatible)
// objective units per m^2.
double penalty_term(const Layout& layout, const Boundary& boundary,
                    double min_spacing_m) {
  double total = 0.0;
  for (const Point& p : layout) {
    if (!point_in_polygon(p, boundary)) {
      total += squared(distance_to_boundary_m(p, boundary));
    }
  }
  const std::size_t n = layout.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(layout[i], layout[j]);
      if (d < min_spacing_m) total += squared(min_spacing_m - d);
    }
  }
  return total;
}

// Penalty delta when one turbine moves: only its own boundary term and its
// pairs change.
double penalty_with_moved(const Layout& layout, const Boundary& boundary,
                          double min_spacing_m, double base_penalty, int index,
                          Point p) {
  double total = base_penalty;
  const Point& old_p = layout[index];
  if (!point_in_polygon(old_p, boundary)) {
    total -= squared(distance_to_boundary_m(old_p, boundary));
  }
  if (!point_in_polygon(p, boundary)) {
    total += squared(distance_to_boundary_m(p, boundary));
  }
  for (std::size_t j = 0; j < layout.size(); ++j) {
    if (static_cast<int>(j) == index) continue;
    const double d_old = distance(old_p, layout[j]);
    if (d_old < min_spacing_m) total -= squared(min_spacing_m - d_old);
    const double d_new = distance(p, layout[j]);
    if (d_new < min_spacing_m) total += squared(min_spacing_m - d_new);
  }
  return total;
}

// Objective wrapper around the evaluation engine: AEP minus weighted
// penalties, with single-turbine probes for cheap finite differences.
class PenalizedProblem {
 public:
  PenalizedProblem(const TurbineSpec& spec, const WindRose& rose,
                   const WakeModelConfig& wake_cfg, const Boundary& boundary,
                   double min_spacing_m)
      : evaluator_(spec, rose, wake_cfg),
        boundary_(boundary),
        min_spacing_m_(min_spacing_m) {}

  void set_weight(double w) { weight_ = w; }
  double weight() const { return weight_; }

  void set_wake_expansion(double factor) {
    evaluator_.set_wake_expansion(factor);
  }

  /// Rebuilds the cached evaluation state for `layout` and returns the
  /// objective there.
  double set_layout(const Layout& layout) {
    evaluator_.set_layout(layout);
    base_penalty_ = penalty_term(layout, boundary_, min_spacing_m_);
    return evaluator_.aep_gwh() - weight_ * base_penalty_;
  }

  double objective_with_moved(int index, Point p) const {
    const double aep = evaluator_.aep_with_moved(index, p);
    const double pen =
        penalty_with_moved(evaluator_.layout(), boundary_, min_spacing_m_,
                           base_penalty_, index, p);
    return aep - weight_ * pen;
  }

  /// Central finite differences around the cached layout.
  std::vector<double> gradient(double fd_step_m) const {
    const Layout& layout = evaluator_.layout();
    const int n = evaluator_.n_turbines();
    std::vector<double> grad(2 * n, 0.0);
    for (int i = 0; i < n; ++i) {
      const Point p = layout[i];
      const double fx_plus = objective_with_moved(i, {p.x + fd_step_m, p.y});
      const double fx_minus = objective_with_moved(i, {p.x - fd_step_m, p.y});
      const double fy_plus = objective_with_moved(i, {p.x, p.y + fd_step_m});
      const double fy_minus = objective_with_moved(i, {p.x, p.y - fd_step_m});
      grad[2 * i] = (fx_plus - fx_minus) / (2.0 * fd_step_m);
      grad[2 * i + 1] = (fy_plus - fy_minus) / (2.0 * fd_step_m);
    }
    return grad;
  }

  const FarmEvaluator& evaluator() const { return evaluator_; }

 private:
  FarmEvaluator evaluator_;
  const Boundary& boundary_;
  double min_spacing_m_;
  double weight_ = 0.0;
  double base_penalty_ = 0.0;
};

Layout offset_layout(const Layout& layout, const std::vector<double>& direction,
                     double scale) {
  Layout out = layout;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].x += scale * direction[2 * i];
    out[i].y += scale * direction[2 * i + 1];
  }
  return out;
}

StartResult run_single_start(const TurbineSpec& spec, const WindRose& rose,
                             const Boundary& boundary, int n_turbines,
                             const OptimizationConfig& cfg,
                             const WakeModelConfig& wake_cfg,
                             std::uint64_t seed) {
  const double min_spacing_m = cfg.min_spacing_d * spec.rotor_diameter_m;

  StartResult result;
  result.initial_layout = latin_hypercube_layout(n_turbines, boundary, seed);
  Layout layout = result.initial_layout;

  PenalizedProblem problem(spec, rose, wake_cfg, boundary, min_spacing_m);
  result.objective_history.reserve(
      static_cast<std::size_t>(cfg.n_sequences) * cfg.n_iterations);

  for (int seq = 0; seq < cfg.n_sequences; ++seq) {
    problem.set_weight(cfg.initial_penalty_weight *
                       std::pow(cfg.penalty_multiplier, seq));
    // Relax the widened wakes linearly toward the true model.
    const double relax =
        cfg.n_sequences > 1
            ? static_cast<double>(cfg.n_sequences - 1 - seq) / (cfg.n_sequences - 1)
            : 0.0;
    problem.set_wake_expansion(1.0 + (cfg.initial_wake_expansion - 1.0) * relax);
    double f = problem.set_layout(layout);
    double step = cfg.initial_step_m;

    for (int iter = 0; iter < cfg.n_iterations; ++iter) {
      const std::vector<double> grad = problem.gradient(cfg.fd_step_m);
      // Scale so the largest single-turbine displacement equals the step.
      double max_move = 0.0;
      for (std::size_t i = 0; i + 1 < grad.size(); i += 2) {
        max_move = std::max(max_move,
                            std::hypot(grad[i], grad[i + 1]));
      }

      bool accepted = false;
      if (max_move > 0.0) {
        double s = step;
        for (int h = 0; h <= kMaxLineSearchHalvings; ++h) {
          const Layout candidate = offset_layout(layout, grad, s / max_move);
          const double fc = problem.set_layout(candidate);
          if (fc > f) {
            layout = candidate;
            f = fc;
            accepted = true;
            step = std::min(2.0 * s, cfg.initial_step_m);
            break;
          }
          s *= 0.5;
        }
        if (!accepted) {
          // Keep position; probe finer steps next iteration.
          problem.set_layout(layout);
          step = std::max(s, 1e-3);
        }
      }
      result.objective_history.push_back(f);
      result.history_sequence.push_back(seq);
    }
  }

  result.final_layout = layout;
  result.feasible = project_to_feasibility(result.final_layout, boundary,
                                           min_spacing_m);
  if (result.feasible) {
    FarmEvaluator evaluator(spec, rose, wake_cfg);
    evaluator.set_layout(result.final_layout);
    result.aep_gwh = evaluator.aep_gwh();
  }
  return result;
}

}  // namespace

void OptimizationConfig::validate() const {
  if (n_starts < 1 || n_sequences < 1 || n_iterations < 1) {
    throw InvalidInput("optimizer counts must be at least 1");
  }
  if (min_spacing_d <= 0.0) throw InvalidInput("min_spacing_d must be positive");
  if (initial_step_m <= 0.0) throw InvalidInput("initial_step_m must be positive");
  if (fd_step_m <= 0.0) throw InvalidInput("fd_step_m must be positive");
  if (initial_penalty_weight <= 0.0 || penalty_multiplier <= 0.0) {
    throw InvalidInput("penalty schedule must be positive");
  }
  if (initial_wake_expansion < 1.0) {
    throw InvalidInput("initial_wake_expansion must be at least 1");
  }
}

std::vector<LhsSample> latin_hypercube_detail(int n, const Boundary& boundary,
                                              std::uint64_t seed) {
  if (n < 1) throw InvalidInput("need at least one point");
  const BoundingBox box = boundary.bounding_box();
  const double cell_w = box.width() / n;
  const double cell_h = box.height() / n;

  Rng rng(seed);
  std::vector<int> y_of_x(n);
  std::iota(y_of_x.begin(), y_of_x.end(), 0);
  rng.shuffle(y_of_x);

  std::vector<LhsSample> samples(n);
  for (int i = 0; i < n; ++i) {
    LhsSample& s = samples[i];
    s.x_stratum = i;
    s.y_stratum = y_of_x[i];
    const double x0 = box.min_x + i * cell_w;
    const double y0 = box.min_y + s.y_stratum * cell_h;
    s.in_cell = false;
    for (int attempt = 0; attempt < kInCellRetries; ++attempt) {
      const Point p{x0 + rng.uniform(0.0, cell_w), y0 + rng.uniform(0.0, cell_h)};
      if (point_in_polygon(p, boundary)) {
        s.position = p;
        s.in_cell = true;
        break;
      }
      s.position = p;  // keep the last draw for the fallback move
    }
    if (!s.in_cell) {
      s.position = nearest_boundary_point(s.position, boundary);
    }
  }

  // The fallback moves can collapse points; a too-thin polygon cannot hold n
  // separated turbines at all.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(samples[i].position, samples[j].position) <
          kMinPointSeparationM) {
        throw InitializationFailure(
            "could not place " + std::to_string(n) +
            " points at least 1 m apart inside the boundary");
      }
    }
  }
  return samples;
}

Layout latin_hypercube_layout(int n, const Boundary& boundary,
                              std::uint64_t seed) {
  const std::vector<LhsSample> samples = latin_hypercube_detail(n, boundary, seed);
  Layout layout;
  layout.reserve(samples.size());
  for (const LhsSample& s : samples) layout.push_back(s.position);
  return layout;
}

double penalized_objective(const Layout& layout, const TurbineSpec& spec,
                           const WindRose& rose, const WakeModelConfig& wake_cfg,
                           const Boundary& boundary, double min_spacing_m,
                           double penalty_weight) {
  const EvaluationReport rep = compute_aep(layout, spec, rose, wake_cfg);
  return rep.aep_gwh -
         penalty_weight * penalty_term(layout, boundary, min_spacing_m);
}

std::vector<double> objective_gradient(const Layout& layout,
                                       const TurbineSpec& spec,
                                       const WindRose& rose,
                                       const WakeModelConfig& wake_cfg,
                                       const Boundary& boundary,
                                       double min_spacing_m,
                                       double penalty_weight, double fd_step_m) {
  PenalizedProblem problem(spec, rose, wake_cfg, boundary, min_spacing_m);
  problem.set_weight(penalty_weight);
  problem.set_layout(layout);
  return problem.gradient(fd_step_m);
}

bool is_feasible(const Layout& layout, const Boundary& boundary,
                 double min_spacing_m) {
  for (const Point& p : layout) {
    if (!point_in_polygon(p, boundary)) return false;
  }
  const std::size_t n = layout.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(layout[i], layout[j]) < min_spacing_m - kSpacingSlackM) {
        return false;
      }
    }
  }
  return true;
}

bool project_to_feasibility(Layout& layout, const Boundary& boundary,
                            double min_spacing_m) {
  const std::size_t n = layout.size();
  for (int pass = 0; pass < kMaxProjectionPasses; ++pass) {
    bool moved = false;
    for (Point& p : layout) {
      if (!point_in_polygon(p, boundary)) {
        p = nearest_boundary_point(p, boundary);
        moved = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = distance(layout[i], layout[j]);
        if (d >= min_spacing_m) continue;
        double ux;
        double uy;
        if (d > 0.0) {
          ux = (layout[j].x - layout[i].x) / d;
          uy = (layout[j].y - layout[i].y) / d;
        } else {
          // Coincident pair: separate along a direction fixed by the indices.
          const double angle =
              2.0 * std::numbers::pi * static_cast<double>(i + j) / (2.0 * n);
          ux = std::cos(angle);
          uy = std::sin(angle);
        }
        const double push = 0.5 * (min_spacing_m - d);
        layout[i].x -= push * ux;
        layout[i].y -= push * uy;
        layout[j].x += push * ux;
        layout[j].y += push * uy;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return is_feasible(layout, boundary, min_spacing_m);
}

OptimizedResult optimize(const TurbineSpec& spec, const WindRose& rose,
                         const Boundary& boundary, int n_turbines,
                         const OptimizationConfig& cfg,
                         const WakeModelConfig& wake_cfg, int n_threads) {
  spec.validate();
  rose.validate();
  cfg.validate();
  if (n_turbines < 1) throw InvalidInput("n_turbines must be at least 1");

  const auto t0 = std::chrono::steady_clock::now();
  OptimizedResult result;
  result.starts.resize(cfg.n_starts);

  parallel_for(cfg.n_starts, n_threads, [&](int k) {
    try {
      result.starts[k] = run_single_start(spec, rose, boundary, n_turbines, cfg,
                                          wake_cfg, cfg.seed + k);
    } catch (const InitializationFailure&) {
      result.starts[k].feasible = false;
    }
  });

  // Deterministic best-of reduction: highest AEP, lowest start index on ties.
  for (int k = 0; k < cfg.n_starts; ++k) {
    const StartResult& start = result.starts[k];
    if (!start.feasible) continue;
    if (result.best_start < 0 ||
        start.aep_gwh > result.starts[result.best_start].aep_gwh) {
      result.best_start = k;
    }
  }
  if (result.best_start < 0) {
    throw OptimizationFailure("no start produced a feasible layout");
  }

  result.best_layout = result.starts[result.best_start].final_layout;
  result.best_report = compute_aep(result.best_layout, spec, rose, wake_cfg);
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

ModelComparison compare_models(const Layout& layout, const TurbineSpec& spec,
                               const WindRose& rose) {
  WakeModelConfig bastankhah;
  bastankhah.model = WakeModel::kBastankhah;
  WakeModelConfig jensen;
  jensen.model = WakeModel::kJensen;

  ModelComparison cmp;
  cmp.aep_bastankhah_gwh = compute_aep(layout, spec, rose, bastankhah).aep_gwh;
  cmp.aep_jensen_gwh = compute_aep(layout, spec, rose, jensen).aep_gwh;
  cmp.relative_gap =
      cmp.aep_bastankhah_gwh > 0.0
          ? std::abs(cmp.aep_bastankhah_gwh - cmp.aep_jensen_gwh) /
                cmp.aep_bastankhah_gwh
          : 0.0;
  return cmp;
}

double edge_clustering_metric(const Layout& layout, const Boundary& boundary,
                              double band_m) {
  if (band_m <= 0.0) throw InvalidInput("band_m must be positive");
  if (layout.empty()) return 0.0;
  int close = 0;
  for (const Point& p : layout) {
    if (distance_to_boundary_m(p, boundary) <= band_m) ++close;
  }
  return static_cast<double>(close) / static_cast<double>(layout.size());
}

}  // namespace farmlayout
