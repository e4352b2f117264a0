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

#include "farmlayout/aep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "deficit_math.hpp"
#include "farmlayout/errors.hpp"
#include "farmlayout/threading.hpp"

namespace farmlayout {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Gaussian tails beyond 8 sigma contribute < 1.3e-14 of the amplitude and are
// skipped in the sweep.
constexpr double kGaussianCutoffSigmas = 8.0;

double mwh_to_gwh(double mwh) { return mwh * 1e-3; }

}  // namespace

CapacityPlan capacity_plan(double area_km2, double density_mw_per_km2,
                           double unit_rating_mw) {
  if (area_km2 <= 0.0 || density_mw_per_km2 <= 0.0 || unit_rating_mw <= 0.0) {
    throw InvalidInput("capacity_plan arguments must be positive");
  }
  CapacityPlan plan;
  plan.capacity_mw = area_km2 * density_mw_per_km2;
  plan.n_turbines = static_cast<int>(std::floor(plan.capacity_mw / unit_rating_mw));
  return plan;
}

GridSpec GridSpec::cover(const BoundingBox& box, double cell_size_m,
                         double margin_m) {
  if (cell_size_m <= 0.0) throw InvalidInput("cell_size_m must be positive");
  if (margin_m < 0.0) throw InvalidInput("margin_m must be nonnegative");
  GridSpec grid;
  grid.cell_size_m = cell_size_m;
  grid.origin_x_m = box.min_x - margin_m;
  grid.origin_y_m = box.min_y - margin_m;
  grid.nx = static_cast<int>(std::ceil((box.width() + 2.0 * margin_m) / cell_size_m));
  grid.ny = static_cast<int>(std::ceil((box.height() + 2.0 * margin_m) / cell_size_m));
  return grid;
}

FarmEvaluator::FarmEvaluator(const TurbineSpec& spec, const WindRose& rose,
                             const WakeModelConfig& cfg)
    : turbine_(TurbinePerformance::from_spec(spec)), rose_(rose), cfg_(cfg) {
  rose_.validate();
  dirs_.resize(kRoseBins);
  for (int b = 0; b < kRoseBins; ++b) {
    const double rad = rose_.bins[b].center_deg * kDegToRad;
    // Downstream axis along the direction of travel (from-direction + 180).
    dirs_[b].cos_travel = -std::sin(rad);
    dirs_[b].sin_travel = -std::cos(rad);
  }
}

// Recomputes effective speeds and farm power for ranks >= first_rank of one
// direction, assuming everything before first_rank is up to date. Returns the
// farm power in MW summed over original turbine order.
double FarmEvaluator::sweep_suffix(DirectionState& st, double free_speed,
                                   int first_rank) const {
  const double d_rotor = turbine_.rotor_diameter_m();
  const bool jensen = cfg_.model == WakeModel::kJensen;
  const bool local_basis = cfg_.basis == DeficitBasis::kLocal;

  // Per-turbine cached terms: ct at own inflow, deficit scale, and the
  // ct-dependent model constant (Jensen amplitude or Gaussian epsilon).
  for (int m = first_rank; m < n_; ++m) {
    const int j = st.order[m];
    const double xd_j = st.xd[j];
    const double yc_j = st.yc[j];
    double sumsq = 0.0;
    for (int r = 0; r < m; ++r) {
      const int k = st.order[r];
      const double dx = xd_j - st.xd[k];
      if (dx <= kUpstreamToleranceM) continue;
      const double ct = ct_[k];
      if (ct <= 0.0) continue;
      const double dr = yc_j - st.yc[k];
      double deficit;
      if (jensen) {
        const double wake_radius =
            (0.5 * d_rotor + cfg_.k_jensen * dx) * cfg_.wake_expansion;
        if (std::abs(dr) > wake_radius) continue;
        const double growth = 1.0 + 2.0 * cfg_.k_jensen * dx / d_rotor;
        deficit = model_const_[k] / (growth * growth);
      } else {
        const double sigma_over_d = cfg_.k_star * dx / d_rotor + model_const_[k];
        const double sigma = sigma_over_d * d_rotor * cfg_.wake_expansion;
        const double cutoff = kGaussianCutoffSigmas * sigma;
        if (dr > cutoff || dr < -cutoff) continue;
        deficit = detail::bastankhah_centerline(sigma_over_d, ct) *
                  std::exp(-dr * dr / (2.0 * sigma * sigma));
      }
      if (local_basis) deficit *= scale_[k];
      sumsq += deficit * deficit;
    }
    const double combined = std::min(1.0, std::sqrt(sumsq));
    const double speed = free_speed * (1.0 - combined);
    st.speed[j] = speed;
    const double ct_j = turbine_.thrust_coefficient(speed);
    ct_[j] = ct_j;
    model_const_[j] = jensen ? detail::jensen_amplitude(ct_j)
                             : (ct_j > 0.0 ? detail::bastankhah_epsilon(ct_j) : 0.0);
    scale_[j] = free_speed > 0.0 ? speed / free_speed : 0.0;
    power_[j] = turbine_.power_mw(speed);
  }

  double total = 0.0;
  for (int j = 0; j < n_; ++j) total += power_[j];
  return total;
}

void FarmEvaluator::set_layout(const Layout& layout) {
  const int n = static_cast<int>(layout.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(layout[i], layout[j]) <= kUpstreamToleranceM) {
        throw InvalidLayout("turbines " + std::to_string(i) + " and " +
                            std::to_string(j) + " are coincident");
      }
    }
  }
  layout_ = layout;
  n_ = n;
  ct_.assign(n_, 0.0);
  model_const_.assign(n_, 0.0);
  scale_.assign(n_, 0.0);
  power_.assign(n_, 0.0);
  probe_speed_.assign(n_, 0.0);
  probe_order_.assign(n_, 0);
  probe_ct_.assign(n_, 0.0);
  probe_model_const_.assign(n_, 0.0);
  probe_scale_.assign(n_, 0.0);
  probe_power_.assign(n_, 0.0);

  double aep_mwh = 0.0;
  for (int b = 0; b < kRoseBins; ++b) {
    DirectionState& st = dirs_[b];
    st.xd.assign(n_, 0.0);
    st.yc.assign(n_, 0.0);
    st.order.resize(n_);
    st.speed.assign(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      st.xd[i] = layout_[i].x * st.cos_travel + layout_[i].y * st.sin_travel;
      st.yc[i] = -layout_[i].x * st.sin_travel + layout_[i].y * st.cos_travel;
    }
    std::iota(st.order.begin(), st.order.end(), 0);
    std::sort(st.order.begin(), st.order.end(), [&](int a, int c) {
      if (st.xd[a] != st.xd[c]) return st.xd[a] < st.xd[c];
      return a < c;
    });
    const double free_speed = rose_.bins[b].mean_speed_ms;
    if (free_speed > 0.0 && n_ > 0) {
      st.power_mw = sweep_suffix(st, free_speed, 0);
    } else {
      st.power_mw = 0.0;
      std::fill(ct_.begin(), ct_.end(), 0.0);
      std::fill(model_const_.begin(), model_const_.end(), 0.0);
      std::fill(scale_.begin(), scale_.end(), 0.0);
      std::fill(power_.begin(), power_.end(), 0.0);
    }
    // Keep the per-turbine caches for this direction so probes can reuse the
    // unchanged upstream prefix.
    st.ct = ct_;
    st.model_const = model_const_;
    st.scale = scale_;
    st.power = power_;
    aep_mwh += rose_.bins[b].frequency * st.power_mw * kHoursPerYear;
  }
  aep_gwh_ = mwh_to_gwh(aep_mwh);
}

double FarmEvaluator::gross_aep_gwh() const {
  double mwh = 0.0;
  for (int b = 0; b < kRoseBins; ++b) {
    mwh += rose_.bins[b].frequency * n_ *
           turbine_.power_mw(rose_.bins[b].mean_speed_ms) * kHoursPerYear;
  }
  return mwh_to_gwh(mwh);
}

double FarmEvaluator::aep_with_moved(int index, Point p) const {
  double aep_mwh = 0.0;
  for (int b = 0; b < kRoseBins; ++b) {
    const DirectionState& st = dirs_[b];
    const double free_speed = rose_.bins[b].mean_speed_ms;
    if (free_speed <= 0.0 || n_ == 0) continue;

    const double new_xd = p.x * st.cos_travel + p.y * st.sin_travel;
    const double new_yc = -p.x * st.sin_travel + p.y * st.cos_travel;

    // Rank of the moved turbine before and after; everything upstream of the
    // earlier of the two is untouched.
    int old_rank = 0;
    while (st.order[old_rank] != index) ++old_rank;
    probe_order_ = st.order;
    probe_order_.erase(probe_order_.begin() + old_rank);
    const auto insert_pos = std::lower_bound(
        probe_order_.begin(), probe_order_.end(), index, [&](int a, int value) {
          const double xa = a == index ? new_xd : st.xd[a];
          if (xa != new_xd) return xa < new_xd;
          return a < value;
        });
    const int new_rank = static_cast<int>(insert_pos - probe_order_.begin());
    probe_order_.insert(insert_pos, index);
    const int first_rank = std::min(old_rank, new_rank);

    // Work on scratch copies; baseline stays untouched.
    probe_xd_ = st.xd;
    probe_yc_ = st.yc;
    probe_xd_[index] = new_xd;
    probe_yc_[index] = new_yc;
    probe_speed_ = st.speed;
    probe_ct_ = st.ct;
    probe_model_const_ = st.model_const;
    probe_scale_ = st.scale;
    probe_power_ = st.power;

    const double power = probe_sweep(st, free_speed, first_rank);
    aep_mwh += rose_.bins[b].frequency * power * kHoursPerYear;
  }
  return mwh_to_gwh(aep_mwh);
}

// Same sweep as sweep_suffix but reading/writing the probe scratch arrays.
double FarmEvaluator::probe_sweep(const DirectionState& st, double free_speed,
                                  int first_rank) const {
  const double d_rotor = turbine_.rotor_diameter_m();
  const bool jensen = cfg_.model == WakeModel::kJensen;
  const bool local_basis = cfg_.basis == DeficitBasis::kLocal;

  for (int m = first_rank; m < n_; ++m) {
    const int j = probe_order_[m];
    const double xd_j = probe_xd_[j];
    const double yc_j = probe_yc_[j];
    double sumsq = 0.0;
    for (int r = 0; r < m; ++r) {
      const int k = probe_order_[r];
      const double dx = xd_j - probe_xd_[k];
      if (dx <= kUpstreamToleranceM) continue;
      const double ct = probe_ct_[k];
      if (ct <= 0.0) continue;
      const double dr = yc_j - probe_yc_[k];
      double deficit;
      if (jensen) {
        const double wake_radius =
            (0.5 * d_rotor + cfg_.k_jensen * dx) * cfg_.wake_expansion;
        if (std::abs(dr) > wake_radius) continue;
        const double growth = 1.0 + 2.0 * cfg_.k_jensen * dx / d_rotor;
        deficit = probe_model_const_[k] / (growth * growth);
      } else {
        const double sigma_over_d = cfg_.k_star * dx / d_rotor + probe_model_const_[k];
        const double sigma = sigma_over_d * d_rotor * cfg_.wake_expansion;
        const double cutoff = kGaussianCutoffSigmas * sigma;
        if (dr > cutoff || dr < -cutoff) continue;
        deficit = detail::bastankhah_centerline(sigma_over_d, ct) *
                  std::exp(-dr * dr / (2.0 * sigma * sigma));
      }
      if (local_basis) deficit *= probe_scale_[k];
      sumsq += deficit * deficit;
    }
    const double combined = std::min(1.0, std::sqrt(sumsq));
    const double speed = free_speed * (1.0 - combined);
    probe_speed_[j] = speed;
    const double ct_j = turbine_.thrust_coefficient(speed);
    probe_ct_[j] = ct_j;
    probe_model_const_[j] =
        jensen ? detail::jensen_amplitude(ct_j)
               : (ct_j > 0.0 ? detail::bastankhah_epsilon(ct_j) : 0.0);
    probe_scale_[j] = free_speed > 0.0 ? speed / free_speed : 0.0;
    probe_power_[j] = turbine_.power_mw(speed);
  }

  double total = 0.0;
  for (int j = 0; j < n_; ++j) total += probe_power_[j];
  return total;
}

EvaluationReport FarmEvaluator::report() const {
  EvaluationReport rep;
  rep.n_turbines = n_;
  rep.installed_capacity_mw = n_ * turbine_.rated_power_mw();
  rep.aep_gwh = aep_gwh_;
  rep.gross_aep_gwh = gross_aep_gwh();
  rep.wake_loss =
      rep.gross_aep_gwh > 0.0 ? 1.0 - rep.aep_gwh / rep.gross_aep_gwh : 0.0;
  for (int b = 0; b < kRoseBins; ++b) {
    rep.per_direction_power_mw[b] = dirs_[b].power_mw;
  }
  return rep;
}

double farm_power_mw(const Layout& layout, const TurbinePerformance& turbine,
                     double direction_deg, double speed_ms,
                     const WakeModelConfig& cfg) {
  const std::vector<double> speeds =
      effective_speeds(layout, turbine, direction_deg, speed_ms, cfg);
  double total = 0.0;
  for (double s : speeds) total += turbine.power_mw(s);
  return total;
}

double farm_power_mw(const Layout& layout, const TurbineSpec& spec,
                     double direction_deg, double speed_ms,
                     const WakeModelConfig& cfg) {
  return farm_power_mw(layout, TurbinePerformance::from_spec(spec),
                       direction_deg, speed_ms, cfg);
}

EvaluationReport compute_aep(const Layout& layout, const TurbineSpec& spec,
                             const WindRose& rose, const WakeModelConfig& cfg,
                             int n_threads) {
  rose.validate();
  const int workers = resolve_thread_count(n_threads);
  if (workers <= 1) {
    FarmEvaluator evaluator(spec, rose, cfg);
    evaluator.set_layout(layout);
    return evaluator.report();
  }

  // Directions are independent: evaluate bins concurrently, then reduce in
  // fixed bin order so the sum is bit-stable for any worker count.
  const TurbinePerformance turbine = TurbinePerformance::from_spec(spec);
  std::array<double, kRoseBins> bin_power{};
  parallel_for(kRoseBins, workers, [&](int b) {
    const RoseBin& bin = rose.bins[b];
    bin_power[b] = bin.mean_speed_ms > 0.0 && !layout.empty()
                       ? farm_power_mw(layout, turbine, bin.center_deg,
                                       bin.mean_speed_ms, cfg)
                       : 0.0;
  });

  EvaluationReport rep;
  rep.n_turbines = static_cast<int>(layout.size());
  rep.installed_capacity_mw = rep.n_turbines * spec.rated_power_mw;
  double aep_mwh = 0.0;
  double gross_mwh = 0.0;
  for (int b = 0; b < kRoseBins; ++b) {
    const RoseBin& bin = rose.bins[b];
    rep.per_direction_power_mw[b] = bin_power[b];
    aep_mwh += bin.frequency * bin_power[b] * kHoursPerYear;
    gross_mwh += bin.frequency * rep.n_turbines *
                 turbine.power_mw(bin.mean_speed_ms) * kHoursPerYear;
  }
  rep.aep_gwh = mwh_to_gwh(aep_mwh);
  rep.gross_aep_gwh = mwh_to_gwh(gross_mwh);
  rep.wake_loss =
      rep.gross_aep_gwh > 0.0 ? 1.0 - rep.aep_gwh / rep.gross_aep_gwh : 0.0;
  return rep;
}

FlowFieldGrid flow_field(const Layout& layout, const TurbineSpec& spec,
                         double direction_deg, double speed_ms,
                         const WakeModelConfig& cfg, const GridSpec& grid) {
  if (grid.nx <= 0 || grid.ny <= 0 || grid.cell_size_m <= 0.0) {
    throw InvalidInput("flow-field grid must have positive size");
  }
  const TurbinePerformance turbine = TurbinePerformance::from_spec(spec);
  const int n = static_cast<int>(layout.size());

  // Freeze each turbine's Ct at its effective inflow for this direction.
  std::vector<double> speeds;
  if (n > 0) {
    speeds = effective_speeds(layout, turbine, direction_deg, speed_ms, cfg);
  }
  const FrameLayout frame = rotate_to_wind_frame(layout, direction_deg);
  std::vector<double> ct(n, 0.0);
  std::vector<double> scale(n, 0.0);
  for (int i = 0; i < n; ++i) {
    ct[i] = turbine.thrust_coefficient(speeds[i]);
    scale[i] = cfg.basis == DeficitBasis::kLocal && speed_ms > 0.0
                   ? speeds[i] / speed_ms
                   : 1.0;
  }

  const double rad = direction_deg * kDegToRad;
  const double cos_travel = -std::sin(rad);
  const double sin_travel = -std::cos(rad);
  const double d_rotor = turbine.rotor_diameter_m();

  FlowFieldGrid field;
  field.grid = grid;
  field.speeds_ms.resize(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double px = field.cell_x(ix);
      const double py = field.cell_y(iy);
      const double xd = px * cos_travel + py * sin_travel;
      const double yc = -px * sin_travel + py * cos_travel;
      double sumsq = 0.0;
      for (int k = 0; k < n; ++k) {
        const double dx = xd - frame.downstream_m[k];
        if (dx <= kUpstreamToleranceM) continue;
        const double dr = yc - frame.crosswind_m[k];
        double deficit =
            cfg.model == WakeModel::kJensen
                ? detail::jensen_deficit_impl(dx, dr, ct[k], d_rotor, cfg.k_jensen)
                : detail::bastankhah_deficit_impl(dx, dr, ct[k], d_rotor,
                                                  cfg.k_star);
        deficit *= scale[k];
        sumsq += deficit * deficit;
      }
      const double combined = std::min(1.0, std::sqrt(sumsq));
      field.speeds_ms[static_cast<std::size_t>(iy) * grid.nx + ix] =
          speed_ms * (1.0 - combined);
    }
  }
  return field;
}

}  // namespace farmlayout
