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

#include "farmlayout/turbine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "farmlayout/errors.hpp"

namespace farmlayout {

namespace {

void check_strictly_increasing(const std::vector<CurvePoint>& knots,
                               const char* what) {
  if (knots.size() < 2) {
    throw InvalidInput(std::string(what) + " needs at least 2 points");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].speed_ms > knots[i - 1].speed_ms)) {
      throw InvalidInput(std::string(what) +
                         " speeds must be strictly increasing (index " +
                         std::to_string(i) + ")");
    }
  }
}

// Cubic Hermite on [x0, x1] with values y0, y1 and slopes m0, m1.
double hermite(double x, double x0, double x1, double y0, double y1, double m0,
               double m1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return y0 * (2 * t3 - 3 * t2 + 1) + m0 * h * (t3 - 2 * t2 + t) +
         y1 * (-2 * t3 + 3 * t2) + m1 * h * (t3 - t2);
}

double hermite_derivative(double x, double x0, double x1, double y0, double y1,
                          double m0, double m1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  return (y0 * (6 * t2 - 6 * t) + m0 * h * (3 * t2 - 4 * t + 1) +
          y1 * (-6 * t2 + 6 * t) + m1 * h * (3 * t2 - 2 * t)) /
         h;
}

}  // namespace

Curve::Curve(std::vector<CurvePoint> knots) : knots_(std::move(knots)) {
  check_strictly_increasing(knots_, "curve");
  // Fritsch-Carlson monotone slopes.
  const std::size_t n = knots_.size();
  std::vector<double> h(n - 1);
  std::vector<double> secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = knots_[i + 1].speed_ms - knots_[i].speed_ms;
    secant[i] = (knots_[i + 1].value - knots_[i].value) / h[i];
  }
  slopes_.assign(n, 0.0);
  slopes_[0] = secant[0];
  slopes_[n - 1] = secant[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (secant[i - 1] * secant[i] <= 0.0) {
      slopes_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      slopes_[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
    }
  }
}

double Curve::value(double speed_ms) const {
  if (speed_ms <= knots_.front().speed_ms) return knots_.front().value;
  if (speed_ms >= knots_.back().speed_ms) return knots_.back().value;
  const auto it =
      std::upper_bound(knots_.begin(), knots_.end(), speed_ms,
                       [](double s, const CurvePoint& p) { return s < p.speed_ms; });
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return hermite(speed_ms, knots_[i].speed_ms, knots_[i + 1].speed_ms,
                 knots_[i].value, knots_[i + 1].value, slopes_[i],
                 slopes_[i + 1]);
}

double Curve::derivative(double speed_ms) const {
  if (speed_ms < knots_.front().speed_ms ||
      speed_ms > knots_.back().speed_ms) {
    return 0.0;
  }
  std::size_t i = knots_.size() - 2;
  if (speed_ms < knots_.back().speed_ms) {
    const auto it = std::upper_bound(
        knots_.begin(), knots_.end(), speed_ms,
        [](double s, const CurvePoint& p) { return s < p.speed_ms; });
    i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  }
  return hermite_derivative(speed_ms, knots_[i].speed_ms,
                            knots_[i + 1].speed_ms, knots_[i].value,
                            knots_[i + 1].value, slopes_[i], slopes_[i + 1]);
}

void TurbineSpec::validate() const {
  if (rotor_diameter_m <= 0.0) throw InvalidInput("rotor_diameter_m must be positive");
  if (hub_height_m <= 0.0) throw InvalidInput("hub_height_m must be positive");
  if (rated_power_mw <= 0.0) throw InvalidInput("rated_power_mw must be positive");
  if (!(cut_in_ms < cut_out_ms)) throw InvalidInput("cut_in_ms must be below cut_out_ms");
  check_strictly_increasing(power_curve, "power_curve");
  check_strictly_increasing(thrust_curve, "thrust_curve");
  const auto covers = [&](const std::vector<CurvePoint>& c) {
    return c.front().speed_ms <= cut_in_ms && c.back().speed_ms >= cut_out_ms;
  };
  if (!covers(power_curve)) throw InvalidInput("power_curve must cover [cut_in, cut_out]");
  if (!covers(thrust_curve)) throw InvalidInput("thrust_curve must cover [cut_in, cut_out]");
  double max_power = 0.0;
  for (const CurvePoint& p : power_curve) {
    if (p.value < 0.0 || p.value > rated_power_mw * (1.0 + 1e-9)) {
      throw InvalidInput("power_curve values must lie in [0, rated_power_mw]");
    }
    max_power = std::max(max_power, p.value);
  }
  if (max_power < rated_power_mw * (1.0 - 1e-9)) {
    throw InvalidInput("power_curve never attains rated_power_mw");
  }
  for (const CurvePoint& p : thrust_curve) {
    if (p.value < 0.0 || p.value >= 1.0) {
      throw InvalidInput("thrust_curve values must lie in [0, 1)");
    }
  }
}

double shear_extrapolate(double speed_ms, double z_ref_m, double z_target_m,
                         double alpha) {
  if (z_ref_m <= 0.0 || z_target_m <= 0.0) {
    throw InvalidInput("shear heights must be positive");
  }
  if (speed_ms < 0.0) throw InvalidInput("wind speed must be nonnegative");
  return speed_ms * std::pow(z_target_m / z_ref_m, alpha);
}

std::vector<CurvePoint> smooth_curve(const std::vector<CurvePoint>& curve,
                                     double blend_width_ms) {
  check_strictly_increasing(curve, "curve");
  if (blend_width_ms <= 0.0) {
    throw InvalidInput("blend_width_ms must be positive");
  }
  const Curve raw(curve);
  const double cut_in = curve.front().speed_ms;
  const double lo = std::max(0.0, cut_in - blend_width_ms);
  const double hi = cut_in + blend_width_ms;
  if (hi >= curve.back().speed_ms) {
    throw InvalidInput("blend width spans the whole curve");
  }

  const double y_hi = raw.value(hi);
  const double m_hi = raw.derivative(hi);

  std::vector<CurvePoint> out;
  out.push_back({lo, 0.0});
  constexpr int kBlendSamples = 16;
  for (int i = 1; i < kBlendSamples; ++i) {
    const double x = lo + (hi - lo) * i / kBlendSamples;
    const double y = hermite(x, lo, hi, 0.0, y_hi, 0.0, m_hi);
    out.push_back({x, std::max(0.0, y)});
  }
  out.push_back({hi, y_hi});
  for (const CurvePoint& p : curve) {
    if (p.speed_ms > hi) out.push_back(p);
  }
  return out;
}

TurbinePerformance TurbinePerformance::from_spec(const TurbineSpec& spec,
                                                 double blend_width_ms) {
  spec.validate();
  TurbinePerformance perf;
  perf.spec_ = spec;
  perf.power_ = Curve(smooth_curve(spec.power_curve, blend_width_ms));
  perf.thrust_ = Curve(smooth_curve(spec.thrust_curve, blend_width_ms));
  return perf;
}

double TurbinePerformance::power_mw(double speed_ms) const {
  if (speed_ms > spec_.cut_out_ms) return 0.0;
  return std::clamp(power_.value(speed_ms), 0.0, spec_.rated_power_mw);
}

double TurbinePerformance::thrust_coefficient(double speed_ms) const {
  if (speed_ms > spec_.cut_out_ms) return 0.0;
  return std::clamp(thrust_.value(speed_ms), 0.0, 0.999);
}

double power_at(const TurbineSpec& spec, double speed_ms) {
  return TurbinePerformance::from_spec(spec).power_mw(speed_ms);
}

double thrust_coefficient_at(const TurbineSpec& spec, double speed_ms) {
  return TurbinePerformance::from_spec(spec).thrust_coefficient(speed_ms);
}

TurbineSpec reference_turbine_15mw() {
  TurbineSpec spec;
  spec.name = "reference-15mw";
  spec.rotor_diameter_m = 240.0;
  spec.hub_height_m = 150.0;
  spec.rated_power_mw = 15.0;
  spec.cut_in_ms = 3.0;
  spec.cut_out_ms = 25.0;

  const double radius = spec.rotor_diameter_m / 2.0;
  const double rotor_area = std::numbers::pi * radius * radius;
  constexpr double kAirDensity = 1.225;  // kg/m^3
  constexpr double kCp = 0.47;
  const double coeff_mw = 0.5 * kAirDensity * rotor_area * kCp * 1e-6;
  const double v_rated = std::cbrt(spec.rated_power_mw / coeff_mw);

  for (double v = spec.cut_in_ms; v <= spec.cut_out_ms + 1e-9; v += 0.5) {
    const double power = std::min(spec.rated_power_mw, coeff_mw * v * v * v);
    const double ct =
        v <= v_rated ? 0.8 : 0.8 * (v_rated / v) * (v_rated / v) * (v_rated / v);
    spec.power_curve.push_back({v, power});
    spec.thrust_curve.push_back({v, ct});
  }
  return spec;
}

}  // namespace farmlayout
