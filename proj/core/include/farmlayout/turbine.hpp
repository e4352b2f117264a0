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

#include <string>
#include <vector>

namespace farmlayout {

/// One tabulated point of a performance curve: power in MW or thrust
/// coefficient (dimensionless) versus wind speed in m/s.
struct CurvePoint {
  double speed_ms = 0.0;
  double value = 0.0;
};

/// Shape-preserving monotone cubic interpolant (Fritsch-Carlson slopes)
/// through strictly increasing knots. Evaluation outside the knot range
/// clamps to the end values.
class Curve {
 public:
  Curve() = default;
  explicit Curve(std::vector<CurvePoint> knots);

  double value(double speed_ms) const;
  double derivative(double speed_ms) const;

  const std::vector<CurvePoint>& knots() const { return knots_; }
  double front_speed() const { return knots_.front().speed_ms; }
  double back_speed() const { return knots_.back().speed_ms; }

 private:
  std::vector<CurvePoint> knots_;
  std::vector<double> slopes_;
};

/// Rotor geometry plus tabulated power and thrust curves.
struct TurbineSpec {
  std::string name;
  double rotor_diameter_m = 0.0;
  double hub_height_m = 0.0;
  double rated_power_mw = 0.0;
  double cut_in_ms = 0.0;
  double cut_out_ms = 0.0;
  std::vector<CurvePoint> power_curve;   // MW vs m/s
  std::vector<CurvePoint> thrust_curve;  // Ct vs m/s

  /// Throws InvalidInput if any structural invariant is violated.
  void validate() const;
};

/// Power-law vertical extrapolation: speed * (z_target / z_ref)^alpha.
/// Throws InvalidInput on non-positive heights.
double shear_extrapolate(double speed_ms, double z_ref_m, double z_target_m,
                         double alpha);

/// Refines a curve so its interpolant rises smoothly from zero: value 0 with
/// zero slope at cut_in - blend_width (cut-in taken as the first knot speed),
/// the original values and slope from cut_in + blend_width upward, and a C1
/// cubic transition in between. Knots at or above cut_in + blend_width are
/// kept unchanged.
std::vector<CurvePoint> smooth_curve(const std::vector<CurvePoint>& curve,
                                     double blend_width_ms = 1.0);

/// Evaluation-ready turbine: curves smoothed at cut-in and interpolated.
class TurbinePerformance {
 public:
  static TurbinePerformance from_spec(const TurbineSpec& spec,
                                      double blend_width_ms = 1.0);

  /// Interpolated power in MW, clamped to [0, rated]. Zero above cut-out and
  /// below the smoothed cut-in ramp.
  double power_mw(double speed_ms) const;

  /// Interpolated thrust coefficient, clamped to [0, 0.999]. Zero above
  /// cut-out and below the smoothed cut-in ramp.
  double thrust_coefficient(double speed_ms) const;

  double rotor_diameter_m() const { return spec_.rotor_diameter_m; }
  double rated_power_mw() const { return spec_.rated_power_mw; }
  double cut_out_ms() const { return spec_.cut_out_ms; }
  const TurbineSpec& spec() const { return spec_; }
  const Curve& power_curve() const { return power_; }
  const Curve& thrust_curve() const { return thrust_; }

 private:
  TurbineSpec spec_;
  Curve power_;
  Curve thrust_;
};

/// Convenience wrappers that build the smoothed tables on each call. Prefer
/// TurbinePerformance for repeated evaluation.
double power_at(const TurbineSpec& spec, double speed_ms);
double thrust_coefficient_at(const TurbineSpec& spec, double speed_ms);

/// Generic 15 MW reference turbine: D = 240 m, hub 150 m, cut-in 3 m/s,
/// cut-out 25 m/s, power from a Cp = 0.47 cubic capped at rating, Ct = 0.8
/// below rated tapering cubically above.
TurbineSpec reference_turbine_15mw();

}  // namespace farmlayout
