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

// Internal single-wake closed forms, shared between the public wake API and
// the evaluation engine so both inline the identical math.

#pragma once

#include <cmath>

namespace farmlayout::detail {

inline double jensen_amplitude(double ct) { return 1.0 - std::sqrt(1.0 - ct); }

// expansion > 1 widens the top-hat without changing its depth.
inline double jensen_deficit_expanded(double dx, double dr, double ct,
                                      double d_rotor, double k,
                                      double expansion) {
  if (dx <= 0.0 || ct <= 0.0) return 0.0;
  const double wake_radius = (0.5 * d_rotor + k * dx) * expansion;
  if (std::abs(dr) > wake_radius) return 0.0;
  const double growth = 1.0 + 2.0 * k * dx / d_rotor;
  return jensen_amplitude(ct) / (growth * growth);
}

inline double jensen_deficit_impl(double dx, double dr, double ct, double d_rotor,
                                  double k) {
  return jensen_deficit_expanded(dx, dr, ct, d_rotor, k, 1.0);
}

// Gaussian initial width parameter epsilon = 0.2 sqrt(beta).
inline double bastankhah_epsilon(double ct) {
  const double root = std::sqrt(1.0 - ct);
  const double beta = (1.0 + root) / (2.0 * root);
  return 0.2 * std::sqrt(beta);
}

inline double bastankhah_centerline(double sigma_over_d, double ct) {
  double a = ct / (8.0 * sigma_over_d * sigma_over_d);
  if (a > 0.999) a = 0.999;
  return 1.0 - std::sqrt(1.0 - a);
}

// expansion > 1 widens the Gaussian footprint while keeping the centerline
// amplitude of the unexpanded wake.
inline double bastankhah_deficit_expanded(double dx, double dr, double ct,
                                          double d_rotor, double k_star,
                                          double expansion) {
  if (dx <= 0.0 || ct <= 0.0) return 0.0;
  const double sigma_over_d = k_star * dx / d_rotor + bastankhah_epsilon(ct);
  const double sigma = sigma_over_d * d_rotor * expansion;
  return bastankhah_centerline(sigma_over_d, ct) *
         std::exp(-dr * dr / (2.0 * sigma * sigma));
}

inline double bastankhah_deficit_impl(double dx, double dr, double ct,
                                      double d_rotor, double k_star) {
  return bastankhah_deficit_expanded(dx, dr, ct, d_rotor, k_star, 1.0);
}

}  // namespace farmlayout::detail
