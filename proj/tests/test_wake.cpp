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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "farmlayout/errors.hpp"
#include "farmlayout/rng.hpp"
#include "support.hpp"

using namespace farmlayout;

namespace {

// Independent long-double evaluation of the Gaussian wake closed form.
long double bastankhah_oracle(long double dx, long double dr, long double ct,
                              long double d, long double k_star) {
  const long double beta = (1.0L + std::sqrt(1.0L - ct)) / (2.0L * std::sqrt(1.0L - ct));
  const long double eps = 0.2L * std::sqrt(beta);
  const long double sigma_over_d = k_star * dx / d + eps;
  long double a = ct / (8.0L * sigma_over_d * sigma_over_d);
  if (a > 0.999L) a = 0.999L;
  const long double sigma = sigma_over_d * d;
  return (1.0L - std::sqrt(1.0L - a)) * std::exp(-dr * dr / (2.0L * sigma * sigma));
}

}  // namespace

TEST_CASE("rotate_to_wind_frame aligns the downstream axis with travel") {
  // North pair: A at origin, B 1000 m to the north.
  const Layout pair = {{0.0, 0.0}, {0.0, 1000.0}};

  SUBCASE("wind from north: separation is purely downstream") {
    const FrameLayout f = rotate_to_wind_frame(pair, 0.0);
    // The northern turbine meets the wind first.
    CHECK(f.downstream_m[0] - f.downstream_m[1] == doctest::Approx(1000.0));
    CHECK(f.crosswind_m[0] - f.crosswind_m[1] == doctest::Approx(0.0));
  }

  SUBCASE("wind from east: separation is purely crosswind") {
    const FrameLayout f = rotate_to_wind_frame(pair, 90.0);
    CHECK(f.downstream_m[0] - f.downstream_m[1] == doctest::Approx(0.0));
    CHECK(std::abs(f.crosswind_m[0] - f.crosswind_m[1]) == doctest::Approx(1000.0));
  }
}

TEST_CASE("rotation preserves pairwise distances") {
  Rng rng(31);
  Layout layout;
  for (int i = 0; i < 10; ++i) {
    layout.push_back({rng.uniform(-5000.0, 5000.0), rng.uniform(-5000.0, 5000.0)});
  }
  for (double dir : {0.0, 37.5, 123.0, 250.25, 359.0}) {
    const FrameLayout f = rotate_to_wind_frame(layout, dir);
    for (std::size_t i = 0; i < layout.size(); ++i) {
      for (std::size_t j = i + 1; j < layout.size(); ++j) {
        const double plan = distance(layout[i], layout[j]);
        const double dx = f.downstream_m[i] - f.downstream_m[j];
        const double dy = f.crosswind_m[i] - f.crosswind_m[j];
        CHECK(std::sqrt(dx * dx + dy * dy) ==
              doctest::Approx(plan).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("jensen_deficit matches the top-hat form") {
  const double ct = 0.8;
  const double d = 240.0;
  const double k = 0.05;
  // Rotor-plane limit.
  CHECK(jensen_deficit(1e-9, 0.0, ct, d, k) ==
        doctest::Approx(1.0 - std::sqrt(1.0 - ct)).epsilon(1e-6));
  // Outside the cone.
  const double dx = 8.0 * d;
  const double radius = 0.5 * d + k * dx;
  CHECK(jensen_deficit(dx, radius + 0.1, ct, d, k) == 0.0);
  CHECK(jensen_deficit(dx, radius - 0.1, ct, d, k) > 0.0);
  // Zero thrust and upstream.
  CHECK(jensen_deficit(dx, 0.0, 0.0, d, k) == 0.0);
  CHECK(jensen_deficit(-10.0, 0.0, ct, d, k) == 0.0);
  CHECK(jensen_deficit(0.0, 0.0, ct, d, k) == 0.0);
  // Known value at 8D on the axis.
  CHECK(jensen_deficit(dx, 0.0, ct, d, k) ==
        doctest::Approx((1.0 - std::sqrt(0.2)) / (1.8 * 1.8)).epsilon(1e-12));
}

TEST_CASE("bastankhah_deficit matches an independent closed-form oracle") {
  const double d = 240.0;
  const double centerline = bastankhah_deficit(8.0 * d, 0.0, 0.8, d, 0.025);
  const long double oracle = bastankhah_oracle(8.0L * 240.0L, 0.0L, 0.8L, 240.0L, 0.025L);
  CHECK(centerline == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-12));
  CHECK(std::abs(centerline - 0.2818) < 1e-3);

  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const double dx = rng.uniform(0.1, 50.0) * d;
    const double dr = rng.uniform(-5.0, 5.0) * d;
    const double ct = rng.uniform(0.0, 0.999);
    const double got = bastankhah_deficit(dx, dr, ct, d, 0.025);
    const double want = static_cast<double>(bastankhah_oracle(dx, dr, ct, d, 0.025L));
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("bastankhah_deficit limits") {
  const double d = 240.0;
  CHECK(bastankhah_deficit(8.0 * d, 0.0, 0.0, d, 0.025) == 0.0);
  CHECK(bastankhah_deficit(-5.0, 0.0, 0.8, d, 0.025) == 0.0);
  CHECK(bastankhah_deficit(8.0 * d, 1e7, 0.8, d, 0.025) < 1e-12);
}

TEST_CASE("deficits stay within [0, 1] under random probing") {
  Rng rng(404);
  const double d = 240.0;
  for (int i = 0; i < 10000; ++i) {
    const double dx = rng.uniform(-10.0, 100.0) * d;
    const double dr = rng.uniform(-20.0, 20.0) * d;
    const double ct = rng.uniform(0.0, 0.999);
    for (double value : {jensen_deficit(dx, dr, ct, d, 0.05),
                         bastankhah_deficit(dx, dr, ct, d, 0.025)}) {
      CHECK(value >= 0.0);
      CHECK(value <= 1.0);
    }
  }
}

TEST_CASE("bastankhah_deficit is monotone where expected") {
  const double d = 240.0;
  const double ct = 0.8;
  // Strictly decreasing in |dr|.
  for (double dx : {2.0 * d, 8.0 * d, 20.0 * d}) {
    double prev = bastankhah_deficit(dx, 0.0, ct, d, 0.025);
    for (double dr = 10.0; dr <= 4.0 * d; dr += 10.0) {
      const double cur = bastankhah_deficit(dx, dr, ct, d, 0.025);
      CHECK(cur < prev);
      prev = cur;
    }
  }
  // Non-increasing in dx once the near-wake clamp is inactive.
  double prev = bastankhah_deficit(2.0 * d, 0.0, ct, d, 0.025);
  for (double dx = 2.0 * d; dx <= 40.0 * d; dx += 0.5 * d) {
    const double cur = bastankhah_deficit(dx, 0.0, ct, d, 0.025);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("combine_deficits does root-sum-square with clamp") {
  const std::vector<double> single = {0.37};
  CHECK(combine_deficits(single) == 0.37);

  const std::vector<double> pythagorean = {0.3, 0.4};
  CHECK(std::abs(combine_deficits(pythagorean) - 0.5) < 1e-12);

  const std::vector<double> saturated = {1.0, 1.0};
  CHECK(combine_deficits(saturated) == 1.0);

  CHECK(combine_deficits(std::vector<double>{}) == 0.0);
}

TEST_CASE("effective_speeds on a single turbine is the free speed") {
  const TurbineSpec spec = reference_turbine_15mw();
  const Layout one = {{0.0, 0.0}};
  WakeModelConfig cfg;
  const auto speeds = effective_speeds(one, spec, 0.0, 9.5, cfg);
  REQUIRE(speeds.size() == 1);
  CHECK(speeds[0] == 9.5);
}

TEST_CASE("crosswind pair at 20 D is effectively unwaked") {
  const TurbineSpec spec = reference_turbine_15mw();
  const double d = spec.rotor_diameter_m;
  const Layout pair = {{0.0, 0.0}, {20.0 * d, 0.0}};
  WakeModelConfig cfg;
  // Wind from north: the pair is spread purely crosswind.
  const auto speeds = effective_speeds(pair, spec, 0.0, 10.0, cfg);
  CHECK(std::abs(speeds[0] - 10.0) < 1e-3);
  CHECK(std::abs(speeds[1] - 10.0) < 1e-3);
}

TEST_CASE("aligned Jensen pair matches the hand-rolled chain") {
  const TurbineSpec spec = reference_turbine_15mw();
  const TurbinePerformance perf = TurbinePerformance::from_spec(spec);
  const double d = spec.rotor_diameter_m;
  const double free_speed = 9.0;

  // Wind from north; B is 8 D south (downstream) of A.
  const Layout pair = {{0.0, 0.0}, {0.0, -8.0 * d}};
  WakeModelConfig cfg;
  cfg.model = WakeModel::kJensen;
  cfg.k_jensen = 0.05;

  const auto speeds = effective_speeds(pair, perf, 0.0, free_speed, cfg);
  CHECK(speeds[0] == free_speed);

  // Chain oracle: Ct looked up at the upstream turbine's own inflow; the
  // upstream runs free so the local scale factor is exactly 1.
  const double ct = perf.thrust_coefficient(free_speed);
  const double deficit =
      (1.0 - std::sqrt(1.0 - ct)) / std::pow(1.0 + 2.0 * 0.05 * 8.0, 2.0);
  CHECK(speeds[1] == doctest::Approx(free_speed * (1.0 - deficit)).epsilon(1e-12));
}

TEST_CASE("ties in downstream coordinate do not interact") {
  const TurbineSpec spec = reference_turbine_15mw();
  const double d = spec.rotor_diameter_m;
  // Wind from west (270): travel is eastward, x is downstream.
  const Layout tied = {{0.0, 0.0}, {0.0, 2.0 * d}, {5.0 * d, d}};
  WakeModelConfig cfg;
  const auto speeds = effective_speeds(tied, spec, 270.0, 10.0, cfg);
  CHECK(speeds[0] == 10.0);
  CHECK(speeds[1] == 10.0);
  CHECK(speeds[2] < 10.0);
}

TEST_CASE("effective_speeds is frame invariant") {
  const TurbineSpec spec = reference_turbine_15mw();
  Rng rng(55);
  Layout layout;
  for (int i = 0; i < 8; ++i) {
    layout.push_back({rng.uniform(0.0, 8000.0), rng.uniform(0.0, 8000.0)});
  }
  WakeModelConfig cfg;
  for (double phi : {30.0, 90.0, 217.0}) {
    const double dir = 335.0;
    const auto base = effective_speeds(layout, spec, dir, 10.0, cfg);
    // Rotating the layout counterclockwise by phi decreases compass
    // directions by phi.
    const Layout rotated = testsupport::rotate_layout(layout, phi);
    double dir2 = std::fmod(dir - phi + 720.0, 360.0);
    const auto moved = effective_speeds(rotated, spec, dir2, 10.0, cfg);
    for (std::size_t i = 0; i < layout.size(); ++i) {
      CHECK(moved[i] == doctest::Approx(base[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("zero thrust leaves every turbine at the free speed") {
  const TurbineSpec spec = reference_turbine_15mw();
  const double d = spec.rotor_diameter_m;
  const Layout line = {{0.0, 0.0}, {0.0, -4.0 * d}, {0.0, -8.0 * d}};
  // 2 m/s is below the smoothed cut-in ramp: Ct = 0 everywhere.
  for (WakeModel model : {WakeModel::kJensen, WakeModel::kBastankhah}) {
    WakeModelConfig cfg;
    cfg.model = model;
    const auto speeds = effective_speeds(line, spec, 0.0, 2.0, cfg);
    for (double s : speeds) CHECK(s == 2.0);
  }
}

TEST_CASE("effective speeds stay within [0, free]") {
  const TurbineSpec spec = reference_turbine_15mw();
  Rng rng(808);
  WakeModelConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    Layout layout;
    for (int i = 0; i < 12; ++i) {
      layout.push_back({rng.uniform(0.0, 3000.0), rng.uniform(0.0, 3000.0)});
    }
    const double free_speed = rng.uniform(0.0, 25.0);
    const double dir = rng.uniform(0.0, 360.0);
    const auto speeds = effective_speeds(layout, spec, dir, free_speed, cfg);
    for (double s : speeds) {
      CHECK(s >= 0.0);
      CHECK(s <= free_speed);
    }
  }
}

TEST_CASE("coincident turbines are rejected") {
  const TurbineSpec spec = reference_turbine_15mw();
  const Layout coincident = {{0.0, 0.0}, {0.0, 0.0}};
  WakeModelConfig cfg;
  CHECK_THROWS_AS(effective_speeds(coincident, spec, 0.0, 10.0, cfg),
                  InvalidLayout);
}

TEST_CASE("wake model names round-trip") {
  CHECK(wake_model_from_string("jensen") == WakeModel::kJensen);
  CHECK(wake_model_from_string("Bastankhah") == WakeModel::kBastankhah);
  CHECK(to_string(WakeModel::kJensen) == "jensen");
  CHECK_THROWS_AS(wake_model_from_string("gauss"), InvalidInput);
}
