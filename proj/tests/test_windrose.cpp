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

#include "farmlayout/windrose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "farmlayout/errors.hpp"
#include "farmlayout/rng.hpp"
#include "farmlayout/turbine.hpp"
#include "support.hpp"

using namespace farmlayout;

namespace {

WindSample met_sample(double speed, double direction) {
  WindSample s;
  s.timestamp = "2000-01-01T00:00:00Z";
  s.speed_ms = speed;
  s.direction_deg = direction;
  return s;
}

// Independent evaluation of the met-direction convention.
std::pair<double, double> met_oracle(double u, double v) {
  const double speed = std::sqrt(u * u + v * v);
  double dir = 270.0 - std::atan2(v, u) * 180.0 / std::numbers::pi;
  dir = std::fmod(dir, 360.0);
  if (dir < 0.0) dir += 360.0;
  return {speed, dir};
}

}  // namespace

TEST_CASE("components_to_met handles the cardinal directions") {
  auto [s1, d1] = components_to_met(0.0, -1.0);  // blowing toward south
  CHECK(s1 == doctest::Approx(1.0));
  CHECK(d1 == doctest::Approx(0.0));  // from north

  auto [s2, d2] = components_to_met(-1.0, 0.0);  // blowing toward west
  CHECK(s2 == doctest::Approx(1.0));
  CHECK(d2 == doctest::Approx(90.0));  // from east

  auto [s3, d3] = components_to_met(0.0, 0.0);
  CHECK(s3 == 0.0);
  CHECK(d3 == 0.0);
}

TEST_CASE("components_to_met agrees with the convention formula") {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const double u = rng.uniform(-30.0, 30.0);
    const double v = rng.uniform(-30.0, 30.0);
    const auto [speed, dir] = components_to_met(u, v);
    const auto [os, od] = met_oracle(u, v);
    CHECK(speed == doctest::Approx(os).epsilon(1e-12));
    CHECK(dir == doctest::Approx(od).epsilon(1e-9));
    CHECK(dir >= 0.0);
    CHECK(dir < 360.0);
  }
}

TEST_CASE("direction binning is total and exclusive") {
  CHECK(direction_bin(0.0) == 0);
  CHECK(direction_bin(9.999999) == 0);
  CHECK(direction_bin(10.0) == 1);
  CHECK(direction_bin(355.0) == 35);
  CHECK(direction_bin(360.0 - 1e-9) == 35);
  CHECK(direction_bin(360.0) == 0);
  CHECK(direction_bin(-5.0) == 35);
  for (double d = 0.0; d < 360.0; d += 0.25) {
    const int bin = direction_bin(d);
    CHECK(bin >= 0);
    CHECK(bin < 36);
    CHECK(10.0 * bin <= d);
    CHECK(d < 10.0 * (bin + 1));
  }
}

TEST_CASE("bin_time_series concentrates a single direction") {
  std::vector<WindSample> samples(20, met_sample(8.0, 3.0));
  const WindRose rose = bin_time_series(samples, 0.0, 100.0, 100.0);
  rose.validate();
  CHECK(rose.bins[0].frequency == 1.0);
  CHECK(rose.bins[0].mean_speed_ms == doctest::Approx(8.0));
  for (int i = 1; i < kRoseBins; ++i) {
    CHECK(rose.bins[i].frequency == 0.0);
    CHECK(rose.bins[i].mean_speed_ms == 0.0);
  }
}

TEST_CASE("bin mean is the arithmetic average") {
  const std::vector<WindSample> samples = {met_sample(5.0, 42.0),
                                           met_sample(10.0, 44.0)};
  const WindRose rose = bin_time_series(samples, 0.0, 100.0, 100.0);
  CHECK(rose.bins[4].mean_speed_ms == doctest::Approx(7.5));
  CHECK(rose.bins[4].frequency == doctest::Approx(1.0));
}

TEST_CASE("cubic bin mean is the energy-weighted average") {
  const std::vector<WindSample> samples = {met_sample(5.0, 42.0),
                                           met_sample(10.0, 44.0)};
  const WindRose rose =
      bin_time_series(samples, 0.0, 100.0, 100.0, BinSpeedMean::kCubic);
  const double oracle = std::cbrt((5.0 * 5.0 * 5.0 + 10.0 * 10.0 * 10.0) / 2.0);
  CHECK(rose.bins[4].mean_speed_ms == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("speeds are shear-extrapolated to hub height before binning") {
  const std::vector<WindSample> samples = {met_sample(10.0, 100.0)};
  const WindRose rose = bin_time_series(samples, 0.15, 100.0, 150.0);
  CHECK(rose.bins[10].mean_speed_ms ==
        doctest::Approx(shear_extrapolate(10.0, 100.0, 150.0, 0.15)));
}

TEST_CASE("uniform directions give near-uniform frequencies") {
  // Counting oracle over the same synthetic series.
  Rng rng(99);
  std::vector<WindSample> samples;
  samples.reserve(36000);
  std::array<int, kRoseBins> counts{};
  for (int i = 0; i < 36000; ++i) {
    const double dir = rng.uniform(0.0, 360.0);
    samples.push_back(met_sample(rng.uniform(2.0, 20.0), dir));
    counts[direction_bin(dir)] += 1;
  }
  const WindRose rose = bin_time_series(samples, 0.0, 100.0, 100.0);
  rose.validate();
  const double band = 2.0 / std::sqrt(36000.0);
  for (int b = 0; b < kRoseBins; ++b) {
    CHECK(rose.bins[b].frequency == doctest::Approx(counts[b] / 36000.0));
    CHECK(std::abs(rose.bins[b].frequency - 1.0 / 36.0) < band);
  }
}

TEST_CASE("rotating all directions by 10 degrees permutes the bins") {
  Rng rng(123);
  std::vector<WindSample> samples;
  std::vector<WindSample> rotated;
  for (int i = 0; i < 4000; ++i) {
    const double dir = rng.uniform(0.0, 360.0);
    const double speed = rng.uniform(1.0, 25.0);
    samples.push_back(met_sample(speed, dir));
    rotated.push_back(met_sample(speed, std::fmod(dir + 10.0, 360.0)));
  }
  const WindRose a = bin_time_series(samples, 0.0, 100.0, 100.0);
  const WindRose b = bin_time_series(rotated, 0.0, 100.0, 100.0);
  for (int i = 0; i < kRoseBins; ++i) {
    const int j = (i + 1) % kRoseBins;
    CHECK(b.bins[j].frequency == doctest::Approx(a.bins[i].frequency));
    CHECK(b.bins[j].mean_speed_ms ==
          doctest::Approx(a.bins[i].mean_speed_ms).epsilon(1e-9));
  }

  std::vector<double> speeds_a;
  std::vector<double> speeds_b;
  for (int i = 0; i < kRoseBins; ++i) {
    speeds_a.push_back(a.bins[i].mean_speed_ms);
    speeds_b.push_back(b.bins[i].mean_speed_ms);
  }
  std::sort(speeds_a.begin(), speeds_a.end());
  std::sort(speeds_b.begin(), speeds_b.end());
  for (int i = 0; i < kRoseBins; ++i) {
    CHECK(speeds_a[i] == doctest::Approx(speeds_b[i]).epsilon(1e-9));
  }
}

TEST_CASE("binning is invariant under sample reordering") {
  Rng rng(7);
  std::vector<WindSample> samples;
  for (int i = 0; i < 500; ++i) {
    samples.push_back(met_sample(rng.uniform(1.0, 20.0), rng.uniform(0.0, 360.0)));
  }
  std::vector<WindSample> shuffled = samples;
  std::reverse(shuffled.begin(), shuffled.end());
  const WindRose a = bin_time_series(samples, 0.15, 100.0, 150.0);
  const WindRose b = bin_time_series(shuffled, 0.15, 100.0, 150.0);
  for (int i = 0; i < kRoseBins; ++i) {
    CHECK(a.bins[i].frequency == b.bins[i].frequency);
    CHECK(a.bins[i].mean_speed_ms ==
          doctest::Approx(b.bins[i].mean_speed_ms).epsilon(1e-12));
  }
}

TEST_CASE("bin_time_series rejects empty and malformed samples") {
  CHECK_THROWS_AS(bin_time_series({}, 0.15, 100.0, 150.0), InvalidInput);
  WindSample incomplete;
  incomplete.timestamp = "2000-01-01T00:00:00Z";
  incomplete.u_ms = 3.0;  // v missing
  CHECK_THROWS_AS(bin_time_series({incomplete}, 0.15, 100.0, 150.0), InvalidInput);
}

TEST_CASE("WindRose validation catches structural errors") {
  WindRose rose = testsupport::make_synthetic_rose();
  CHECK_NOTHROW(rose.validate());

  WindRose bad_center = rose;
  bad_center.bins[3].center_deg = 34.0;
  CHECK_THROWS_AS(bad_center.validate(), InvalidInput);

  WindRose bad_sum = rose;
  bad_sum.bins[0].frequency += 0.1;
  CHECK_THROWS_AS(bad_sum.validate(), InvalidInput);

  WindRose bad_speed = rose;
  bad_speed.bins[5].mean_speed_ms = -1.0;
  CHECK_THROWS_AS(bad_speed.validate(), InvalidInput);
}

TEST_CASE("rotate_rose shifts frequencies cyclically") {
  const WindRose rose = testsupport::make_synthetic_rose(335.0);
  const WindRose shifted = rotate_rose(rose, 3);
  shifted.validate();
  for (int i = 0; i < kRoseBins; ++i) {
    CHECK(shifted.bins[(i + 3) % kRoseBins].frequency ==
          doctest::Approx(rose.bins[i].frequency));
  }
  CHECK(shifted.dominant_bin() == (rose.dominant_bin() + 3) % kRoseBins);
}
