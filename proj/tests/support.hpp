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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>

#include "farmlayout/geometry.hpp"
#include "farmlayout/windrose.hpp"

namespace testsupport {

inline constexpr double kPi = std::numbers::pi;

/// Smooth 36-bin rose peaked at dominant_deg with speeds between 7 and
/// 11 m/s, highest along the dominant direction.
inline farmlayout::WindRose make_synthetic_rose(double dominant_deg = 335.0,
                                                double kappa = 2.0) {
  farmlayout::WindRose rose;
  double sum = 0.0;
  for (int i = 0; i < farmlayout::kRoseBins; ++i) {
    const double center = 10.0 * i + 5.0;
    const double rel = (center - dominant_deg) * kPi / 180.0;
    rose.bins[i].center_deg = center;
    rose.bins[i].frequency = std::exp(kappa * std::cos(rel));
    rose.bins[i].mean_speed_ms = 9.0 + 2.0 * std::cos(rel);
    sum += rose.bins[i].frequency;
  }
  for (auto& bin : rose.bins) bin.frequency /= sum;
  return rose;
}

/// Rose putting all weight on the bin containing direction_deg.
inline farmlayout::WindRose make_single_bin_rose(double direction_deg,
                                                 double speed_ms) {
  farmlayout::WindRose rose;
  const int target = farmlayout::direction_bin(direction_deg);
  for (int i = 0; i < farmlayout::kRoseBins; ++i) {
    rose.bins[i].center_deg = 10.0 * i + 5.0;
    rose.bins[i].frequency = i == target ? 1.0 : 0.0;
    rose.bins[i].mean_speed_ms = i == target ? speed_ms : 0.0;
  }
  return rose;
}

/// Counterclockwise rotation of plan coordinates by degrees.
inline farmlayout::Layout rotate_layout(const farmlayout::Layout& layout,
                                        double degrees) {
  const double rad = degrees * kPi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  farmlayout::Layout out;
  out.reserve(layout.size());
  for (const farmlayout::Point& p : layout) {
    out.push_back({p.x * c - p.y * s, p.x * s + p.y * c});
  }
  return out;
}

/// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    for (int i = 0; i < 10000; ++i) {
      path_ = base / ("farmlayout_test_" + std::to_string(std::rand()) + "_" +
                      std::to_string(i));
      if (std::filesystem::create_directory(path_)) return;
    }
    std::abort();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

/// Runs a shell command, capturing combined output.
inline CommandResult run_command(const std::string& command) {
  const std::filesystem::path capture =
      std::filesystem::temp_directory_path() /
      ("farmlayout_cmd_" + std::to_string(std::rand()) + ".txt");
  const std::string full = command + " > " + capture.string() + " 2>&1";
  const int raw = std::system(full.c_str());

  CommandResult result;
  result.exit_code = raw < 0 ? raw : WEXITSTATUS(raw);
  if (FILE* f = std::fopen(capture.string().c_str(), "rb")) {
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) {
      result.output.append(buf, got);
    }
    std::fclose(f);
  }
  std::filesystem::remove(capture);
  return result;
}

#ifdef FARMLAYOUT_CLI_BIN
inline std::string cli_path() {
  if (const char* env = std::getenv("FARMLAYOUT_CLI_BIN")) return env;
  return FARMLAYOUT_CLI_BIN;
}
#endif

}  // namespace testsupport
