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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "farmlayout/aep.hpp"
#include "farmlayout/geometry.hpp"
#include "farmlayout/layoutopt.hpp"
#include "farmlayout/turbine.hpp"
#include "farmlayout/windrose.hpp"

namespace farmlayout {

/// Shortest representation that round-trips the exact double.
std::string format_double(double value);

/// Time-series CSV with header `timestamp,u100,v100` or
/// `timestamp,speed,direction`. Parse errors name the offending line.
std::vector<WindSample> read_time_series_csv(const std::filesystem::path& path);

/// Rose CSV: header `center_deg,frequency,mean_speed_ms`, 36 rows in center
/// order.
void write_wind_rose_csv(const std::filesystem::path& path,
                         const WindRose& rose);
WindRose read_wind_rose_csv(const std::filesystem::path& path);

/// Layout CSV: header `x_m,y_m`.
void write_layout_csv(const std::filesystem::path& path, const Layout& layout);
Layout read_layout_csv(const std::filesystem::path& path);

/// Flow-field CSV: header `x_m,y_m,speed_ms`, row-major with x fastest.
void write_flow_field_csv(const std::filesystem::path& path,
                          const FlowFieldGrid& field);

/// Per-start history CSV: header `start,sequence,iteration,objective`.
void write_history_csv(const std::filesystem::path& path,
                       const OptimizedResult& result);

/// Turbine spec JSON file ({name, rotor_diameter_m, hub_height_m,
/// rated_power_mw, cut_in_ms, cut_out_ms, power_curve, thrust_curve}).
TurbineSpec load_turbine_file(const std::filesystem::path& path);
void save_turbine_file(const std::filesystem::path& path,
                       const TurbineSpec& spec);

std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const std::string& text);

void write_text_file(const std::filesystem::path& path,
                     std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

/// SHA-256 digests as lowercase hex.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace farmlayout
