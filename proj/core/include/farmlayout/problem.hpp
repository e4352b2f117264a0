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

#include "farmlayout/geometry.hpp"
#include "farmlayout/layoutopt.hpp"
#include "farmlayout/turbine.hpp"
#include "farmlayout/wake.hpp"
#include "farmlayout/windrose.hpp"

namespace farmlayout {

/// A fully resolved optimization/evaluation problem. n_turbines is either
/// given explicitly or derived from the boundary area and capacity density.
struct Problem {
  Boundary boundary;
  TurbineSpec turbine;
  WindRose rose;
  WakeModelConfig wake;
  OptimizationConfig optimizer;
  int n_turbines = 0;
};

/// Loads a problem JSON file:
///   {
///     "boundary": [[x, y], ...],            meters
///     "turbine": "spec.json" | {inline spec} | omitted for the reference
///     "rose": "rose.csv",
///     "wake": {"model": "bastankhah"|"jensen", "k_jensen", "k_star",
///              "deficit_basis": "local"|"freestream"},
///     "optimizer": {"starts", "sequences", "iterations", "seed",
///                   "min_spacing_d", "initial_step_m", "fd_step_m",
///                   "initial_penalty_weight", "penalty_multiplier"},
///     "n_turbines": int | "capacity_density_mw_km2": number
///   }
/// Relative paths resolve against the problem file's directory. Schema
/// violations raise InvalidInput naming the offending field path.
Problem load_problem_file(const std::filesystem::path& path);

}  // namespace farmlayout
