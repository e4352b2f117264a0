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

#include "farmlayout/problem.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

#include "farmlayout/aep.hpp"
#include "farmlayout/errors.hpp"
#include "farmlayout/io.hpp"

namespace farmlayout {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw InvalidInput("problem file: " + field + ": " + why);
}

double require_number(const json& obj, const std::string& field) {
  if (!obj.contains(field)) fail(field, "missing");
  if (!obj[field].is_number()) fail(field, "expected a number");
  return obj[field].get<double>();
}

double optional_number(const json& obj, const std::string& field, double fallback) {
  if (!obj.contains(field)) return fallback;
  if (!obj[field].is_number()) fail(field, "expected a number");
  return obj[field].get<double>();
}

int optional_int(const json& obj, const std::string& field, int fallback) {
  if (!obj.contains(field)) return fallback;
  if (!obj[field].is_number_integer()) fail(field, "expected an integer");
  return obj[field].get<int>();
}

Boundary parse_boundary(const json& doc) {
  if (!doc.contains("boundary")) fail("boundary", "missing");
  const json& arr = doc["boundary"];
  if (!arr.is_array() || arr.size() < 3) {
    fail("boundary", "expected an array of at least 3 [x, y] pairs");
  }
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& v = arr[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      fail("boundary[" + std::to_string(i) + "]", "expected [x, y]");
    }
    vertices.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  try {
    return Boundary(std::move(vertices));
  } catch (const InvalidInput& e) {
    fail("boundary", e.what());
  }
}

TurbineSpec parse_turbine(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.contains("turbine")) return reference_turbine_15mw();
  const json& t = doc["turbine"];
  if (t.is_string()) {
    std::filesystem::path p = t.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_turbine_file(p);
  }
  if (!t.is_object()) fail("turbine", "expected a file path or an object");

  TurbineSpec spec;
  try {
    spec.name = t.value("name", std::string("unnamed"));
    spec.rotor_diameter_m = require_number(t, "rotor_diameter_m");
    spec.hub_height_m = require_number(t, "hub_height_m");
    spec.rated_power_mw = require_number(t, "rated_power_mw");
    spec.cut_in_ms = require_number(t, "cut_in_ms");
    spec.cut_out_ms = require_number(t, "cut_out_ms");
    for (const char* field : {"power_curve", "thrust_curve"}) {
      if (!t.contains(field)) fail(std::string("turbine.") + field, "missing");
      const json& arr = t[field];
      if (!arr.is_array()) fail(std::string("turbine.") + field, "expected an array");
      std::vector<CurvePoint>& curve =
          std::string(field) == "power_curve" ? spec.power_curve : spec.thrust_curve;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& row = arr[i];
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
            !row[1].is_number()) {
          fail("turbine." + std::string(field) + "[" + std::to_string(i) + "]",
               "expected [speed, value]");
        }
        curve.push_back({row[0].get<double>(), row[1].get<double>()});
      }
    }
    spec.validate();
  } catch (const InvalidInput&) {
    throw;
  } catch (const json::exception& e) {
    fail("turbine", e.what());
  }
  return spec;
}

WakeModelConfig parse_wake(const json& doc) {
  WakeModelConfig cfg;
  if (!doc.contains("wake")) return cfg;
  const json& w = doc["wake"];
  if (!w.is_object()) fail("wake", "expected an object");
  if (w.contains("model")) {
    if (!w["model"].is_string()) fail("wake.model", "expected a string");
    cfg.model = wake_model_from_string(w["model"].get<std::string>());
  }
  cfg.k_jensen = optional_number(w, "k_jensen", cfg.k_jensen);
  cfg.k_star = optional_number(w, "k_star", cfg.k_star);
  if (cfg.k_jensen <= 0.0) fail("wake.k_jensen", "must be positive");
  if (cfg.k_star <= 0.0) fail("wake.k_star", "must be positive");
  if (w.contains("deficit_basis")) {
    if (!w["deficit_basis"].is_string()) fail("wake.deficit_basis", "expected a string");
    const std::string basis = w["deficit_basis"].get<std::string>();
    if (basis == "local") {
      cfg.basis = DeficitBasis::kLocal;
    } else if (basis == "freestream") {
      cfg.basis = DeficitBasis::kFreestream;
    } else {
      fail("wake.deficit_basis", "expected 'local' or 'freestream'");
    }
  }
  return cfg;
}

OptimizationConfig parse_optimizer(const json& doc) {
  OptimizationConfig cfg;
  if (!doc.contains("optimizer")) return cfg;
  const json& o = doc["optimizer"];
  if (!o.is_object()) fail("optimizer", "expected an object");
  cfg.n_starts = optional_int(o, "starts", cfg.n_starts);
  cfg.n_sequences = optional_int(o, "sequences", cfg.n_sequences);
  cfg.n_iterations = optional_int(o, "iterations", cfg.n_iterations);
  if (o.contains("seed")) {
    if (!o["seed"].is_number_integer()) fail("optimizer.seed", "expected an integer");
    cfg.seed = o["seed"].get<std::uint64_t>();
  }
  cfg.min_spacing_d = optional_number(o, "min_spacing_d", cfg.min_spacing_d);
  cfg.initial_step_m = optional_number(o, "initial_step_m", cfg.initial_step_m);
  cfg.fd_step_m = optional_number(o, "fd_step_m", cfg.fd_step_m);
  cfg.initial_penalty_weight =
      optional_number(o, "initial_penalty_weight", cfg.initial_penalty_weight);
  cfg.penalty_multiplier =
      optional_number(o, "penalty_multiplier", cfg.penalty_multiplier);
  cfg.initial_wake_expansion =
      optional_number(o, "initial_wake_expansion", cfg.initial_wake_expansion);
  try {
    cfg.validate();
  } catch (const InvalidInput& e) {
    fail("optimizer", e.what());
  }
  return cfg;
}

}  // namespace

Problem load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("problem file: expected a JSON object");

  const std::filesystem::path base_dir = path.parent_path();

  Boundary boundary = parse_boundary(doc);
  TurbineSpec turbine = parse_turbine(doc, base_dir);

  if (!doc.contains("rose")) fail("rose", "missing");
  if (!doc["rose"].is_string()) fail("rose", "expected a CSV file path");
  std::filesystem::path rose_path = doc["rose"].get<std::string>();
  if (rose_path.is_relative()) rose_path = base_dir / rose_path;
  WindRose rose = read_wind_rose_csv(rose_path);

  WakeModelConfig wake = parse_wake(doc);
  OptimizationConfig optimizer = parse_optimizer(doc);

  int n_turbines;
  if (doc.contains("n_turbines")) {
    if (!doc["n_turbines"].is_number_integer()) fail("n_turbines", "expected an integer");
    n_turbines = doc["n_turbines"].get<int>();
    if (n_turbines < 1) fail("n_turbines", "must be at least 1");
  } else {
    const double density =
        optional_number(doc, "capacity_density_mw_km2", 3.5);
    if (density <= 0.0) fail("capacity_density_mw_km2", "must be positive");
    const CapacityPlan plan = capacity_plan(polygon_area_km2(boundary), density,
                                            turbine.rated_power_mw);
    if (plan.n_turbines < 1) {
      fail("capacity_density_mw_km2",
           "area too small for one turbine at this density");
    }
    n_turbines = plan.n_turbines;
  }

  return Problem{std::move(boundary), std::move(turbine), rose, wake, optimizer,
                 n_turbines};
}

}  // namespace farmlayout
