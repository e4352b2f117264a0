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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "farmlayout/aep.hpp"
#include "farmlayout/errors.hpp"
#include "farmlayout/io.hpp"
#include "farmlayout/layoutopt.hpp"
#include "farmlayout/problem.hpp"
#include "farmlayout/threading.hpp"
#include "farmlayout/version.hpp"
#include "farmlayout/windrose.hpp"
#include "manifest.hpp"
#include "render.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 2 input error, 3 optimization failure.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitOptimizationFailure = 3;

class WallTimer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

fs::path prepare_out_dir(const std::string& out) {
  fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
  fs::create_directories(dir);
  return dir;
}

struct WindroseArgs {
  std::string input;
  std::string out;
  double ref_height = 100.0;
  double hub_height = 150.0;
  double alpha = 0.15;
  std::string speed_mean = "arithmetic";
};

int run_windrose(const WindroseArgs& args) {
  WallTimer timer;
  const fs::path out_dir = prepare_out_dir(args.out);

  const auto samples = farmlayout::read_time_series_csv(args.input);
  const auto mean = args.speed_mean == "cubic"
                        ? farmlayout::BinSpeedMean::kCubic
                        : farmlayout::BinSpeedMean::kArithmetic;
  const farmlayout::WindRose rose = farmlayout::bin_time_series(
      samples, args.alpha, args.ref_height, args.hub_height, mean);
  rose.validate();

  farmlayout::write_wind_rose_csv(out_dir / "rose.csv", rose);

  const int dominant = rose.dominant_bin();
  json summary;
  summary["n_samples"] = samples.size();
  summary["dominant_bin_center_deg"] = rose.bins[dominant].center_deg;
  summary["dominant_bin_frequency"] = rose.bins[dominant].frequency;
  summary["dominant_bin_mean_speed_ms"] = rose.bins[dominant].mean_speed_ms;
  summary["mean_speed_ms"] = rose.mean_speed_ms();
  farmlayout::write_text_file(out_dir / "rose_summary.json", summary.dump(2) + "\n");

  json config{{"ref_height_m", args.ref_height},
              {"hub_height_m", args.hub_height},
              {"alpha", args.alpha},
              {"speed_mean", args.speed_mean}};
  farmlayout::cli::write_manifest(out_dir, "windrose", {args.input}, config,
                                  timer.seconds());

  std::printf("samples: %zu\n", samples.size());
  std::printf("dominant_bin_center_deg: %g\n", rose.bins[dominant].center_deg);
  std::printf("dominant_bin_frequency: %.6f\n", rose.bins[dominant].frequency);
  std::printf("mean_speed_ms: %.4f\n", rose.mean_speed_ms());
  std::printf("wrote %s\n", (out_dir / "rose.csv").c_str());
  return kExitOk;
}

struct CapacityArgs {
  double area_km2 = 0.0;
  double density = 3.5;
  double rating = 15.0;
  std::string out;
};

int run_capacity(const CapacityArgs& args) {
  WallTimer timer;
  const farmlayout::CapacityPlan plan =
      farmlayout::capacity_plan(args.area_km2, args.density, args.rating);
  const double used = plan.n_turbines * args.rating;
  const double residual = plan.capacity_mw - used;

  std::printf("capacity_mw: %.2f\n", plan.capacity_mw);
  std::printf("n_turbines: %d\n", plan.n_turbines);
  std::printf("used_capacity_mw: %.2f\n", used);
  std::printf("residual_capacity_mw: %.2f\n", residual);
  std::printf("residual_area_km2: %.4f\n", residual / args.density);

  if (!args.out.empty()) {
    const fs::path out_dir = prepare_out_dir(args.out);
    json doc{{"capacity_mw", plan.capacity_mw},
             {"n_turbines", plan.n_turbines},
             {"used_capacity_mw", used},
             {"residual_capacity_mw", residual},
             {"residual_area_km2", residual / args.density}};
    farmlayout::write_text_file(out_dir / "capacity.json", doc.dump(2) + "\n");
    json config{{"area_km2", args.area_km2},
                {"density_mw_km2", args.density},
                {"rating_mw", args.rating}};
    farmlayout::cli::write_manifest(out_dir, "capacity", {}, config,
                                    timer.seconds());
  }
  return kExitOk;
}

json wake_config_json(const farmlayout::WakeModelConfig& cfg) {
  return json{{"model", farmlayout::to_string(cfg.model)},
              {"k_jensen", cfg.k_jensen},
              {"k_star", cfg.k_star},
              {"deficit_basis",
               cfg.basis == farmlayout::DeficitBasis::kLocal ? "local"
                                                             : "freestream"}};
}

struct EvaluateArgs {
  std::string problem;
  std::string layout;
  std::string out;
  std::string model;
  int threads = 0;
  bool per_direction_csv = false;
};

int run_evaluate(const EvaluateArgs& args) {
  WallTimer timer;
  const fs::path out_dir = prepare_out_dir(args.out);

  farmlayout::Problem problem = farmlayout::load_problem_file(args.problem);
  if (!args.model.empty()) {
    problem.wake.model = farmlayout::wake_model_from_string(args.model);
  }
  const farmlayout::Layout layout = farmlayout::read_layout_csv(args.layout);

  const farmlayout::EvaluationReport report = farmlayout::compute_aep(
      layout, problem.turbine, problem.rose, problem.wake, args.threads);
  farmlayout::write_text_file(out_dir / "report.json",
                              farmlayout::report_to_json(report));

  if (args.per_direction_csv) {
    std::string csv = "center_deg,power_mw\n";
    for (int b = 0; b < farmlayout::kRoseBins; ++b) {
      csv += farmlayout::format_double(problem.rose.bins[b].center_deg) + "," +
             farmlayout::format_double(report.per_direction_power_mw[b]) + "\n";
    }
    farmlayout::write_text_file(out_dir / "per_direction_power.csv", csv);
  }

  json config{{"wake", wake_config_json(problem.wake)},
              {"threads", args.threads}};
  farmlayout::cli::write_manifest(out_dir, "evaluate",
                                  {args.problem, args.layout}, config,
                                  timer.seconds());

  std::printf("aep_gwh: %.4f\n", report.aep_gwh);
  std::printf("gross_aep_gwh: %.4f\n", report.gross_aep_gwh);
  std::printf("wake_loss: %.6f\n", report.wake_loss);
  std::printf("n_turbines: %d\n", report.n_turbines);
  return kExitOk;
}

struct OptimizeArgs {
  std::string problem;
  std::string out;
  std::string model;
  int starts = -1;
  int sequences = -1;
  int iterations = -1;
  std::int64_t seed = -1;
  double min_spacing_d = -1.0;
  int threads = 0;
  bool render = false;
};

int run_optimize(const OptimizeArgs& args) {
  WallTimer timer;
  const fs::path out_dir = prepare_out_dir(args.out);

  farmlayout::Problem problem = farmlayout::load_problem_file(args.problem);
  if (!args.model.empty()) {
    problem.wake.model = farmlayout::wake_model_from_string(args.model);
  }
  if (args.starts > 0) problem.optimizer.n_starts = args.starts;
  if (args.sequences > 0) problem.optimizer.n_sequences = args.sequences;
  if (args.iterations > 0) problem.optimizer.n_iterations = args.iterations;
  if (args.seed >= 0) problem.optimizer.seed = static_cast<std::uint64_t>(args.seed);
  if (args.min_spacing_d > 0.0) problem.optimizer.min_spacing_d = args.min_spacing_d;

  const farmlayout::OptimizedResult result = farmlayout::optimize(
      problem.turbine, problem.rose, problem.boundary, problem.n_turbines,
      problem.optimizer, problem.wake, args.threads);

  farmlayout::write_layout_csv(out_dir / "best_layout.csv", result.best_layout);
  farmlayout::write_text_file(out_dir / "report.json",
                              farmlayout::report_to_json(result.best_report));
  farmlayout::write_history_csv(out_dir / "history.csv", result);

  std::string starts_csv = "start,feasible,aep_gwh\n";
  for (std::size_t k = 0; k < result.starts.size(); ++k) {
    starts_csv += std::to_string(k) + "," +
                  (result.starts[k].feasible ? "1" : "0") + "," +
                  farmlayout::format_double(result.starts[k].aep_gwh) + "\n";
  }
  farmlayout::write_text_file(out_dir / "starts.csv", starts_csv);

  if (args.render) {
    farmlayout::cli::render_layout_svg(out_dir / "layout.svg", problem.boundary,
                                       result.best_layout);
  }

  json config{{"n_turbines", problem.n_turbines},
              {"starts", problem.optimizer.n_starts},
              {"sequences", problem.optimizer.n_sequences},
              {"iterations", problem.optimizer.n_iterations},
              {"seed", problem.optimizer.seed},
              {"min_spacing_d", problem.optimizer.min_spacing_d},
              {"initial_step_m", problem.optimizer.initial_step_m},
              {"fd_step_m", problem.optimizer.fd_step_m},
              {"initial_penalty_weight", problem.optimizer.initial_penalty_weight},
              {"penalty_multiplier", problem.optimizer.penalty_multiplier},
              {"wake", wake_config_json(problem.wake)},
              {"threads", args.threads}};
  farmlayout::cli::write_manifest(out_dir, "optimize", {args.problem}, config,
                                  timer.seconds());

  int feasible = 0;
  for (const auto& start : result.starts) feasible += start.feasible ? 1 : 0;
  std::printf("best_start: %d\n", result.best_start);
  std::printf("feasible_starts: %d/%zu\n", feasible, result.starts.size());
  std::printf("aep_gwh: %.4f\n", result.best_report.aep_gwh);
  std::printf("wake_loss: %.6f\n", result.best_report.wake_loss);
  std::printf("wall_time_s: %.2f\n", result.wall_time_s);
  return kExitOk;
}

struct FlowFieldArgs {
  std::string problem;
  std::string layout;
  std::string out;
  double direction = -1.0;
  double speed = -1.0;
  double cell_size = 50.0;
  double margin = 500.0;
  bool render = false;
};

int run_flowfield(const FlowFieldArgs& args) {
  WallTimer timer;
  const fs::path out_dir = prepare_out_dir(args.out);

  const farmlayout::Problem problem = farmlayout::load_problem_file(args.problem);
  const farmlayout::Layout layout = farmlayout::read_layout_csv(args.layout);

  // Default to the dominant rose direction at its mean speed.
  const int dominant = problem.rose.dominant_bin();
  const double direction = args.direction >= 0.0
                               ? args.direction
                               : problem.rose.bins[dominant].center_deg;
  const double speed = args.speed >= 0.0
                           ? args.speed
                           : problem.rose.bins[dominant].mean_speed_ms;

  const farmlayout::GridSpec grid = farmlayout::GridSpec::cover(
      problem.boundary.bounding_box(), args.cell_size, args.margin);
  const farmlayout::FlowFieldGrid field = farmlayout::flow_field(
      layout, problem.turbine, direction, speed, problem.wake, grid);

  farmlayout::write_flow_field_csv(out_dir / "flowfield.csv", field);
  if (args.render) {
    farmlayout::cli::render_flow_field_svg(out_dir / "flowfield.svg", field,
                                           layout);
  }

  json config{{"direction_deg", direction},
              {"speed_ms", speed},
              {"cell_size_m", args.cell_size},
              {"margin_m", args.margin},
              {"wake", wake_config_json(problem.wake)}};
  farmlayout::cli::write_manifest(out_dir, "flowfield",
                                  {args.problem, args.layout}, config,
                                  timer.seconds());

  std::printf("direction_deg: %g\n", direction);
  std::printf("speed_ms: %g\n", speed);
  std::printf("grid: %dx%d cells of %g m\n", grid.nx, grid.ny, grid.cell_size_m);
  return kExitOk;
}

struct CompareArgs {
  std::string problem;
  std::string layout;
  std::string out;
};

int run_compare(const CompareArgs& args) {
  WallTimer timer;
  const fs::path out_dir = prepare_out_dir(args.out);

  const farmlayout::Problem problem = farmlayout::load_problem_file(args.problem);
  const farmlayout::Layout layout = farmlayout::read_layout_csv(args.layout);

  const farmlayout::ModelComparison cmp =
      farmlayout::compare_models(layout, problem.turbine, problem.rose);

  json doc{{"aep_bastankhah_gwh", cmp.aep_bastankhah_gwh},
           {"aep_jensen_gwh", cmp.aep_jensen_gwh},
           {"relative_gap", cmp.relative_gap}};
  farmlayout::write_text_file(out_dir / "compare.json", doc.dump(2) + "\n");
  farmlayout::cli::write_manifest(out_dir, "compare",
                                  {args.problem, args.layout}, json::object(),
                                  timer.seconds());

  std::printf("aep_bastankhah_gwh: %.4f\n", cmp.aep_bastankhah_gwh);
  std::printf("aep_jensen_gwh: %.4f\n", cmp.aep_jensen_gwh);
  std::printf("relative_gap: %.6f\n", cmp.relative_gap);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wind-farm wake evaluation and layout optimization"};
  app.set_version_flag("--version",
                       std::string("farmlayout ") + farmlayout::kVersion);
  app.require_subcommand(1);

  std::function<int()> runner;

  WindroseArgs windrose_args;
  CLI::App* windrose = app.add_subcommand(
      "windrose", "Build a 36-bin wind rose from a time-series CSV");
  windrose->add_option("--input", windrose_args.input, "Time-series CSV")
      ->required();
  windrose->add_option("--out", windrose_args.out, "Output directory");
  windrose->add_option("--ref-height", windrose_args.ref_height,
                       "Reference height of the series, m");
  windrose->add_option("--hub-height", windrose_args.hub_height,
                       "Target hub height, m");
  windrose->add_option("--alpha", windrose_args.alpha, "Shear exponent");
  windrose
      ->add_option("--speed-mean", windrose_args.speed_mean,
                   "Bin speed aggregation")
      ->check(CLI::IsMember({"arithmetic", "cubic"}));
  windrose->callback([&]() { runner = [&]() { return run_windrose(windrose_args); }; });

  CapacityArgs capacity_args;
  CLI::App* capacity = app.add_subcommand(
      "capacity", "Installed capacity and turbine count for an area");
  capacity->add_option("--area", capacity_args.area_km2, "Project area, km^2")
      ->required();
  capacity->add_option("--density", capacity_args.density,
                       "Capacity density, MW/km^2");
  capacity->add_option("--rating", capacity_args.rating, "Unit rating, MW");
  capacity->add_option("--out", capacity_args.out, "Output directory");
  capacity->callback([&]() { runner = [&]() { return run_capacity(capacity_args); }; });

  EvaluateArgs evaluate_args;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "AEP and wake-loss report for a layout");
  evaluate->add_option("--problem", evaluate_args.problem, "Problem JSON")
      ->required();
  evaluate->add_option("--layout", evaluate_args.layout, "Layout CSV")
      ->required();
  evaluate->add_option("--out", evaluate_args.out, "Output directory");
  evaluate->add_option("--model", evaluate_args.model,
                       "Override wake model (jensen|bastankhah)");
  evaluate->add_option("--threads", evaluate_args.threads, "Worker threads (0 = auto)")
      ->envname("FARMLAYOUT_THREADS");
  evaluate->add_flag("--per-direction-csv", evaluate_args.per_direction_csv,
                     "Also write per-direction farm power CSV");
  evaluate->callback([&]() { runner = [&]() { return run_evaluate(evaluate_args); }; });

  OptimizeArgs optimize_args;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Multi-start penalized gradient ascent on AEP");
  optimize->add_option("--problem", optimize_args.problem, "Problem JSON")
      ->required();
  optimize->add_option("--out", optimize_args.out, "Output directory");
  optimize->add_option("--starts", optimize_args.starts, "Number of starts");
  optimize->add_option("--sequences", optimize_args.sequences,
                       "Penalty sequences per start");
  optimize->add_option("--iterations", optimize_args.iterations,
                       "Gradient iterations per sequence");
  optimize->add_option("--seed", optimize_args.seed, "Base random seed");
  optimize->add_option("--model", optimize_args.model,
                       "Override wake model (jensen|bastankhah)");
  optimize->add_option("--min-spacing-d", optimize_args.min_spacing_d,
                       "Minimum spacing in rotor diameters");
  optimize->add_option("--threads", optimize_args.threads, "Worker threads (0 = auto)")
      ->envname("FARMLAYOUT_THREADS");
  optimize->add_flag("--render", optimize_args.render, "Write layout.svg");
  optimize->callback([&]() { runner = [&]() { return run_optimize(optimize_args); }; });

  FlowFieldArgs flowfield_args;
  CLI::App* flowfield = app.add_subcommand(
      "flowfield", "Waked speed field on a grid for one direction");
  flowfield->add_option("--problem", flowfield_args.problem, "Problem JSON")
      ->required();
  flowfield->add_option("--layout", flowfield_args.layout, "Layout CSV")
      ->required();
  flowfield->add_option("--out", flowfield_args.out, "Output directory");
  flowfield->add_option("--direction", flowfield_args.direction,
                        "Wind from-direction, deg (default: dominant bin)");
  flowfield->add_option("--speed", flowfield_args.speed,
                        "Freestream speed, m/s (default: dominant bin mean)");
  flowfield->add_option("--cell-size", flowfield_args.cell_size, "Grid cell, m");
  flowfield->add_option("--margin", flowfield_args.margin,
                        "Margin around the boundary box, m");
  flowfield->add_flag("--render", flowfield_args.render, "Write flowfield.svg");
  flowfield->callback([&]() { runner = [&]() { return run_flowfield(flowfield_args); }; });

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "Jensen vs Bastankhah AEP on one layout");
  compare->add_option("--problem", compare_args.problem, "Problem JSON")
      ->required();
  compare->add_option("--layout", compare_args.layout, "Layout CSV")->required();
  compare->add_option("--out", compare_args.out, "Output directory");
  compare->callback([&]() { runner = [&]() { return run_compare(compare_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return runner();
  } catch (const farmlayout::OptimizationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOptimizationFailure;
  } catch (const farmlayout::InitializationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOptimizationFailure;
  } catch (const farmlayout::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
