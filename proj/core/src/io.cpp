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

#include "farmlayout/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "farmlayout/errors.hpp"

namespace farmlayout {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::filesystem::path& path,
                    int line_no, const char* column) {
  const std::string t = strip(text);
  double value = 0.0;
  const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
  if (result.ec != std::errc() || result.ptr != t.data() + t.size()) {
    throw InvalidInput(path.string() + ": line " + std::to_string(line_no) +
                       ": cannot parse " + column + " value '" + text + "'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  return out;
}

json curve_to_json(const std::vector<CurvePoint>& curve) {
  json arr = json::array();
  for (const CurvePoint& p : curve) arr.push_back({p.speed_ms, p.value});
  return arr;
}

std::vector<CurvePoint> curve_from_json(const json& arr, const std::string& field) {
  if (!arr.is_array()) throw InvalidInput(field + ": expected an array");
  std::vector<CurvePoint> curve;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& row = arr[i];
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
        !row[1].is_number()) {
      throw InvalidInput(field + "[" + std::to_string(i) +
                         "]: expected [speed, value]");
    }
    curve.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  return curve;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::vector<WindSample> read_time_series_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw InvalidInput(path.string() + ": empty file, header required");
  }

  const std::string header = strip(line);
  bool components;
  if (header == "timestamp,u100,v100") {
    components = true;
  } else if (header == "timestamp,speed,direction") {
    components = false;
  } else {
    throw InvalidInput(path.string() +
                       ": line 1: header must be 'timestamp,u100,v100' or "
                       "'timestamp,speed,direction', got '" +
                       header + "'");
  }

  std::vector<WindSample> samples;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw InvalidInput(path.string() + ": line " + std::to_string(line_no) +
                         ": expected 3 fields, got " +
                         std::to_string(fields.size()));
    }
    WindSample sample;
    sample.timestamp = strip(fields[0]);
    if (components) {
      sample.u_ms = parse_double(fields[1], path, line_no, "u100");
      sample.v_ms = parse_double(fields[2], path, line_no, "v100");
    } else {
      sample.speed_ms = parse_double(fields[1], path, line_no, "speed");
      sample.direction_deg = parse_double(fields[2], path, line_no, "direction");
      if (*sample.speed_ms < 0.0) {
        throw InvalidInput(path.string() + ": line " + std::to_string(line_no) +
                           ": speed must be nonnegative");
      }
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

void write_wind_rose_csv(const std::filesystem::path& path,
                         const WindRose& rose) {
  std::ofstream out = open_output(path);
  out << "center_deg,frequency,mean_speed_ms\n";
  for (const RoseBin& bin : rose.bins) {
    out << format_double(bin.center_deg) << ',' << format_double(bin.frequency)
        << ',' << format_double(bin.mean_speed_ms) << '\n';
  }
}

WindRose read_wind_rose_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line) ||
      strip(line) != "center_deg,frequency,mean_speed_ms") {
    throw InvalidInput(path.string() +
                       ": line 1: expected header 'center_deg,frequency,mean_speed_ms'");
  }
  WindRose rose;
  int row = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    if (row >= kRoseBins) {
      throw InvalidInput(path.string() + ": line " + std::to_string(line_no) +
                         ": more than 36 bins");
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw InvalidInput(path.string() + ": line " + std::to_string(line_no) +
                         ": expected 3 fields, got " +
                         std::to_string(fields.size()));
    }
    rose.bins[row].center_deg = parse_double(fields[0], path, line_no, "center_deg");
    rose.bins[row].frequency = parse_double(fields[1], path, line_no, "frequency");
    rose.bins[row].mean_speed_ms =
        parse_double(fields[2], path, line_no, "mean_speed_ms");
    ++row;
  }
  if (row != kRoseBins) {
    throw InvalidInput(path.string() + ": expected 36 bins, got " +
                       std::to_string(row));
  }
  rose.validate();
  return rose;
}

void write_layout_csv(const std::filesystem::path& path, const Layout& layout) {
  std::ofstream out = open_output(path);
  out << "x_m,y_m\n";
  for (const Point& p : layout) {
    out << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
}

Layout read_layout_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line) || strip(line) != "x_m,y_m") {
    throw InvalidInput(path.string() + ": line 1: expected header 'x_m,y_m'");
  }
  Layout layout;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw InvalidInput(path.string() + ": line " + std::to_string(line_no) +
                         ": expected 2 fields, got " +
                         std::to_string(fields.size()));
    }
    layout.push_back({parse_double(fields[0], path, line_no, "x_m"),
                      parse_double(fields[1], path, line_no, "y_m")});
  }
  return layout;
}

void write_flow_field_csv(const std::filesystem::path& path,
                          const FlowFieldGrid& field) {
  std::ofstream out = open_output(path);
  out << "x_m,y_m,speed_ms\n";
  for (int iy = 0; iy < field.grid.ny; ++iy) {
    for (int ix = 0; ix < field.grid.nx; ++ix) {
      out << format_double(field.cell_x(ix)) << ','
          << format_double(field.cell_y(iy)) << ','
          << format_double(field.at(ix, iy)) << '\n';
    }
  }
}

void write_history_csv(const std::filesystem::path& path,
                       const OptimizedResult& result) {
  std::ofstream out = open_output(path);
  out << "start,sequence,iteration,objective\n";
  for (std::size_t k = 0; k < result.starts.size(); ++k) {
    const StartResult& start = result.starts[k];
    int iter_in_seq = 0;
    int last_seq = -1;
    for (std::size_t i = 0; i < start.objective_history.size(); ++i) {
      const int seq = start.history_sequence[i];
      iter_in_seq = seq == last_seq ? iter_in_seq + 1 : 0;
      last_seq = seq;
      out << k << ',' << seq << ',' << iter_in_seq << ','
          << format_double(start.objective_history[i]) << '\n';
    }
  }
}

TurbineSpec load_turbine_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }

  TurbineSpec spec;
  try {
    spec.name = doc.value("name", std::string("unnamed"));
    spec.rotor_diameter_m = doc.at("rotor_diameter_m").get<double>();
    spec.hub_height_m = doc.at("hub_height_m").get<double>();
    spec.rated_power_mw = doc.at("rated_power_mw").get<double>();
    spec.cut_in_ms = doc.at("cut_in_ms").get<double>();
    spec.cut_out_ms = doc.at("cut_out_ms").get<double>();
    spec.power_curve = curve_from_json(doc.at("power_curve"), "power_curve");
    spec.thrust_curve = curve_from_json(doc.at("thrust_curve"), "thrust_curve");
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  spec.validate();
  return spec;
}

void save_turbine_file(const std::filesystem::path& path,
                       const TurbineSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["rotor_diameter_m"] = spec.rotor_diameter_m;
  doc["hub_height_m"] = spec.hub_height_m;
  doc["rated_power_mw"] = spec.rated_power_mw;
  doc["cut_in_ms"] = spec.cut_in_ms;
  doc["cut_out_ms"] = spec.cut_out_ms;
  doc["power_curve"] = curve_to_json(spec.power_curve);
  doc["thrust_curve"] = curve_to_json(spec.thrust_curve);
  write_text_file(path, doc.dump(2) + "\n");
}

std::string report_to_json(const EvaluationReport& report) {
  json doc;
  doc["aep_gwh"] = report.aep_gwh;
  doc["gross_aep_gwh"] = report.gross_aep_gwh;
  doc["wake_loss"] = report.wake_loss;
  doc["n_turbines"] = report.n_turbines;
  doc["installed_capacity_mw"] = report.installed_capacity_mw;
  doc["per_direction_power_mw"] = report.per_direction_power_mw;
  return doc.dump(2) + "\n";
}

EvaluationReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("report JSON: ") + e.what());
  }
  EvaluationReport report;
  try {
    report.aep_gwh = doc.at("aep_gwh").get<double>();
    report.gross_aep_gwh = doc.at("gross_aep_gwh").get<double>();
    report.wake_loss = doc.at("wake_loss").get<double>();
    report.n_turbines = doc.at("n_turbines").get<int>();
    report.installed_capacity_mw = doc.at("installed_capacity_mw").get<double>();
    const json& arr = doc.at("per_direction_power_mw");
    if (!arr.is_array() || arr.size() != kRoseBins) {
      throw InvalidInput("per_direction_power_mw must have 36 entries");
    }
    for (int i = 0; i < kRoseBins; ++i) {
      report.per_direction_power_mw[i] = arr[i].get<double>();
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("report JSON: ") + e.what());
  }
  return report;
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  std::ofstream out = open_output(path);
  out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace farmlayout
