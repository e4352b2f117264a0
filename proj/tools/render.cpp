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

#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "farmlayout/errors.hpp"

namespace farmlayout::cli {

namespace {

constexpr double kCanvasWidthPx = 800.0;

struct Mapper {
  double min_x, min_y, scale, height_px;

  double x(double wx) const { return (wx - min_x) * scale; }
  // SVG y grows downward; world y (north) grows upward.
  double y(double wy) const { return height_px - (wy - min_y) * scale; }
};

Mapper make_mapper(const BoundingBox& box, double pad_world) {
  const double w = box.width() + 2.0 * pad_world;
  const double h = box.height() + 2.0 * pad_world;
  const double scale = kCanvasWidthPx / w;
  return Mapper{box.min_x - pad_world, box.min_y - pad_world, scale, h * scale};
}

std::string rgb(double t) {
  // Five-stop dark-violet-to-yellow ramp.
  static constexpr std::array<std::array<double, 3>, 5> kStops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (kStops.size() - 1);
  const int i = std::min<int>(static_cast<int>(t), kStops.size() - 2);
  const double f = t - i;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(kStops[i][0] + f * (kStops[i + 1][0] - kStops[i][0])),
                static_cast<int>(kStops[i][1] + f * (kStops[i + 1][1] - kStops[i][1])),
                static_cast<int>(kStops[i][2] + f * (kStops[i + 1][2] - kStops[i][2])));
  return buf;
}

std::ofstream open_svg(const std::filesystem::path& path, double w, double h) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  return out;
}

}  // namespace

void render_layout_svg(const std::filesystem::path& path,
                       const Boundary& boundary, const Layout& layout) {
  const BoundingBox box = boundary.bounding_box();
  const Mapper map = make_mapper(box, 0.03 * std::max(box.width(), box.height()));

  std::ofstream out = open_svg(path, kCanvasWidthPx, map.height_px);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<polygon points=\"";
  for (const Point& v : boundary.vertices()) {
    out << map.x(v.x) << ',' << map.y(v.y) << ' ';
  }
  out << "\" fill=\"#eef4fb\" stroke=\"#33506e\" stroke-width=\"1.5\"/>\n";
  for (const Point& p : layout) {
    out << "<circle cx=\"" << map.x(p.x) << "\" cy=\"" << map.y(p.y)
        << "\" r=\"4\" fill=\"#b43535\"/>\n";
  }
  out << "</svg>\n";
}

void render_flow_field_svg(const std::filesystem::path& path,
                           const FlowFieldGrid& field, const Layout& layout) {
  const GridSpec& grid = field.grid;
  BoundingBox box{grid.origin_x_m, grid.origin_y_m,
                  grid.origin_x_m + grid.nx * grid.cell_size_m,
                  grid.origin_y_m + grid.ny * grid.cell_size_m};
  const Mapper map = make_mapper(box, 0.0);

  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (double s : field.speeds_ms) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::ofstream out = open_svg(path, kCanvasWidthPx, map.height_px);
  const double cell_px = grid.cell_size_m * map.scale;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double px = map.x(grid.origin_x_m + ix * grid.cell_size_m);
      const double py = map.y(grid.origin_y_m + (iy + 1) * grid.cell_size_m);
      out << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\""
          << cell_px + 0.5 << "\" height=\"" << cell_px + 0.5 << "\" fill=\""
          << rgb((field.at(ix, iy) - lo) / span) << "\"/>\n";
    }
  }
  for (const Point& p : layout) {
    out << "<circle cx=\"" << map.x(p.x) << "\" cy=\"" << map.y(p.y)
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace farmlayout::cli
