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

#include <vector>

namespace farmlayout {

/// Plan coordinates in meters, x east, y north.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Turbine positions in plan coordinates.
using Layout = std::vector<Point>;

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

/// Points within this distance of a polygon edge count as inside.
inline constexpr double kOnEdgeToleranceM = 1e-9;

/// Simple closed polygon delimiting the permitted area. The constructor
/// validates: at least 3 vertices, no self-intersection, positive area.
class Boundary {
 public:
  explicit Boundary(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  BoundingBox bounding_box() const;
  Point centroid() const;

 private:
  std::vector<Point> vertices_;
};

double distance(const Point& a, const Point& b);

/// Even-odd ray-casting containment test. Points within kOnEdgeToleranceM of
/// an edge count as inside.
bool point_in_polygon(const Point& p, const Boundary& boundary);

/// Enclosed area by the shoelace formula, in km².
double polygon_area_km2(const Boundary& boundary);

/// Distance from p to the boundary polyline (zero only on the polyline).
double distance_to_boundary_m(const Point& p, const Boundary& boundary);

/// Closest point on the boundary polyline.
Point nearest_boundary_point(const Point& p, const Boundary& boundary);

/// Axis-aligned rectangle helper.
Boundary make_rectangle(double width_m, double height_m, Point origin = {0.0, 0.0});

}  // namespace farmlayout
