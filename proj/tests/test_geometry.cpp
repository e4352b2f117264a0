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

#include "farmlayout/geometry.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "farmlayout/errors.hpp"
#include "farmlayout/rng.hpp"

using namespace farmlayout;

namespace {

// Non-convex test polygon (an L shape, meters).
Boundary l_shape() {
  return Boundary({{0, 0}, {2000, 0}, {2000, 800}, {900, 800},
                   {900, 2000}, {0, 2000}});
}

// Winding-number containment oracle (brute force, no edge tolerance).
bool winding_number_inside(const Point& p, const Boundary& boundary) {
  const auto& v = boundary.vertices();
  const std::size_t n = v.size();
  double angle = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const double x1 = a.x - p.x;
    const double y1 = a.y - p.y;
    const double x2 = b.x - p.x;
    const double y2 = b.y - p.y;
    angle += std::atan2(x1 * y2 - y1 * x2, x1 * x2 + y1 * y2);
  }
  return std::abs(angle) > 3.0;  // ~2*pi inside, ~0 outside
}

}  // namespace

TEST_CASE("Boundary validation") {
  CHECK_THROWS_AS(Boundary({{0, 0}, {1, 0}}), InvalidInput);
  // Collinear: zero area.
  CHECK_THROWS_AS(Boundary({{0, 0}, {1, 0}, {2, 0}}), InvalidInput);
  // Bowtie: self-intersecting.
  CHECK_THROWS_AS(Boundary({{0, 0}, {10, 10}, {10, 0}, {0, 10}}), InvalidInput);
  // Repeated vertex: zero-length edge.
  CHECK_THROWS_AS(Boundary({{0, 0}, {10, 0}, {10, 0}, {0, 10}}), InvalidInput);
  CHECK_NOTHROW(Boundary({{0, 0}, {10, 0}, {10, 10}, {0, 10}}));
  CHECK_NOTHROW(l_shape());
}

TEST_CASE("polygon_area_km2 matches direct multiplication") {
  const Boundary square = make_rectangle(1000.0, 1000.0);
  CHECK(polygon_area_km2(square) == doctest::Approx(1.0).epsilon(1e-12));

  // Study-scale rectangle: 13.4 km x 13.38 km.
  const Boundary site = make_rectangle(13400.0, 13380.0);
  CHECK(polygon_area_km2(site) == doctest::Approx(179.292).epsilon(1e-9));

  // Vertex order reversal keeps the area positive and identical.
  std::vector<Point> reversed = square.vertices();
  std::reverse(reversed.begin(), reversed.end());
  CHECK(polygon_area_km2(Boundary(reversed)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("point_in_polygon basics") {
  const Boundary square = make_rectangle(1000.0, 1000.0);
  CHECK(point_in_polygon(square.centroid(), square));
  CHECK(point_in_polygon({500, 500}, square));
  CHECK_FALSE(point_in_polygon({-1, 500}, square));
  CHECK_FALSE(point_in_polygon({1500, 1500}, square));
  // Boundary points count as inside.
  CHECK(point_in_polygon({0, 500}, square));
  CHECK(point_in_polygon({0, 0}, square));
  CHECK(point_in_polygon({1000.0 + 0.5e-9, 500}, square));
}

TEST_CASE("point_in_polygon agrees with a winding-number oracle") {
  const Boundary poly = l_shape();
  const BoundingBox box = poly.bounding_box();
  Rng rng(2024);
  int inside_count = 0;
  for (int i = 0; i < 1000; ++i) {
    const Point p{rng.uniform(box.min_x - 200.0, box.max_x + 200.0),
                  rng.uniform(box.min_y - 200.0, box.max_y + 200.0)};
    // Stay away from edges where the tolerance rule intentionally differs.
    if (distance_to_boundary_m(p, poly) < 1e-6) continue;
    const bool got = point_in_polygon(p, poly);
    CHECK(got == winding_number_inside(p, poly));
    inside_count += got ? 1 : 0;
  }
  CHECK(inside_count > 100);  // both classes exercised
  CHECK(inside_count < 900);
}

TEST_CASE("distance_to_boundary_m and nearest_boundary_point") {
  const Boundary square = make_rectangle(1000.0, 1000.0);
  CHECK(distance_to_boundary_m({500, 500}, square) == doctest::Approx(500.0));
  CHECK(distance_to_boundary_m({10, 500}, square) == doctest::Approx(10.0));
  CHECK(distance_to_boundary_m({-30, 500}, square) == doctest::Approx(30.0));

  const Point q = nearest_boundary_point({-30, 400}, square);
  CHECK(q.x == doctest::Approx(0.0));
  CHECK(q.y == doctest::Approx(400.0));

  // Outside a corner, the nearest point is the vertex.
  const Point corner = nearest_boundary_point({-30, -40}, square);
  CHECK(corner.x == doctest::Approx(0.0));
  CHECK(corner.y == doctest::Approx(0.0));
}

TEST_CASE("bounding box and centroid") {
  const Boundary poly = l_shape();
  const BoundingBox box = poly.bounding_box();
  CHECK(box.min_x == 0.0);
  CHECK(box.max_x == 2000.0);
  CHECK(box.min_y == 0.0);
  CHECK(box.max_y == 2000.0);
  CHECK(point_in_polygon(poly.centroid(), poly));
}
