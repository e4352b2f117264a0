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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "farmlayout/errors.hpp"

namespace farmlayout {

namespace {

double shoelace_sum_m2(const std::vector<Point>& v) {
  double sum = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    sum += a.x * b.y - b.x * a.y;
  }
  return 0.5 * sum;
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Proper or improper intersection of closed segments [a,b] and [c,d].
bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

double point_segment_distance(const Point& p, const Point& a, const Point& b,
                              Point* closest = nullptr) {
  const double abx = b.x - a.x;
  const double aby = b.y - a.y;
  const double len2 = abx * abx + aby * aby;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const Point q{a.x + t * abx, a.y + t * aby};
  if (closest != nullptr) *closest = q;
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

Boundary::Boundary(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw InvalidInput("boundary needs at least 3 vertices, got " +
                       std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(vertices_[i], vertices_[(i + 1) % n]) == 0.0) {
      throw InvalidInput("boundary has a zero-length edge at vertex " +
                         std::to_string(i));
    }
  }
  // 1e-12 km^2 == 1 m^2
  if (std::abs(shoelace_sum_m2(vertices_)) * 1e-6 < 1e-12) {
    throw InvalidInput("boundary polygon is degenerate (area below 1e-12 km^2)");
  }
  // Non-adjacent edges must not touch.
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const Point& c = vertices_[j];
      const Point& d = vertices_[(j + 1) % n];
      if (segments_intersect(a, b, c, d)) {
        throw InvalidInput("boundary polygon self-intersects between edges " +
                           std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

BoundingBox Boundary::bounding_box() const {
  BoundingBox box{std::numeric_limits<double>::max(),
                  std::numeric_limits<double>::max(),
                  std::numeric_limits<double>::lowest(),
                  std::numeric_limits<double>::lowest()};
  for (const Point& p : vertices_) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

Point Boundary::centroid() const {
  // Area-weighted polygon centroid.
  double cx = 0.0;
  double cy = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const double w = a.x * b.y - b.x * a.y;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  const double area6 = 6.0 * shoelace_sum_m2(vertices_);
  return Point{cx / area6, cy / area6};
}

double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

bool point_in_polygon(const Point& p, const Boundary& boundary) {
  if (distance_to_boundary_m(p, boundary) <= kOnEdgeToleranceM) return true;
  const std::vector<Point>& v = boundary.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = v[j];
    const Point& b = v[i];
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_int = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

double polygon_area_km2(const Boundary& boundary) {
  return std::abs(shoelace_sum_m2(boundary.vertices())) * 1e-6;
}

double distance_to_boundary_m(const Point& p, const Boundary& boundary) {
  const std::vector<Point>& v = boundary.vertices();
  const std::size_t n = v.size();
  double best = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % n]));
  }
  return best;
}

Point nearest_boundary_point(const Point& p, const Boundary& boundary) {
  const std::vector<Point>& v = boundary.vertices();
  const std::size_t n = v.size();
  double best = std::numeric_limits<double>::max();
  Point best_point = v[0];
  for (std::size_t i = 0; i < n; ++i) {
    Point q;
    const double d = point_segment_distance(p, v[i], v[(i + 1) % n], &q);
    if (d < best) {
      best = d;
      best_point = q;
    }
  }
  return best_point;
}

Boundary make_rectangle(double width_m, double height_m, Point origin) {
  if (width_m <= 0.0 || height_m <= 0.0) {
    throw InvalidInput("rectangle sides must be positive");
  }
  return Boundary({origin,
                   {origin.x + width_m, origin.y},
                   {origin.x + width_m, origin.y + height_m},
                   {origin.x, origin.y + height_m}});
}

}  // namespace farmlayout
