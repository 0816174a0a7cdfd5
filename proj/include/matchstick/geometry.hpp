// Copyright 2026 The matchstick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "matchstick/scalar.hpp"

namespace matchstick {

struct Point {
  Scalar x;
  Scalar y;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar squared_norm(const Point& a) { return dot(a, a); }
inline Scalar norm(const Point& a) { return sqrt(squared_norm(a)); }
inline Scalar distance(const Point& a, const Point& b) { return norm(a - b); }

/// Twice the signed area of (a, b, c); positive when c is left of a->b.
inline Scalar orientation(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a);
}

/// Infinite line through `anchor` with direction angle normalized to [0, pi).
class Line {
 public:
  Line(Point anchor, const Scalar& angle);
  static Line through(const Point& a, const Point& b);

  const Point& anchor() const { return anchor_; }
  const Scalar& angle() const { return angle_; }
  Point direction() const;
  /// Unit normal pointing to the left of direction().
  Point normal() const;
  Scalar signed_distance(const Point& p) const;

 private:
  Point anchor_;
  Scalar angle_;
};

enum class Side : int { Left = 1, Right = -1 };

Point rotate(const Point& pt, const Point& center, const Scalar& angle);
Point reflect(const Point& pt, const Line& axis);

/// The point at unit distance from both centers, on the requested side of
/// the directed pair c1 -> c2 (Left = counter-clockwise).
/// Throws DegenerateCenters / NoIntersection when the centers are closer than
/// 10^(5-p) or at least 2 - 10^(5-p) apart.
Point circle_circle_intersect(const Point& c1, const Point& c2, Side side);

enum class SegmentRelation {
  Disjoint,
  ProperCrossing,
  SharedEndpoint,
  EndpointOnInterior,
  CollinearOverlap,
};

std::string_view to_string(SegmentRelation relation);

/// Classifies segment ab against segment cd. Endpoints closer than
/// `incidence` count as shared; an endpoint within `incidence` of the other
/// segment counts as lying on it.
SegmentRelation segment_relation(const Point& a, const Point& b, const Point& c,
                                 const Point& d, const Scalar& incidence);

/// Distance from p to the closed segment ab.
Scalar point_segment_distance(const Point& p, const Point& a, const Point& b);

/// Counter-clockwise angle (radians, [0, 2pi)) swept from ray vertex->from to
/// ray vertex->to.
Scalar ccw_angle(const Point& from, const Point& vertex, const Point& to);

/// Unsigned angle (radians, [0, pi]) between two direction vectors.
Scalar angle_between(const Point& u, const Point& v);

}  // namespace matchstick
