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

#include "matchstick/geometry.hpp"

#include <array>

#include "matchstick/error.hpp"

namespace matchstick {

Line::Line(Point anchor, const Scalar& angle) : anchor_(std::move(anchor)) {
  const Scalar half_turn = pi();
  angle_ = fmod(angle, half_turn);
  if (angle_ < 0) angle_ += half_turn;
  if (angle_ >= half_turn) angle_ -= half_turn;
}

Line Line::through(const Point& a, const Point& b) {
  const Point d = b - a;
  return Line(a, atan2(d.y, d.x));
}

Point Line::direction() const { return {cos(angle_), sin(angle_)}; }

Point Line::normal() const { return {-sin(angle_), cos(angle_)}; }

Scalar Line::signed_distance(const Point& p) const {
  return dot(p - anchor_, normal());
}

Point rotate(const Point& pt, const Point& center, const Scalar& angle) {
  const Scalar c = cos(angle);
  const Scalar s = sin(angle);
  const Point d = pt - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

Point reflect(const Point& pt, const Line& axis) {
  const Point n = axis.normal();
  const Scalar offset = axis.signed_distance(pt);
  return pt - Scalar(2 * offset) * n;
}

Point circle_circle_intersect(const Point& c1, const Point& c2, Side side) {
  const Point delta = c2 - c1;
  const Scalar d = norm(delta);
  const Scalar tol = precision_tolerance(5);
  if (d <= tol) {
    throw Error(ErrorCode::DegenerateCenters,
                "centers coincide (distance " + format_scalar(d, 6) + ")");
  }
  if (d >= 2 - tol) {
    throw Error(ErrorCode::NoIntersection,
                "unit circles do not meet (distance " + format_scalar(d, 6) + ")");
  }
  const Scalar half = d / 2;
  const Scalar height = sqrt(1 - half * half);
  const Point mid{(c1.x + c2.x) / 2, (c1.y + c2.y) / 2};
  const Point left{-delta.y / d, delta.x / d};
  const Scalar sign = static_cast<int>(side);
  return mid + Scalar(sign * height) * left;
}

std::string_view to_string(SegmentRelation relation) {
  switch (relation) {
    case SegmentRelation::Disjoint: return "disjoint";
    case SegmentRelation::ProperCrossing: return "proper-crossing";
    case SegmentRelation::SharedEndpoint: return "shared-endpoint";
    case SegmentRelation::EndpointOnInterior: return "endpoint-on-interior";
    case SegmentRelation::CollinearOverlap: return "collinear-overlap";
  }
  return "unknown";
}

Scalar point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const Scalar len2 = squared_norm(ab);
  if (len2 <= precision_tolerance(5) * precision_tolerance(5)) {
    throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  }
  Scalar t = dot(p - a, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return distance(p, a + t * ab);
}

SegmentRelation segment_relation(const Point& a, const Point& b, const Point& c,
                                 const Point& d, const Scalar& incidence) {
  const Scalar degenerate = precision_tolerance(5);
  if (distance(a, b) <= degenerate || distance(c, d) <= degenerate) {
    throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  }

  // Shared endpoint: the relation degrades to an overlap only when the two
  // segments leave the common point along the same ray.
  const std::array<std::pair<const Point*, const Point*>, 2> first{
      std::pair{&a, &b}, std::pair{&b, &a}};
  const std::array<std::pair<const Point*, const Point*>, 2> second{
      std::pair{&c, &d}, std::pair{&d, &c}};
  for (const auto& [s1, o1] : first) {
    for (const auto& [s2, o2] : second) {
      if (distance(*s1, *s2) < incidence) {
        if (point_segment_distance(*o1, *s2, *o2) < incidence ||
            point_segment_distance(*o2, *s1, *o1) < incidence) {
          return SegmentRelation::CollinearOverlap;
        }
        return SegmentRelation::SharedEndpoint;
      }
    }
  }

  int touching = 0;
  if (point_segment_distance(a, c, d) < incidence) ++touching;
  if (point_segment_distance(b, c, d) < incidence) ++touching;
  if (point_segment_distance(c, a, b) < incidence) ++touching;
  if (point_segment_distance(d, a, b) < incidence) ++touching;
  if (touching >= 2) return SegmentRelation::CollinearOverlap;
  if (touching == 1) return SegmentRelation::EndpointOnInterior;

  const int o1 = orientation(a, b, c).sign();
  const int o2 = orientation(a, b, d).sign();
  const int o3 = orientation(c, d, a).sign();
  const int o4 = orientation(c, d, b).sign();
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::ProperCrossing;
  return SegmentRelation::Disjoint;
}

Scalar ccw_angle(const Point& from, const Point& vertex, const Point& to) {
  const Point u = from - vertex;
  const Point v = to - vertex;
  Scalar angle = atan2(cross(u, v), dot(u, v));
  if (angle < 0) angle += 2 * pi();
  return angle;
}

Scalar angle_between(const Point& u, const Point& v) {
  return abs(atan2(cross(u, v), dot(u, v)));
}

}  // namespace matchstick
