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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "matchstick/error.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/geometry.hpp"
#include "support/support.hpp"

using namespace matchstick;
using matchstick::testing::row;

namespace {

bool near(const Point& a, const Point& b, const Scalar& tol) { return distance(a, b) <= tol; }

Point intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point r = b - a, s = d - c;
  const Scalar t = cross(c - a, s) / cross(r, s);
  return a + t * r;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no matchstick::Error thrown");
  return ErrorCode::InvalidGraph;
}

}  // namespace

TEST_CASE("precision context", "[scalar]") {
  CHECK(precision() == kDefaultPrecision);
  {
    PrecisionScope scope(80);
    CHECK(precision() == 80);
    CHECK(precision_tolerance(5) == pow(Scalar(10), -75));
  }
  CHECK(precision() == 60);
  CHECK_THROWS_AS(set_precision(29), std::invalid_argument);
  CHECK(precision_tolerance(10) == pow(Scalar(10), -50));
}

TEST_CASE("MSF_PRECISION overrides the default", "[scalar]") {
  ::setenv("MSF_PRECISION", "75", 1);
  CHECK(precision_from_environment() == 75);
  ::setenv("MSF_PRECISION", "twelve", 1);
  CHECK_THROWS_AS(precision_from_environment(), std::invalid_argument);
  ::unsetenv("MSF_PRECISION");
  CHECK(precision_from_environment() == kDefaultPrecision);
}

TEST_CASE("decimal parsing and formatting", "[scalar]") {
  CHECK(parse_scalar("91,58566772584003") == parse_scalar("91.58566772584003"));
  CHECK(parse_scalar("-0.5") == Scalar(-1) / 2);
  CHECK(code_of([] { parse_scalar("1.2.3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_scalar(""); }) == ErrorCode::ParseError);
  CHECK(format_scalar(Scalar("-0.0"), 5) == format_scalar(Scalar(0), 5));
  CHECK(format_fixed(Scalar("0.00006325366750233"), 14) == "0.00006325366750");
  CHECK(radians_to_degrees(pi()) == 180);
}

TEST_CASE("fixture coordinates round-trip through Scalar", "[scalar]") {
  for (const char* name : {"G1", "G2", "G4", "fig1-left"}) {
    const RawFixture raw = load_raw_fixture(name);
    for (const RawVertexRow& r : raw.vertex_rows) {
      for (const std::string& s : {r.x, r.y}) {
        const auto dot = s.find('.');
        const unsigned decimals = dot == std::string::npos ? 0 : static_cast<unsigned>(s.size() - dot - 1);
        INFO(name << " row " << r.id << " " << s);
        CHECK(format_fixed(parse_scalar(s), decimals) == s);
      }
    }
  }
}

TEST_CASE("rotate", "[geometry]") {
  const Point o{Scalar(0), Scalar(0)};
  const Scalar tol = precision_tolerance(5);
  CHECK(near(rotate(o, o, Scalar("1.234")), o, tol));
  CHECK(near(rotate({Scalar(1), Scalar(0)}, o, pi() / 2), {Scalar(0), Scalar(1)}, tol));

  // The rails of the G2 table meet at O; a turn by 360/169 degrees about O
  // carries A onto C.
  const UnitGraph g = load_fixture("G2");
  const Point& a = g.vertices[g.label("A")];
  const Point& c = g.vertices[g.label("C")];
  const Point& d = g.vertices[g.label("D")];
  const Point& f = g.vertices[g.label("F")];
  const Point apex = intersect(a, f, c, d);
  const Point image = rotate(a, apex, 2 * pi() / 169);
  CHECK(distance(image, c) < Scalar("1e-12"));
  CHECK(abs(orientation(c, d, image)) / distance(c, d) < Scalar("1e-12"));
}

TEST_CASE("reflect", "[geometry]") {
  const Scalar tol = precision_tolerance(5);
  const Line x_axis({Scalar(0), Scalar(0)}, Scalar(0));
  CHECK(near(reflect({Scalar(0), Scalar(1)}, x_axis), {Scalar(0), Scalar(-1)}, tol));
  const Point on{Scalar("3.5"), Scalar(0)};
  CHECK(near(reflect(on, x_axis), on, tol));

  const UnitGraph g = load_fixture("G2");
  const Line be = Line::through(g.vertices[g.label("B")], g.vertices[g.label("E")]);
  // The table itself carries mirror errors of a few 1e-15.
  CHECK(distance(reflect(g.vertices[row(g, 17)], be), g.vertices[row(g, 52)]) < Scalar("1e-14"));
}

TEST_CASE("circle_circle_intersect", "[geometry]") {
  const Scalar tol = precision_tolerance(5);
  const Point c1{Scalar(0), Scalar(0)}, c2{Scalar(1), Scalar(0)};
  const Scalar h = sqrt(Scalar(3)) / 2;
  CHECK(near(circle_circle_intersect(c1, c2, Side::Left), {Scalar("0.5"), h}, tol));
  CHECK(near(circle_circle_intersect(c1, c2, Side::Right), {Scalar("0.5"), -h}, tol));

  const UnitGraph g = load_fixture("G2");
  const Point& p1 = g.vertices[row(g, 1)];
  const Point& p2 = g.vertices[row(g, 2)];
  const Point& p3 = g.vertices[row(g, 3)];
  const Side toward = orientation(p2, p1, p3) > 0 ? Side::Left : Side::Right;
  CHECK(distance(circle_circle_intersect(p2, p1, toward), p3) < Scalar("1e-14"));

  CHECK(code_of([&] { circle_circle_intersect(c1, c1, Side::Left); }) == ErrorCode::DegenerateCenters);
  CHECK(code_of([&] { circle_circle_intersect(c1, {Scalar(2), Scalar(0)}, Side::Left); }) ==
        ErrorCode::NoIntersection);
  CHECK(code_of([&] { circle_circle_intersect(c1, {Scalar(3), Scalar(0)}, Side::Left); }) ==
        ErrorCode::NoIntersection);
}

TEST_CASE("segment_relation", "[geometry]") {
  const Scalar inc("1e-12");
  auto p = [](double x, double y) { return Point{Scalar(x), Scalar(y)}; };
  CHECK(segment_relation(p(0, 0), p(1, 0), p(0, 1), p(1, 1), inc) == SegmentRelation::Disjoint);
  CHECK(segment_relation(p(0, 0), p(1, 1), p(0, 1), p(1, 0), inc) == SegmentRelation::ProperCrossing);
  CHECK(segment_relation(p(0, 0), p(2, 0), p(1, 0), p(1, 1), inc) == SegmentRelation::EndpointOnInterior);
  CHECK(segment_relation(p(0, 0), p(1, 0), p(1, 0), p(1, 1), inc) == SegmentRelation::SharedEndpoint);
  CHECK(segment_relation(p(0, 0), p(2, 0), p(1, 0), p(3, 0), inc) == SegmentRelation::CollinearOverlap);
  CHECK(segment_relation(p(0, 0), p(1, 0), p(1, 0), p(2, 0), inc) == SegmentRelation::SharedEndpoint);
  CHECK(to_string(SegmentRelation::ProperCrossing) == "proper-crossing");
  CHECK(code_of([&] { segment_relation(p(0, 0), p(0, 0), p(1, 0), p(1, 1), inc); }) ==
        ErrorCode::DegenerateSegment);
}

TEST_CASE("point_segment_distance", "[geometry]") {
  auto p = [](double x, double y) { return Point{Scalar(x), Scalar(y)}; };
  CHECK(point_segment_distance(p(0, 1), p(-1, 0), p(1, 0)) == 1);
  CHECK(point_segment_distance(p(-1, 0), p(-1, 0), p(1, 0)) == 0);
  CHECK(point_segment_distance(p(3, 4), p(-1, 0), p(0, 0)) == 5);

  const UnitGraph g = load_fixture("G1");
  const Scalar d =
      point_segment_distance(g.vertices[row(g, 42)], g.vertices[row(g, 58)], g.vertices[row(g, 61)]);
  CHECK(d < Scalar("1e-12"));
}

TEST_CASE("angles", "[geometry]") {
  auto p = [](double x, double y) { return Point{Scalar(x), Scalar(y)}; };
  CHECK(abs(ccw_angle(p(1, 0), p(0, 0), p(0, 1)) - pi() / 2) < precision_tolerance(5));
  CHECK(abs(ccw_angle(p(0, 1), p(0, 0), p(1, 0)) - 3 * pi() / 2) < precision_tolerance(5));
  CHECK(abs(angle_between(p(1, 0), p(-1, 0)) - pi()) < precision_tolerance(5));
  const Line l = Line::through(p(0, 0), p(-1, -1));
  CHECK(l.angle() >= 0);
  CHECK(l.angle() < pi());
  CHECK(abs(l.signed_distance(p(0, 1)) - sqrt(Scalar(2)) / 2) < precision_tolerance(5));
}
