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

#include <algorithm>

#include "matchstick/assembler.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/verifier.hpp"
#include "support/support.hpp"

using namespace matchstick;
using namespace matchstick::testing;

namespace {

UnitGraph two_far_triangles() {
  UnitGraph g = unit_triangle();
  const std::size_t n = g.vertices.size();
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(g.vertices[i] + Point{Scalar(10), Scalar(0)});
  g.edges.insert(g.edges.end(), {Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  g.triangles.push_back(make_triangle(3, 4, 5));
  g.canonicalize();
  return g;
}

// Unit triangle plus a fourth vertex hanging at height `h` above edge 0-1.
UnitGraph triangle_with_hanging_vertex(const Scalar& h) {
  UnitGraph g = unit_triangle();
  g.vertices.push_back({Scalar("0.5"), -h});
  g.vertices.push_back({Scalar("0.5"), -h - 1});
  g.edges.push_back(Edge(3, 4));
  g.canonicalize();
  return g;
}

bool has_additional(const VerificationReport& r, int side, const Triangle& corners) {
  return std::any_of(r.additional.begin(), r.additional.end(), [&](const AdditionalTriangle& t) {
    return t.side == side && t.corners == corners;
  });
}

}  // namespace

TEST_CASE("tolerance profiles", "[verifier]") {
  CHECK(ToleranceProfile::by_name("solved").incidence == Scalar("1e-12"));
  CHECK(ToleranceProfile::by_name("fixture").unit == Scalar("1e-13"));
  CHECK(ToleranceProfile::by_name("sketch").unit == Scalar("0.05"));
  CHECK_THROWS_AS(ToleranceProfile::by_name("loose"), std::invalid_argument);
  for (const auto& p : {ToleranceProfile::solved(), ToleranceProfile::fixture(), ToleranceProfile::sketch()}) {
    CHECK(p.incidence < p.clearance);
  }
}

TEST_CASE("separations of a unit triangle", "[verifier]") {
  const Separations s = min_separations(unit_triangle());
  REQUIRE(s.vertex_vertex.has_value());
  CHECK(abs(s.vertex_vertex->distance - 1) < precision_tolerance(5));
  REQUIRE(s.vertex_edge.has_value());
  CHECK(abs(s.vertex_edge->distance - sqrt(Scalar(3)) / 2) < precision_tolerance(5));

  const VerificationReport r = verify(unit_triangle(), ToleranceProfile::solved());
  CHECK(r.unit);
  CHECK(r.planar);
  CHECK(r.no_additional);
  CHECK_FALSE(r.regular4);
  CHECK(verdict_exit_code(r) == 2);
}

TEST_CASE("distant components produce an empty scan", "[verifier]") {
  const UnitGraph g = two_far_triangles();
  const CrossingScan scan = crossing_scan(g, ToleranceProfile::solved());
  CHECK(scan.crossings.empty());
  CHECK(scan.incidences.empty());
  CHECK(scan.coincidences.empty());
  CHECK(scan.indeterminate_pairs.empty());
  CHECK(scan.indeterminate_edges.empty());
  CHECK(scan == crossing_scan_bruteforce(g, ToleranceProfile::solved()));
}

TEST_CASE("separation classes around the thresholds", "[verifier]") {
  const ToleranceProfile prof = ToleranceProfile::solved();

  const VerificationReport touching = verify(triangle_with_hanging_vertex(Scalar(0)), prof);
  REQUIRE(touching.scan.incidences.size() == 1);
  CHECK(touching.scan.incidences.front().vertex == 3);
  CHECK(touching.scan.incidences.front().edge == Edge(0, 1));
  CHECK_FALSE(touching.planar);
  CHECK_FALSE(touching.indeterminate_only());

  const VerificationReport near = verify(triangle_with_hanging_vertex(Scalar("5e-10")), prof);
  CHECK(near.scan.incidences.empty());
  CHECK(near.scan.indeterminate_edges.size() == 1);
  CHECK_FALSE(near.planar);
  CHECK(near.indeterminate_only());

  const VerificationReport clear = verify(triangle_with_hanging_vertex(Scalar("1e-6")), prof);
  CHECK(clear.scan.incidences.empty());
  CHECK(clear.scan.indeterminate_edges.empty());
  CHECK(clear.planar);
}

TEST_CASE("a proper crossing fails planarity", "[verifier]") {
  UnitGraph g = unit_triangle();
  g.vertices.push_back({Scalar("0.5"), Scalar("-0.5")});
  g.vertices.push_back({Scalar("0.5"), Scalar("0.5")});
  g.edges.push_back(Edge(3, 4));
  g.canonicalize();
  const VerificationReport r = verify(g, ToleranceProfile::solved());
  REQUIRE(r.scan.crossings.size() == 1);
  CHECK(r.scan.crossings.front().relation == SegmentRelation::ProperCrossing);
  CHECK_FALSE(r.planar);
  CHECK(r.unit);
  CHECK(verdict_exit_code(r) == 2);
  CHECK(r.scan == crossing_scan_bruteforce(g, ToleranceProfile::solved()));
}

TEST_CASE("G2 table verification", "[verifier]") {
  const UnitGraph g = load_fixture("G2");
  const VerificationReport r = verify(g, ToleranceProfile::fixture());
  CHECK(r.unit);
  CHECK(r.planar);
  CHECK_FALSE(r.regular4);
  CHECK(r.degrees == std::map<int, std::size_t>{{2, 18}, {4, 48}});
  REQUIRE(r.separations.vertex_vertex.has_value());
  CHECK(abs(r.separations.vertex_vertex->distance - Scalar("6.325366750159489e-05")) < Scalar("1e-18"));
  CHECK(r.scan == crossing_scan_bruteforce(g, ToleranceProfile::fixture()));
}

TEST_CASE("G1 and G4 tables touch themselves", "[verifier]") {
  for (const char* name : {"G1", "G4"}) {
    INFO(name);
    const UnitGraph g = load_fixture(name);
    const VerificationReport r = verify(g, ToleranceProfile::fixture());
    CHECK(r.scan.incidences.size() == 8);
    CHECK_FALSE(r.planar);
    CHECK(r.scan == crossing_scan_bruteforce(g, ToleranceProfile::fixture()));
  }
  const VerificationReport g1 = verify(load_fixture("G1"), ToleranceProfile::fixture());
  REQUIRE(g1.separations.vertex_edge.has_value());
  CHECK(g1.separations.vertex_edge->distance < Scalar("1e-12"));
}

TEST_CASE("additional triangles in the sketch figure", "[verifier]") {
  const UnitGraph g = load_fixture("fig1-left");
  const VerificationReport r = verify(g, ToleranceProfile::sketch());
  CHECK(r.unit_cycles == 54);
  CHECK(r.designated == 42);
  CHECK_FALSE(r.no_additional);
  const auto side1 = std::count_if(r.additional.begin(), r.additional.end(),
                                   [](const AdditionalTriangle& t) { return t.side == 1; });
  const auto side2 = std::count_if(r.additional.begin(), r.additional.end(),
                                   [](const AdditionalTriangle& t) { return t.side == 2; });
  CHECK(side1 == 12);
  CHECK(side2 == 12);
  CHECK(has_additional(r, 1, make_triangle(row(g, 19), row(g, 20), row(g, 21))));
  CHECK(has_additional(r, 2, make_triangle(row(g, 13), row(g, 18), row(g, 22))));
  for (const AdditionalTriangle& t : r.additional) {
    CHECK(t.vertices.size() == static_cast<std::size_t>(3 * t.side));
  }
  CHECK(verdict_exit_code(r) != 0);

  const VerificationReport right = verify(load_fixture("fig1-right"), ToleranceProfile::sketch());
  CHECK_FALSE(right.no_additional);
}

TEST_CASE("G2 ring at n = 169 passes every verdict", "[verifier]") {
  const VerificationReport r = verify(g2_ring(), ToleranceProfile::solved(), 2);
  CHECK(r.unit);
  CHECK(r.regular4);
  CHECK(r.planar);
  CHECK(r.no_additional);
  CHECK(r.additional.empty());
  CHECK(r.designated == 6422);
  CHECK(r.unit_cycles == 6422);
  CHECK(verdict_exit_code(r) == 0);
  REQUIRE(r.separations.vertex_vertex.has_value());
  CHECK(r.separations.vertex_vertex->distance >= ToleranceProfile::solved().clearance);
  CHECK(report_json(r) == report_json(verify(g2_ring(), ToleranceProfile::solved(), 1)));
}

TEST_CASE("G2 ring at n = 168 crosses itself", "[verifier]") {
  const Solved& s = solved_g2();
  SolveOptions options;
  options.compute_rigidity = false;
  const SolveResult at168 = continue_in_n(s.t.linkage, s.result, 168, options);
  const UnitGraph ring = ring_assemble(mirror_close(s.t.linkage, at168), at168.spec);
  const VerificationReport r = verify(ring, ToleranceProfile::solved());
  CHECK(r.unit);
  CHECK(r.regular4);
  CHECK_FALSE(r.planar);
  REQUIRE_FALSE(r.scan.crossings.empty());
  CHECK(r.scan.crossings.front().relation == SegmentRelation::ProperCrossing);
  CHECK(verdict_exit_code(r) == 3);
}

TEST_CASE("reports render", "[verifier]") {
  const VerificationReport r = verify(load_fixture("G2"), ToleranceProfile::fixture());
  const std::string json = report_json(r);
  CHECK(json.find("\"regular4\"") != std::string::npos);
  CHECK(json.find("\"profile\": \"fixture\"") != std::string::npos);
  const std::string text = report_text(r);
  CHECK(text.find("regular4") != std::string::npos);
}
