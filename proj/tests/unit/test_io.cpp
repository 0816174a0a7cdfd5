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
#include <chrono>
#include <filesystem>

#include "matchstick/error.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/graph_io.hpp"
#include "matchstick/svg.hpp"
#include "matchstick/verifier.hpp"
#include "support/support.hpp"

using namespace matchstick;
using namespace matchstick::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no matchstick::Error thrown");
  return ErrorCode::InvalidGraph;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::size_t count(std::string_view text, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string_view::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string_view main_group(std::string_view svg) {
  const auto begin = svg.find("<g id=\"main\">");
  const auto end = svg.find("</g>", begin);
  REQUIRE(begin != std::string_view::npos);
  REQUIRE(end != std::string_view::npos);
  return svg.substr(begin, end - begin);
}

bool same_points(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; });
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "matchstick-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("G2 graph file round trip", "[io]") {
  const UnitGraph g = load_fixture("G2");
  const std::string text = format_graph(g);
  CHECK(text.rfind("msgraph 1\n", 0) == 0);
  const GraphDocument doc = parse_graph(text);
  CHECK(doc.precision == precision());
  CHECK(same_points(doc.graph.vertices, g.vertices));
  CHECK(doc.graph.edges == g.edges);
  CHECK(doc.graph.triangles == g.triangles);
  CHECK(doc.graph.labels == g.labels);
  CHECK(doc.graph.meta == g.meta);
  CHECK(format_graph(doc.graph) == text);
  CHECK(peek_precision(text) == precision());
}

TEST_CASE("metadata with awkward characters survives", "[io]") {
  UnitGraph g = unit_triangle();
  g.meta["key with space"] = "line one\nline two \\ end";
  g.labels["A B"] = 2;
  const GraphDocument doc = parse_graph(format_graph(g));
  CHECK(doc.graph.meta == g.meta);
  CHECK(doc.graph.labels == g.labels);
}

TEST_CASE("an empty graph round-trips", "[io]") {
  const UnitGraph empty;
  const GraphDocument doc = parse_graph(format_graph(empty));
  CHECK(doc.graph.vertices.empty());
  CHECK(doc.graph.edges.empty());
  CHECK(format_graph(doc.graph) == format_graph(empty));
}

TEST_CASE("malformed graph files are rejected", "[io]") {
  const std::string good = format_graph(unit_triangle());
  std::string wrong_version = good;
  wrong_version.replace(0, 9, "msgraph 7");
  CHECK(code_of([&] { parse_graph(wrong_version); }) == ErrorCode::VersionError);
  CHECK(code_of([&] { peek_precision(wrong_version); }) == ErrorCode::VersionError);

  CHECK(code_of([] { parse_graph(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph("not a graph\n"); }) == ErrorCode::ParseError);

  std::string truncated = good.substr(0, good.find("edges"));
  CHECK(code_of([&] { parse_graph(truncated); }) == ErrorCode::ParseError);

  std::string bad_number = good;
  bad_number.replace(bad_number.find("vertices 3\n") + 11, 1, "x");
  CHECK(message_of([&] { parse_graph(bad_number); }).find("line 4") != std::string::npos);

  std::string dangling = good;
  dangling.replace(dangling.find("edges 3\n") + 8, 3, "0 9");
  CHECK(code_of([&] { parse_graph(dangling); }) == ErrorCode::ParseError);
}

TEST_CASE("a reloaded ring verifies identically", "[io]") {
  const auto path = scratch("ring169.msg");
  write_graph(g2_ring(), path);
  const UnitGraph back = read_graph(path);
  CHECK(same_points(back.vertices, g2_ring().vertices));
  CHECK(back.edges == g2_ring().edges);
  CHECK(report_json(verify(back, ToleranceProfile::solved())) ==
        report_json(verify(g2_ring(), ToleranceProfile::solved())));
  std::filesystem::remove(path);
  CHECK_THROWS(read_graph(path));
}

TEST_CASE("svg of a unit triangle", "[svg]") {
  SvgOptions options;
  options.insets = 0;
  const std::string svg = export_svg(unit_triangle(), options);
  CHECK(svg.rfind("<?xml", 0) == 0);
  const auto body = main_group(svg);
  CHECK(count(body, "<line class=\"edge\"") == 3);
  CHECK(count(body, "<circle class=\"vtx\"") == 3);
  CHECK(count(body, "<polygon class=\"tri\"") == 1);
  CHECK(count(svg, "class=\"inset\"") == 0);
}

TEST_CASE("svg insets start at the tightest separation", "[svg]") {
  const UnitGraph g = load_fixture("G2");
  const auto insets = choose_insets(g, 4);
  REQUIRE_FALSE(insets.empty());
  CHECK(insets.front().separation < Scalar("1e-4"));
  for (std::size_t i = 1; i < insets.size(); ++i) CHECK(insets[i - 1].separation <= insets[i].separation);
  const Point gh = g.vertices[g.label("G")];
  CHECK(distance(insets.front().center, gh) < Scalar("1e-3"));

  const std::string svg = export_svg(g);
  CHECK(count(svg, "class=\"inset\"") == insets.size());
  CHECK(count(main_group(svg), "<polygon class=\"tri\"") == g.triangles.size());
}

TEST_CASE("svg of the full ring", "[svg]") {
  const auto start = std::chrono::steady_clock::now();
  const std::string svg = export_svg(g2_ring());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(count(main_group(svg), "<polygon class=\"tri\"") == 6422);
  CHECK(count(main_group(svg), "<line class=\"edge\"") == 19266);
  CHECK(seconds < 10.0);
}
