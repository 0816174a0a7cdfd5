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

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchstick/geometry.hpp"

namespace matchstick {

using VertexId = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

/// Unordered vertex triple, stored sorted.
using Triangle = std::array<VertexId, 3>;
Triangle make_triangle(VertexId a, VertexId b, VertexId c);

/// A named vertex triple whose counter-clockwise angle is read out
/// (angle from ray vertex->from to ray vertex->to).
struct AngleMark {
  std::string name;
  VertexId from = 0;
  VertexId vertex = 0;
  VertexId to = 0;
};

/// Vertices, unit edges, designated unit triangles, role labels and
/// free-form provenance metadata. Edges and triangles are kept sorted and
/// unique.
struct UnitGraph {
  std::vector<Point> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::map<std::string, VertexId> labels;
  std::map<std::string, std::string> meta;

  std::size_t vertex_count() const { return vertices.size(); }
  std::vector<std::vector<VertexId>> adjacency() const;
  std::vector<int> degrees() const;

  VertexId label(std::string_view name) const;  // throws MissingLabels
  std::optional<VertexId> find_label(std::string_view name) const;

  std::optional<std::string> meta_value(std::string_view key) const;

  /// Sorts and de-duplicates edges and triangles.
  void canonicalize();
};

/// Throws InvalidGraph on self-loops, out-of-range indices, or designated
/// triangles whose sides are not edges.
void validate(const UnitGraph& g);

/// Angle marks are carried in meta["angle_marks"] as
/// "name:from,vertex,to" entries separated by spaces.
std::vector<AngleMark> angle_marks(const UnitGraph& g);
void set_angle_marks(UnitGraph& g, const std::vector<AngleMark>& marks);

std::map<int, std::size_t> degree_histogram(const UnitGraph& g);

/// All 3-cycles of the edge set (no length check).
std::vector<Triangle> three_cycles(const UnitGraph& g);

/// 3-cycles whose three sides are within `tol` of unit length.
std::vector<Triangle> unit_three_cycles(const UnitGraph& g, const Scalar& tol);

/// Applies p -> transform(p) to every vertex.
template <typename F>
UnitGraph transformed(UnitGraph g, F&& transform) {
  for (Point& p : g.vertices) p = transform(p);
  return g;
}

// ---------------------------------------------------------------------------
// Fixture ingestion

enum class PrecisionClass { High, Sketch };

struct RawVertexRow {
  int id = 0;
  std::string x;
  std::string y;
};

struct RawAngleRow {
  int from = 0;
  int vertex = 0;
  int to = 0;
  std::string name;
};

/// A verbatim figure table: coordinate rows, edge rows (self-loops and
/// duplicates included), declared triangle count and label rows.
struct RawFixture {
  std::string name;
  PrecisionClass precision = PrecisionClass::High;
  int declared_triangles = 0;
  std::vector<RawVertexRow> vertex_rows;
  std::vector<std::pair<int, int>> edge_rows;
  std::vector<std::pair<std::string, int>> label_rows;
  std::vector<RawAngleRow> angle_rows;
};

/// Parses the fixture text format (see data/fixtures/README.md).
RawFixture parse_raw_fixture(std::string_view text);

inline constexpr double kDedupTolerance = 1e-9;

/// Merges rows closer than 1e-9, drops self-loop and duplicate edge rows,
/// resolves labels and designates triangles: all unit 3-cycles for
/// high-precision tables, the edge-disjoint 3-cycle decomposition (checked
/// against the declared count) for sketches.
/// meta["fixture.rows"] records "row:index" for every coordinate row.
UnitGraph ingest_fixture(const RawFixture& raw);

/// Index of the merged vertex that a figure row was mapped to.
VertexId fixture_vertex(const UnitGraph& g, int row_id);

}  // namespace matchstick
