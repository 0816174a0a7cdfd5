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

#include <optional>
#include <string>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

/// Thresholds used by the verifier. Separations below `incidence` are
/// incidences, separations at or above `clearance` are certified gaps and
/// anything in between is indeterminate.
struct ToleranceProfile {
  std::string name;
  Scalar unit;
  Scalar incidence;
  Scalar clearance;
  Scalar census;
  Scalar collinear;

  static ToleranceProfile solved();
  static ToleranceProfile fixture();
  static ToleranceProfile sketch();
  /// "solved", "fixture" or "sketch"; throws std::invalid_argument otherwise.
  static ToleranceProfile by_name(const std::string& name);
};

struct VertexPair {
  VertexId u = 0;
  VertexId v = 0;
  Scalar distance;
};

struct VertexEdge {
  VertexId vertex = 0;
  Edge edge;
  Scalar distance;
};

struct EdgeCrossing {
  Edge first;
  Edge second;
  SegmentRelation relation = SegmentRelation::Disjoint;
};

struct Separations {
  std::optional<VertexPair> vertex_vertex;
  std::optional<VertexEdge> vertex_edge;
};

struct CrossingScan {
  std::vector<EdgeCrossing> crossings;
  std::vector<VertexEdge> incidences;
  std::vector<VertexPair> coincidences;
  std::vector<VertexPair> indeterminate_pairs;
  std::vector<VertexEdge> indeterminate_edges;

  bool operator==(const CrossingScan& other) const;
};

struct AdditionalTriangle {
  int side = 1;
  Triangle corners{};
  std::vector<VertexId> vertices;
};

struct VerificationReport {
  std::string profile;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<int, std::size_t> degrees;
  Scalar max_unit_error;
  std::optional<Edge> worst_edge;
  Separations separations;
  CrossingScan scan;
  std::size_t unit_cycles = 0;
  std::size_t designated = 0;
  std::vector<AdditionalTriangle> additional;

  bool unit = false;
  bool regular4 = false;
  bool planar = false;
  bool no_additional = false;

  /// True when planarity failed only because of indeterminate separations.
  bool indeterminate_only() const;
};

/// Minimum distance over distinct vertex pairs and over (vertex, edge) pairs
/// where the vertex is not an endpoint, with the lowest-index witnesses.
Separations min_separations(const UnitGraph& g, int threads = 1);

/// Grid-prefiltered scan of crossings, vertex-on-edge incidences, coincident
/// vertices and indeterminate separations. Edge pairs sharing an endpoint
/// are skipped. Lists are sorted canonically.
CrossingScan crossing_scan(const UnitGraph& g, const ToleranceProfile& prof, int threads = 1);

/// The same scan over all pairs at full precision.
CrossingScan crossing_scan_bruteforce(const UnitGraph& g, const ToleranceProfile& prof);

/// Unit 3-cycles that are not designated, then equilateral triangles of side
/// s >= 2 whose sides are collinear edge chains of s edges each.
std::vector<AdditionalTriangle> additional_triangle_scan(const UnitGraph& g,
                                                         const ToleranceProfile& prof);

VerificationReport verify(const UnitGraph& g, const ToleranceProfile& prof, int threads = 1);

/// JSON document with sorted keys; scalars are decimal strings.
std::string report_json(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

/// 0 when every verdict holds, else 1 unit, 2 degree, 3 planar, 4
/// additional triangles, 5 indeterminate separations.
int verdict_exit_code(const VerificationReport& report);

}  // namespace matchstick
