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
#include <vector>

#include "matchstick/graph.hpp"
#include "matchstick/linkage.hpp"

namespace matchstick {

/// Seam merge tolerance 10^(8-p).
Scalar merge_tolerance();

inline constexpr double kFixtureSeamTolerance = 1e-12;
inline constexpr double kSketchSeamTolerance = 0.05;

/// Seam tolerance for a chain piece: merge_tolerance() for computed graphs,
/// the data accuracy for pieces that carry figure-table coordinates.
Scalar seam_tolerance(const UnitGraph& g);

/// Solved half plus its mirror image across the axis, axis vertices shared.
/// Designated triangles are the unit 3-cycles of the result. Throws
/// SeamMismatch when the template has no axis vertices or a mirrored edge is
/// not of unit length within 10^(10-p).
UnitGraph mirror_close(const LinkageTemplate& t, const SolveResult& solved);

/// Rail apex recorded in a base or ring graph's metadata.
Point ring_apex(const UnitGraph& g);

/// Union of rotated copies k*omega (k = 0..copies-1, copies defaulting to
/// n) about the apex. Copy k+1's g1 rail vertices are merged into copy k's
/// g2 rail vertices; for a full ring copy 0 closes onto copy n-1. Vertices
/// are numbered copy-major and a merged vertex keeps the lowest
/// (copy, index). Throws MergeFailure or UnexpectedCollision.
UnitGraph ring_assemble(const UnitGraph& base, const RingSpec& spec,
                        std::optional<int> copies = std::nullopt);

/// Largest distance from a rotated vertex to its nearest vertex.
Scalar rotation_defect(const UnitGraph& g, const Point& center, const Scalar& angle);

/// Reflects every vertex strictly below BE across g3, the perpendicular
/// bisector of BE. Edges from a reflected vertex to an axis vertex are
/// re-attached to the mirrored axis vertex; labels C and D swap roles.
/// Throws AsymmetricFixture when the axis is not symmetric about g3.
UnitGraph make_adapter(const UnitGraph& base);

/// The other-handed adapter: reflection across BE with A/C and F/D swapped.
UnitGraph mirror_adapter(const UnitGraph& adapter);

/// Unit direction vectors of the two rails (F->A and D->C).
std::pair<Point, Point> rail_directions(const UnitGraph& g);

struct ChainPiece {
  UnitGraph graph;
  bool reversed = false;  // attach A->D, F->C instead of A->C, F->D
};

/// Attaches each piece's g1 rail (A..F) onto the previous piece's g2 rail
/// (C..D) with the rigid motion that puts the new piece across the seam.
/// Seams match within the largest seam_tolerance() of the pieces. Throws
/// SeamMismatch or UnexpectedCollision.
UnitGraph chain_assemble(const std::vector<ChainPiece>& pieces);

/// Compares two graphs after aligning b onto a by the rigid motion taking
/// b's B and E onto a's. Returns the largest vertex mismatch, or nullopt if
/// vertex or edge sets do not correspond within 1e-6.
std::optional<Scalar> aligned_distance(const UnitGraph& a, const UnitGraph& b);

}  // namespace matchstick
