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

#include <cstddef>
#include <string>

#include "matchstick/assembler.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/linkage.hpp"

namespace matchstick::testing {

/// Merged vertex index of a figure-table row.
VertexId row(const UnitGraph& g, int fixture_row);

struct Solved {
  NamedTemplate t;
  SolveResult result;
};

/// Anchor solves from the fixture start, computed once per process with
/// the rigidity check enabled.
const Solved& solved_g2();
const Solved& solved_g1();

/// Closed and assembled rings at the anchor n, computed once per process.
const UnitGraph& g2_base();
const UnitGraph& g2_ring();
const UnitGraph& g1_ring();

UnitGraph unit_triangle();

/// Ring vertex count by brute force: all copies of all base vertices,
/// clustered pairwise at `tol` in double precision. Independent of the
/// assembler's seam bookkeeping.
std::size_t brute_force_ring_vertices(const UnitGraph& base, const RingSpec& spec, double tol);

/// |value - reference| where reference is a printed decimal (comma or point).
Scalar deviation(const Scalar& value, const std::string& reference);

}  // namespace matchstick::testing
