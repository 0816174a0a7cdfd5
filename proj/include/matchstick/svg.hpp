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

#include <string>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

struct SvgOptions {
  double scale = 40.0;      // pixels per unit length
  double stroke = 0.02;     // edge width in units
  bool highlight = true;    // mark the near misses shown in insets
  int insets = 4;           // number of magnified views
  double inset_size = 220;  // pixels
};

/// A magnified view centred on one of the smallest separations.
struct SvgInset {
  Point center;
  Scalar separation;
  VertexId vertex = 0;
  std::string partner;  // "v:<id>" or "e:<u>-<v>"
};

/// Picks up to `count` smallest non-adjacent vertex-vertex and vertex-edge
/// separations with well separated centres, smallest first.
std::vector<SvgInset> choose_insets(const UnitGraph& g, int count);

/// SVG 1.1 document: a <g id="main"> with one polygon per designated
/// triangle, one line per edge and one circle per vertex, followed by one
/// <g class="inset"> per magnified view.
std::string export_svg(const UnitGraph& g, const SvgOptions& options = {});

}  // namespace matchstick
