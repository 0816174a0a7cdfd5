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
#include <string_view>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

struct FixtureInfo {
  std::string name;
  PrecisionClass precision;
  int declared_triangles;
};

/// Built-in figure tables, in registry order.
const std::vector<FixtureInfo>& fixture_registry();

/// Verbatim fixture text. Throws UnknownFixture.
std::string_view fixture_text(std::string_view name);

RawFixture load_raw_fixture(std::string_view name);

/// Parsed and ingested fixture at the current working precision.
UnitGraph load_fixture(std::string_view name);

}  // namespace matchstick
