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

#include "matchstick/fixtures.hpp"

#include <algorithm>

#include "matchstick/error.hpp"
#include "fixture_data.hpp"

namespace matchstick {

const std::vector<FixtureInfo>& fixture_registry() {
  static const std::vector<FixtureInfo> registry = [] {
    std::vector<FixtureInfo> out;
    for (const auto& entry : detail::kFixtureTexts) {
      const RawFixture raw = parse_raw_fixture(entry.text);
      out.push_back({raw.name, raw.precision, raw.declared_triangles});
    }
    return out;
  }();
  return registry;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& entry : detail::kFixtureTexts) {
    if (entry.name == name) return entry.text;
  }
  std::string known;
  for (const auto& entry : detail::kFixtureTexts) {
    known += known.empty() ? "" : ", ";
    known += entry.name;
  }
  throw Error(ErrorCode::UnknownFixture,
              "no fixture named '" + std::string(name) + "' (known: " + known + ")");
}

RawFixture load_raw_fixture(std::string_view name) {
  return parse_raw_fixture(fixture_text(name));
}

UnitGraph load_fixture(std::string_view name) {
  return ingest_fixture(load_raw_fixture(name));
}

}  // namespace matchstick
