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

#include <filesystem>
#include <string>
#include <string_view>

#include "matchstick/graph.hpp"

namespace matchstick {

inline constexpr int kGraphFormatVersion = 1;

/// A parsed graph file and the precision (significant digits) recorded in
/// its header. Coordinates are parsed at the current working precision.
struct GraphDocument {
  UnitGraph graph;
  unsigned precision = kDefaultPrecision;
};

/// Serializes `g` in the msgraph text format (see docs/graph-format.md)
/// with coordinates written with enough digits to be restored exactly.
std::string format_graph(const UnitGraph& g);

/// Throws ParseError (with line context) or VersionError.
GraphDocument parse_graph(std::string_view text);

/// Reads only the header precision. Throws ParseError / VersionError.
unsigned peek_precision(std::string_view text);

void write_graph(const UnitGraph& g, const std::filesystem::path& path);
UnitGraph read_graph(const std::filesystem::path& path);

/// Whole-file helpers shared by the command-line tool.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace matchstick
