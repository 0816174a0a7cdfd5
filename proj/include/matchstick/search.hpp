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

#include "matchstick/linkage.hpp"
#include "matchstick/verifier.hpp"

namespace matchstick {

/// Which verdicts a sweep requires.
struct VerdictSet {
  bool unit = true;
  bool regular4 = true;
  bool planar = true;
  bool no_additional = true;

  bool accepts(const VerificationReport& r) const;
};

struct SearchOptions {
  ToleranceProfile profile = ToleranceProfile::solved();
  VerdictSet criteria;
  int threads = 1;
};

struct SearchRow {
  int n = 0;
  bool solved = false;
  bool assembled = false;
  bool pass = false;
  std::optional<Scalar> gh;
  std::optional<std::size_t> triangles;
  std::optional<VerificationReport> report;
  std::string note;  // failure reason or first witness
};

struct SearchResult {
  std::vector<SearchRow> rows;  // ascending n
  std::optional<int> minimal;
};

/// Solves the anchor configuration, walks n outward from the anchor by
/// continuation, assembles and verifies the ring for every n in [from, to].
/// Rows are filled even when the range has no passing n.
SearchResult sweep_n(const NamedTemplate& t, int from, int to, const SearchOptions& options = {});

/// sweep_n, throwing NoPassingN when nothing in range passes.
SearchResult minimal_n_search(const NamedTemplate& t, int from, int to,
                              const SearchOptions& options = {});

/// Plain-text verdict table, one row per n.
std::string search_table(const SearchResult& result);

}  // namespace matchstick
