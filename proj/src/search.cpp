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

#include "matchstick/search.hpp"

#include <iomanip>
#include <sstream>

#include "matchstick/assembler.hpp"
#include "matchstick/error.hpp"

namespace matchstick {

namespace {

std::string first_witness(const VerificationReport& r) {
  std::ostringstream os;
  const auto& s = r.scan;
  if (!s.crossings.empty()) {
    const auto& c = s.crossings.front();
    os << to_string(c.relation) << " " << c.first.u << "-" << c.first.v << " x " << c.second.u
       << "-" << c.second.v;
  } else if (!s.coincidences.empty()) {
    const auto& p = s.coincidences.front();
    os << "coincident " << p.u << "," << p.v << " d=" << format_scalar(p.distance, 4);
  } else if (!s.incidences.empty()) {
    const auto& p = s.incidences.front();
    os << "vertex " << p.vertex << " on edge " << p.edge.u << "-" << p.edge.v
       << " d=" << format_scalar(p.distance, 4);
  } else if (!s.indeterminate_pairs.empty()) {
    const auto& p = s.indeterminate_pairs.front();
    os << "indeterminate " << p.u << "," << p.v << " d=" << format_scalar(p.distance, 4);
  } else if (!s.indeterminate_edges.empty()) {
    const auto& p = s.indeterminate_edges.front();
    os << "indeterminate vertex " << p.vertex << " edge " << p.edge.u << "-" << p.edge.v
       << " d=" << format_scalar(p.distance, 4);
  } else if (!r.unit) {
    os << "max |len-1| " << format_scalar(r.max_unit_error, 4);
  } else if (!r.regular4) {
    os << "not 4-regular";
  } else if (!r.no_additional) {
    os << r.additional.size() << " additional triangles";
  }
  return os.str();
}

void evaluate(const NamedTemplate& t, const SolveResult& solved, const SearchOptions& options,
              SearchRow& row) {
  row.solved = true;
  row.gh = extract_angles(t.linkage, solved).gh;
  UnitGraph ring;
  try {
    ring = ring_assemble(mirror_close(t.linkage, solved), solved.spec, std::nullopt);
  } catch (const Error& e) {
    row.note = e.what();
    return;
  }
  row.assembled = true;
  row.triangles = ring.triangles.size();
  row.report = verify(ring, options.profile, options.threads);
  row.pass = options.criteria.accepts(*row.report);
  if (!row.pass) row.note = first_witness(*row.report);
}

}  // namespace

bool VerdictSet::accepts(const VerificationReport& r) const {
  return (!unit || r.unit) && (!regular4 || r.regular4) && (!planar || r.planar) &&
         (!no_additional || r.no_additional);
}

SearchResult sweep_n(const NamedTemplate& t, int from, int to, const SearchOptions& options) {
  if (from > to) throw std::invalid_argument("empty n range");
  if (from < 3) throw std::invalid_argument("n must be at least 3");
  SearchResult result;
  for (int n = from; n <= to; ++n) {
    SearchRow row;
    row.n = n;
    result.rows.push_back(std::move(row));
  }
  auto row_of = [&](int n) -> SearchRow* {
    return n >= from && n <= to ? &result.rows[n - from] : nullptr;
  };

  SolveOptions quick;
  quick.compute_rigidity = false;
  const SolveResult anchor =
      solve(t.linkage, RingSpec::for_n(t.anchor_n), t.linkage.initial_state(), quick);
  if (SearchRow* row = row_of(t.anchor_n)) evaluate(t, anchor, options, *row);

  // Walk outward from the anchor in both directions; once continuation
  // fails, the remaining n on that side are unreachable.
  for (int direction : {-1, 1}) {
    SolveResult current = anchor;
    std::string stopped;
    for (int n = t.anchor_n + direction; direction < 0 ? n >= from : n <= to; n += direction) {
      SearchRow* row = row_of(n);
      if (!stopped.empty()) {
        if (row) row->note = stopped;
        continue;
      }
      try {
        current = continue_in_n(t.linkage, current, n, quick);
      } catch (const Error& e) {
        stopped = "continuation stopped: " + std::string(e.what());
        if (row) row->note = stopped;
        continue;
      }
      if (row) evaluate(t, current, options, *row);
    }
  }
  for (const SearchRow& row : result.rows) {
    if (row.pass) {
      result.minimal = row.n;
      break;
    }
  }
  return result;
}

SearchResult minimal_n_search(const NamedTemplate& t, int from, int to,
                              const SearchOptions& options) {
  SearchResult result = sweep_n(t, from, to, options);
  if (!result.minimal) {
    throw Error(ErrorCode::NoPassingN, "no n in [" + std::to_string(from) + ", " +
                                           std::to_string(to) + "] passes certification");
  }
  return result;
}

std::string search_table(const SearchResult& result) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << std::setw(8) << "solved" << std::setw(10) << "triangles"
     << std::setw(6) << "unit" << std::setw(6) << "reg4" << std::setw(8) << "planar" << std::setw(8)
     << "no_add" << std::setw(24) << "GH" << std::setw(6) << "pass"
     << "note\n";
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  for (const SearchRow& row : result.rows) {
    os << std::setw(6) << row.n << std::setw(8) << flag(row.solved) << std::setw(10)
       << (row.triangles ? std::to_string(*row.triangles) : "-");
    if (row.report) {
      os << std::setw(6) << flag(row.report->unit) << std::setw(6) << flag(row.report->regular4)
         << std::setw(8) << flag(row.report->planar) << std::setw(8)
         << flag(row.report->no_additional);
    } else {
      os << std::setw(6) << "-" << std::setw(6) << "-" << std::setw(8) << "-" << std::setw(8) << "-";
    }
    os << std::setw(24) << (row.gh ? format_scalar(*row.gh, 16) : "-") << std::setw(6)
       << (row.pass ? "PASS" : "fail") << row.note << "\n";
  }
  if (result.minimal) {
    os << "minimal n: " << *result.minimal << "\n";
  } else {
    os << "minimal n: none\n";
  }
  return os.str();
}

}  // namespace matchstick
