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

#include "matchstick/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "matchstick/error.hpp"

namespace matchstick {

Triangle make_triangle(VertexId a, VertexId b, VertexId c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<std::vector<VertexId>> UnitGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(vertices.size());
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> UnitGraph::degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

VertexId UnitGraph::label(std::string_view name) const {
  auto found = find_label(name);
  if (!found) {
    throw Error(ErrorCode::MissingLabels,
                "graph has no vertex labelled '" + std::string(name) + "'");
  }
  return *found;
}

std::optional<VertexId> UnitGraph::find_label(std::string_view name) const {
  auto it = labels.find(std::string(name));
  if (it == labels.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> UnitGraph::meta_value(std::string_view key) const {
  auto it = meta.find(std::string(key));
  if (it == meta.end()) return std::nullopt;
  return it->second;
}

void UnitGraph::canonicalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (Triangle& t : triangles) t = make_triangle(t[0], t[1], t[2]);
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
}

void validate(const UnitGraph& g) {
  const std::size_t n = g.vertices.size();
  std::set<Edge> seen;
  for (const Edge& e : g.edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::InvalidGraph, "edge index out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "self-loop edge");
    if (!seen.insert(e).second) throw Error(ErrorCode::InvalidGraph, "duplicate edge");
  }
  for (const Triangle& t : g.triangles) {
    for (int i = 0; i < 3; ++i) {
      const Edge side(t[i], t[(i + 1) % 3]);
      if (t[i] >= n || !seen.contains(side)) {
        throw Error(ErrorCode::InvalidGraph,
                    "designated triangle side is not an edge");
      }
    }
  }
  for (const auto& [name, v] : g.labels) {
    if (v >= n) throw Error(ErrorCode::InvalidGraph, "label '" + name + "' out of range");
  }
}

std::vector<AngleMark> angle_marks(const UnitGraph& g) {
  std::vector<AngleMark> marks;
  auto text = g.meta_value("angle_marks");
  if (!text) return marks;
  std::istringstream in(*text);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::ParseError, "bad angle mark '" + token + "'");
    }
    AngleMark mark;
    mark.name = token.substr(0, colon);
    char c1 = 0, c2 = 0;
    std::istringstream ids(token.substr(colon + 1));
    if (!(ids >> mark.from >> c1 >> mark.vertex >> c2 >> mark.to) || c1 != ',' ||
        c2 != ',') {
      throw Error(ErrorCode::ParseError, "bad angle mark '" + token + "'");
    }
    marks.push_back(std::move(mark));
  }
  return marks;
}

void set_angle_marks(UnitGraph& g, const std::vector<AngleMark>& marks) {
  std::string text;
  for (const AngleMark& m : marks) {
    if (!text.empty()) text += ' ';
    text += m.name + ':' + std::to_string(m.from) + ',' + std::to_string(m.vertex) +
            ',' + std::to_string(m.to);
  }
  if (text.empty()) {
    g.meta.erase("angle_marks");
  } else {
    g.meta["angle_marks"] = text;
  }
}

std::map<int, std::size_t> degree_histogram(const UnitGraph& g) {
  std::map<int, std::size_t> hist;
  for (int d : g.degrees()) ++hist[d];
  return hist;
}

std::vector<Triangle> three_cycles(const UnitGraph& g) {
  const auto adj = g.adjacency();
  std::vector<Triangle> out;
  for (const Edge& e : g.edges) {
    const auto& a = adj[e.u];
    const auto& b = adj[e.v];
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    for (VertexId w : common) {
      if (w > e.v) out.push_back(make_triangle(e.u, e.v, w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> unit_three_cycles(const UnitGraph& g, const Scalar& tol) {
  std::vector<Triangle> out;
  for (const Triangle& t : three_cycles(g)) {
    bool unit = true;
    for (int i = 0; i < 3 && unit; ++i) {
      const Scalar len = distance(g.vertices[t[i]], g.vertices[t[(i + 1) % 3]]);
      unit = abs(len - 1) <= tol;
    }
    if (unit) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "fixture line " + std::to_string(line) + ": " + what);
}

// Counts edge-disjoint exact covers of the edge set by the given 3-cycles,
// stopping at two. `chosen` receives the first cover found.
void exact_cover(const std::vector<Triangle>& cycles,
                 const std::vector<std::vector<std::size_t>>& cycles_of_edge,
                 const std::map<Edge, std::size_t>& edge_index,
                 std::vector<bool>& covered, std::vector<std::size_t>& stack,
                 std::vector<std::size_t>& chosen, int& solutions) {
  if (solutions >= 2) return;
  const auto next = std::find(covered.begin(), covered.end(), false);
  if (next == covered.end()) {
    if (solutions == 0) chosen = stack;
    ++solutions;
    return;
  }
  const std::size_t e = static_cast<std::size_t>(next - covered.begin());
  for (std::size_t c : cycles_of_edge[e]) {
    const Triangle& t = cycles[c];
    const std::array<std::size_t, 3> sides{edge_index.at(Edge(t[0], t[1])),
                                           edge_index.at(Edge(t[1], t[2])),
                                           edge_index.at(Edge(t[0], t[2]))};
    if (covered[sides[0]] || covered[sides[1]] || covered[sides[2]]) continue;
    for (auto s : sides) covered[s] = true;
    stack.push_back(c);
    exact_cover(cycles, cycles_of_edge, edge_index, covered, stack, chosen, solutions);
    stack.pop_back();
    for (auto s : sides) covered[s] = false;
  }
}

std::vector<Triangle> triangle_decomposition(const UnitGraph& g, const std::string& name) {
  const auto cycles = three_cycles(g);
  std::map<Edge, std::size_t> edge_index;
  for (std::size_t i = 0; i < g.edges.size(); ++i) edge_index[g.edges[i]] = i;
  std::vector<std::vector<std::size_t>> cycles_of_edge(g.edges.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const Triangle& t = cycles[c];
    cycles_of_edge[edge_index.at(Edge(t[0], t[1]))].push_back(c);
    cycles_of_edge[edge_index.at(Edge(t[1], t[2]))].push_back(c);
    cycles_of_edge[edge_index.at(Edge(t[0], t[2]))].push_back(c);
  }
  std::vector<bool> covered(g.edges.size(), false);
  std::vector<std::size_t> stack, chosen;
  int solutions = 0;
  exact_cover(cycles, cycles_of_edge, edge_index, covered, stack, chosen, solutions);
  if (solutions != 1) {
    throw Error(ErrorCode::ParseError,
                "fixture '" + name + "': edge set has " +
                    (solutions == 0 ? std::string("no") : std::string("no unique")) +
                    " decomposition into unit triangles");
  }
  std::vector<Triangle> out;
  for (std::size_t c : chosen) out.push_back(cycles[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RawFixture parse_raw_fixture(std::string_view text) {
  RawFixture raw;
  enum class Section { Header, Edges, Vertices, Angles } section = Section::Header;
  std::istringstream in{std::string(text)};
  std::string line_text;
  std::size_t line_no = 0;
  bool have_name = false;
  while (std::getline(in, line_text)) {
    ++line_no;
    const std::string line = trim(line_text);
    if (line.empty() || line[0] == '#') continue;
    if (line == "[edges]") { section = Section::Edges; continue; }
    if (line == "[vertices]") { section = Section::Vertices; continue; }
    if (line == "[angles]") { section = Section::Angles; continue; }
    std::istringstream row(line);
    switch (section) {
      case Section::Header: {
        std::string key;
        row >> key;
        if (key == "name") {
          row >> raw.name;
          have_name = !raw.name.empty();
        } else if (key == "precision") {
          std::string value;
          row >> value;
          if (value == "high") raw.precision = PrecisionClass::High;
          else if (value == "sketch") raw.precision = PrecisionClass::Sketch;
          else fail_line(line_no, "unknown precision class '" + value + "'");
        } else if (key == "triangles") {
          if (!(row >> raw.declared_triangles)) fail_line(line_no, "bad triangle count");
        } else if (key == "labels") {
          std::string token;
          while (row >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos) fail_line(line_no, "bad label '" + token + "'");
            try {
              raw.label_rows.emplace_back(token.substr(0, eq), std::stoi(token.substr(eq + 1)));
            } catch (const std::exception&) {
              fail_line(line_no, "bad label '" + token + "'");
            }
          }
        } else {
          fail_line(line_no, "unknown header key '" + key + "'");
        }
        break;
      }
      case Section::Edges: {
        int a = 0, b = 0;
        if (!(row >> a >> b)) fail_line(line_no, "bad edge row");
        raw.edge_rows.emplace_back(a, b);
        break;
      }
      case Section::Vertices: {
        RawVertexRow v;
        if (!(row >> v.id >> v.x >> v.y)) fail_line(line_no, "bad coordinate row");
        // Row 0 is the figure's label anchor, not a vertex.
        if (v.id != 0) raw.vertex_rows.push_back(std::move(v));
        break;
      }
      case Section::Angles: {
        RawAngleRow a;
        if (!(row >> a.from >> a.vertex >> a.to >> a.name)) fail_line(line_no, "bad angle row");
        raw.angle_rows.push_back(std::move(a));
        break;
      }
    }
  }
  if (!have_name) throw Error(ErrorCode::ParseError, "fixture has no name");
  return raw;
}

UnitGraph ingest_fixture(const RawFixture& raw) {
  const std::size_t rows = raw.vertex_rows.size();
  std::vector<Point> coords;
  coords.reserve(rows);
  std::map<int, std::size_t> row_of_id;
  for (std::size_t i = 0; i < rows; ++i) {
    const RawVertexRow& r = raw.vertex_rows[i];
    if (!row_of_id.emplace(r.id, i).second) {
      throw Error(ErrorCode::ParseError, "duplicate coordinate row id " + std::to_string(r.id));
    }
    coords.push_back({parse_scalar(r.x), parse_scalar(r.y)});
  }

  // Union-find over all pairs closer than the dedup tolerance.
  const Scalar tol(kDedupTolerance);
  std::vector<std::size_t> parent(rows);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i + 1; j < rows; ++j) {
      if (distance(coords[i], coords[j]) < tol) {
        const auto a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i + 1; j < rows; ++j) {
      if (find(i) == find(j) && distance(coords[i], coords[j]) >= tol) {
        throw Error(ErrorCode::MergeAmbiguity,
                    "merge chain joins rows " + std::to_string(raw.vertex_rows[i].id) +
                        " and " + std::to_string(raw.vertex_rows[j].id) +
                        " which are farther apart than the dedup tolerance");
      }
    }
  }

  UnitGraph g;
  std::vector<std::size_t> index_of_row(rows);
  std::map<std::size_t, std::size_t> index_of_root;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto root = find(i);
    auto [it, inserted] = index_of_root.emplace(root, g.vertices.size());
    if (inserted) g.vertices.push_back(coords[root]);
    index_of_row[i] = it->second;
  }
  auto vertex_of = [&](int id) -> VertexId {
    auto it = row_of_id.find(id);
    if (it == row_of_id.end()) {
      throw Error(ErrorCode::ParseError, "fixture '" + raw.name + "' references unknown row " +
                                             std::to_string(id));
    }
    return index_of_row[it->second];
  };

  for (const auto& [a, b] : raw.edge_rows) {
    const VertexId u = vertex_of(a), v = vertex_of(b);
    if (u != v) g.edges.emplace_back(u, v);
  }
  g.canonicalize();

  for (const auto& [name, id] : raw.label_rows) g.labels[name] = vertex_of(id);

  std::vector<AngleMark> marks;
  for (const RawAngleRow& a : raw.angle_rows) {
    marks.push_back({a.name, vertex_of(a.from), vertex_of(a.vertex), vertex_of(a.to)});
  }
  set_angle_marks(g, marks);

  if (raw.precision == PrecisionClass::High) {
    g.triangles = unit_three_cycles(g, Scalar("1e-12"));
  } else {
    g.triangles = triangle_decomposition(g, raw.name);
    if (static_cast<int>(g.triangles.size()) != raw.declared_triangles) {
      throw Error(ErrorCode::ParseError,
                  "fixture '" + raw.name + "': decomposition has " +
                      std::to_string(g.triangles.size()) + " triangles, declared " +
                      std::to_string(raw.declared_triangles));
    }
  }

  std::string row_map;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!row_map.empty()) row_map += ' ';
    row_map += std::to_string(raw.vertex_rows[i].id) + ':' + std::to_string(index_of_row[i]);
  }
  g.meta["kind"] = "fixture";
  g.meta["fixture"] = raw.name;
  g.meta["fixture.precision"] = raw.precision == PrecisionClass::High ? "high" : "sketch";
  g.meta["fixture.declared_triangles"] = std::to_string(raw.declared_triangles);
  g.meta["fixture.rows"] = row_map;
  validate(g);
  return g;
}

VertexId fixture_vertex(const UnitGraph& g, int row_id) {
  auto text = g.meta_value("fixture.rows");
  if (!text) throw Error(ErrorCode::MissingLabels, "graph carries no fixture row map");
  std::istringstream in(*text);
  std::string token;
  const std::string prefix = std::to_string(row_id) + ':';
  while (in >> token) {
    if (token.rfind(prefix, 0) == 0) return std::stoul(token.substr(prefix.size()));
  }
  throw Error(ErrorCode::MissingLabels, "no fixture row " + std::to_string(row_id));
}

}  // namespace matchstick
