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

#include "matchstick/assembler.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matchstick/error.hpp"
#include "spatial.hpp"

namespace matchstick {

namespace {

constexpr double kSideTolerance = 1e-9;
constexpr double kAxisMirrorTolerance = 1e-12;
constexpr double kAlignTolerance = 1e-6;

Point unit(const Point& p) { return Scalar(1) / norm(p) * p; }

Point centroid(const std::vector<Point>& points) {
  Point c{Scalar(0), Scalar(0)};
  for (const Point& p : points) c = c + p;
  return Scalar(1) / Scalar(points.size()) * c;
}

/// Index of the vertex nearest to `target` among grid candidates within
/// `radius`, or nullopt.
std::optional<std::pair<std::size_t, Scalar>> nearest(const std::vector<Point>& points,
                                                      const detail::PointGrid& grid,
                                                      const Point& target, double radius) {
  std::optional<std::pair<std::size_t, Scalar>> best;
  const double tx = target.x.convert_to<double>();
  const double ty = target.y.convert_to<double>();
  grid.near(tx, ty, radius, [&](std::size_t j) {
    if (std::abs(grid.x(j) - tx) > radius || std::abs(grid.y(j) - ty) > radius) return;
    const Scalar d = distance(points[j], target);
    if (!best || d < best->second || (d == best->second && j < best->first)) best = {{j, d}};
  });
  return best;
}

void check_collisions(const std::vector<Point>& points, std::size_t first_new) {
  const Scalar dedup(kDedupTolerance);
  const detail::PointGrid grid(points, 0.5);
  for (std::size_t i = first_new; i < points.size(); ++i) {
    grid.near(grid.x(i), grid.y(i), 1e-6, [&](std::size_t j) {
      if (j == i || (j >= first_new && j < i)) return;
      if (distance(points[i], points[j]) < dedup) {
        throw Error(ErrorCode::UnexpectedCollision,
                    "vertices " + std::to_string(j) + " and " + std::to_string(i) +
                        " coincide but are not a seam pair");
      }
    });
  }
}

Scalar meta_scalar(const UnitGraph& g, const std::string& key) {
  auto value = g.meta_value(key);
  if (!value) throw Error(ErrorCode::InvalidGraph, "graph metadata lacks '" + key + "'");
  return parse_scalar(*value);
}

void erase_prefix(std::map<std::string, std::string>& meta, const std::string& prefix) {
  for (auto it = meta.begin(); it != meta.end();) {
    it = it->first.rfind(prefix, 0) == 0 ? meta.erase(it) : std::next(it);
  }
}

}  // namespace

Scalar merge_tolerance() { return precision_tolerance(8); }

Scalar seam_tolerance(const UnitGraph& g) {
  const auto source = g.meta_value("fixture.precision");
  if (source == "high") return Scalar(kFixtureSeamTolerance);
  if (source == "sketch") return Scalar(kSketchSeamTolerance);
  return merge_tolerance();
}

UnitGraph mirror_close(const LinkageTemplate& t, const SolveResult& solved) {
  if (t.axis.empty()) throw Error(ErrorCode::SeamMismatch, "half has no axis vertices to glue");
  const auto coords = full_coordinates(t, solved.state);
  const Scalar tol = precision_tolerance(10);
  std::vector<bool> is_upper(coords.size(), false);
  for (VertexId v : t.upper) is_upper[v] = true;
  for (const Edge& e : t.base.edges) {
    if (is_upper[e.u] && is_upper[e.v]) continue;
    const Scalar err = abs(distance(coords[e.u], coords[e.v]) - 1);
    if (err > tol) {
      throw Error(ErrorCode::SeamMismatch, "mirrored edge (" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + ") is off unit length by " +
                                               format_scalar(err, 6));
    }
  }

  UnitGraph g;
  g.vertices = coords;
  g.edges = t.base.edges;
  g.labels = t.base.labels;
  g.meta = t.base.meta;
  erase_prefix(g.meta, "fixture.");
  g.triangles = unit_three_cycles(g, tol);
  g.meta["kind"] = "base";
  g.meta["template"] = t.name;
  g.meta["ring.n"] = std::to_string(solved.spec.n);
  g.meta["ring.omega"] = format_scalar(solved.spec.omega);
  g.meta["ring.apex.x"] = format_scalar(solved.state.back());
  g.meta["ring.apex.y"] = format_scalar(Scalar(0));
  g.meta["solve.residual"] = format_scalar(solved.residual_norm, 6);
  g.meta["solve.iterations"] = std::to_string(solved.iterations);
  if (solved.sigma_min >= 0) g.meta["solve.sigma_min"] = format_scalar(solved.sigma_min, 6);
  return g;
}

Point ring_apex(const UnitGraph& g) {
  return {meta_scalar(g, "ring.apex.x"), meta_scalar(g, "ring.apex.y")};
}

UnitGraph ring_assemble(const UnitGraph& base, const RingSpec& spec, std::optional<int> copies) {
  const int n = spec.n;
  const int count = copies.value_or(n);
  if (count < 1 || count > n) {
    throw std::invalid_argument("copy count must lie in [1, n]");
  }
  const Point apex = spec.apex();
  const Scalar tol = merge_tolerance();
  const std::size_t vcount = base.vertex_count();

  // g1 rail vertex u of copy k+1 lands on g2 rail vertex partner[u] of copy k.
  const auto degrees = base.degrees();
  std::vector<VertexId> rails;
  for (VertexId v = 0; v < vcount; ++v) {
    if (degrees[v] == 2) rails.push_back(v);
  }
  std::map<VertexId, VertexId> partner;
  std::set<VertexId> g2;
  Scalar worst(0);
  for (VertexId u : rails) {
    const Point image = rotate(base.vertices[u], apex, spec.omega);
    VertexId best = u;
    Scalar best_distance = -1;
    for (VertexId w : rails) {
      const Scalar d = distance(image, base.vertices[w]);
      if (best_distance < 0 || d < best_distance) {
        best_distance = d;
        best = w;
      }
    }
    if (best_distance <= tol) {
      partner[u] = best;
      g2.insert(best);
    } else if (best_distance < Scalar("1e-3")) {
      worst = std::max(worst, best_distance);
    }
  }
  if (partner.empty() || partner.size() * 2 != rails.size() || g2.size() != partner.size()) {
    throw Error(ErrorCode::MergeFailure,
                "rotation pairs " + std::to_string(partner.size()) + " of " +
                    std::to_string(rails.size()) + " rail vertices within " +
                    format_scalar(tol, 3) + " (worst near miss " + format_scalar(worst, 3) + ")");
  }
  std::map<VertexId, VertexId> g1_of_g2;
  for (const auto& [u, w] : partner) g1_of_g2[w] = u;

  UnitGraph ring;
  std::vector<std::vector<VertexId>> id(count, std::vector<VertexId>(vcount));
  auto check_merge = [&](const Point& expected, VertexId target) {
    const Scalar d = distance(expected, ring.vertices[target]);
    if (d > tol) {
      throw Error(ErrorCode::MergeFailure,
                  "seam vertex misses its partner by " + format_scalar(d, 3));
    }
  };
  for (int k = 0; k < count; ++k) {
    const Scalar angle = k * spec.omega;
    for (VertexId i = 0; i < vcount; ++i) {
      const Point p = k == 0 ? base.vertices[i] : rotate(base.vertices[i], apex, angle);
      auto g1 = partner.find(i);
      auto g2_hit = g1_of_g2.find(i);
      if (k > 0 && g1 != partner.end()) {
        id[k][i] = id[k - 1][g1->second];
        check_merge(p, id[k][i]);
      } else if (count == n && k == n - 1 && g2_hit != g1_of_g2.end()) {
        id[k][i] = id[0][g2_hit->second];
        check_merge(p, id[k][i]);
      } else {
        id[k][i] = ring.vertices.size();
        ring.vertices.push_back(p);
      }
    }
    for (const Edge& e : base.edges) ring.edges.emplace_back(id[k][e.u], id[k][e.v]);
    for (const Triangle& t : base.triangles) {
      ring.triangles.push_back(make_triangle(id[k][t[0]], id[k][t[1]], id[k][t[2]]));
    }
  }
  ring.canonicalize();
  check_collisions(ring.vertices, 0);

  ring.labels = base.labels;
  ring.meta = base.meta;
  ring.meta["kind"] = count == n ? "ring" : "arc";
  ring.meta["ring.n"] = std::to_string(n);
  ring.meta["ring.copies"] = std::to_string(count);
  ring.meta["ring.omega"] = format_scalar(spec.omega);
  ring.meta["ring.apex.x"] = format_scalar(apex.x);
  ring.meta["ring.apex.y"] = format_scalar(apex.y);
  ring.meta["base.triangles"] = std::to_string(base.triangles.size());
  erase_prefix(ring.meta, "fixture.");
  return ring;
}

Scalar rotation_defect(const UnitGraph& g, const Point& center, const Scalar& angle) {
  const detail::PointGrid grid(g.vertices, 0.5);
  Scalar worst(0);
  for (const Point& p : g.vertices) {
    const Point image = rotate(p, center, angle);
    auto hit = nearest(g.vertices, grid, image, 1e-3);
    Scalar d;
    if (hit) {
      d = hit->second;
    } else {
      d = distance(image, g.vertices.front());
      for (const Point& q : g.vertices) d = std::min(d, distance(image, q));
    }
    worst = std::max(worst, d);
  }
  return worst;
}

UnitGraph make_adapter(const UnitGraph& base) {
  const Point b = base.vertices[base.label("B")];
  const Point e = base.vertices[base.label("E")];
  base.label("C");
  base.label("D");
  const Line be = Line::through(b, e);
  const Line g3(Scalar("0.5") * (b + e), be.angle() + pi() / 2);
  const Scalar side_tol(kSideTolerance);

  const std::size_t n = base.vertex_count();
  std::vector<int> side(n);
  std::vector<VertexId> axis;
  for (VertexId v = 0; v < n; ++v) {
    const Scalar sd = be.signed_distance(base.vertices[v]);
    side[v] = sd < -side_tol ? -1 : (sd > side_tol ? 1 : 0);
    if (side[v] == 0) axis.push_back(v);
  }
  std::map<VertexId, VertexId> sigma;
  for (VertexId a : axis) {
    const Point image = reflect(base.vertices[a], g3);
    bool found = false;
    for (VertexId c : axis) {
      if (distance(image, base.vertices[c]) < Scalar(kAxisMirrorTolerance)) {
        sigma[a] = c;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::AsymmetricFixture,
                  "axis vertex " + std::to_string(a) + " has no mirror image across g3");
    }
  }

  UnitGraph g;
  g.vertices = base.vertices;
  for (VertexId v = 0; v < n; ++v) {
    if (side[v] < 0) g.vertices[v] = reflect(base.vertices[v], g3);
  }
  auto remap = [&](VertexId v, VertexId other) {
    return side[v] == 0 && side[other] < 0 ? sigma[v] : v;
  };
  for (const Edge& edge : base.edges) {
    if (side[edge.u] * side[edge.v] < 0) {
      throw Error(ErrorCode::AsymmetricFixture, "edge crosses BE away from the axis");
    }
    g.edges.emplace_back(remap(edge.u, edge.v), remap(edge.v, edge.u));
  }
  for (const Triangle& t : base.triangles) {
    const bool lower = side[t[0]] < 0 || side[t[1]] < 0 || side[t[2]] < 0;
    auto map = [&](VertexId v) { return lower && side[v] == 0 ? sigma[v] : v; };
    g.triangles.push_back(make_triangle(map(t[0]), map(t[1]), map(t[2])));
  }
  g.canonicalize();
  validate(g);

  g.labels = base.labels;
  g.labels["C"] = base.label("D");
  g.labels["D"] = base.label("C");
  g.meta = base.meta;
  erase_prefix(g.meta, "ring.");
  g.meta.erase("angle_marks");
  g.meta["kind"] = "adapter";
  return g;
}

UnitGraph mirror_adapter(const UnitGraph& adapter) {
  const Line be = Line::through(adapter.vertices[adapter.label("B")],
                                adapter.vertices[adapter.label("E")]);
  UnitGraph g = transformed(adapter, [&](const Point& p) { return reflect(p, be); });
  std::swap(g.labels.at("A"), g.labels.at("C"));
  std::swap(g.labels.at("F"), g.labels.at("D"));
  g.meta["kind"] = "adapter";
  g.meta["adapter.mirrored"] = adapter.meta_value("adapter.mirrored") == "true" ? "false" : "true";
  return g;
}

std::pair<Point, Point> rail_directions(const UnitGraph& g) {
  const auto& p = g.vertices;
  return {unit(p[g.label("A")] - p[g.label("F")]), unit(p[g.label("C")] - p[g.label("D")])};
}

UnitGraph chain_assemble(const std::vector<ChainPiece>& pieces) {
  if (pieces.empty()) throw Error(ErrorCode::InvalidGraph, "empty chain");
  UnitGraph chain = pieces.front().graph;
  std::string transforms = "0:identity";
  std::vector<VertexId> last_piece(chain.vertex_count());
  for (VertexId v = 0; v < last_piece.size(); ++v) last_piece[v] = v;
  Scalar tol = merge_tolerance();
  for (const ChainPiece& piece : pieces) tol = std::max(tol, seam_tolerance(piece.graph));

  for (std::size_t k = 1; k < pieces.size(); ++k) {
    const UnitGraph& next = pieces[k].graph;
    const Point src_a = next.vertices[next.label("A")];
    const Point src_f = next.vertices[next.label("F")];
    Point dst_a = chain.vertices[chain.label("C")];
    Point dst_f = chain.vertices[chain.label("D")];
    if (pieces[k].reversed) std::swap(dst_a, dst_f);
    const Scalar mismatch = abs(distance(src_a, src_f) - distance(dst_a, dst_f));
    if (mismatch > tol) {
      throw Error(ErrorCode::SeamMismatch, "piece " + std::to_string(k) +
                                               ": seam lengths differ by " +
                                               format_scalar(mismatch, 3));
    }

    // Proper motion: rotate src_a->src_f onto dst_a->dst_f. Improper: the
    // same followed by reflection across the seam line.
    const Scalar turn = atan2(cross(src_f - src_a, dst_f - dst_a), dot(src_f - src_a, dst_f - dst_a));
    const Line seam = Line::through(dst_a, dst_f);
    auto proper = [&](const Point& p) { return rotate(p - src_a, Point{}, turn) + dst_a; };
    auto improper = [&](const Point& p) { return reflect(proper(p), seam); };

    std::vector<Point> previous;
    for (VertexId v : last_piece) previous.push_back(chain.vertices[v]);
    const int previous_side = seam.signed_distance(centroid(previous)) < 0 ? -1 : 1;
    std::vector<Point> placed;
    for (const Point& p : next.vertices) placed.push_back(proper(p));
    bool use_improper = (seam.signed_distance(centroid(placed)) < 0 ? -1 : 1) == previous_side;
    if (use_improper) {
      for (std::size_t i = 0; i < placed.size(); ++i) placed[i] = improper(next.vertices[i]);
    }

    // Seam: next's g1 rail (degree-2 vertices on line A-F) onto chain
    // degree-2 vertices.
    const Line g1 = Line::through(src_a, src_f);
    const auto next_degrees = next.degrees();
    const auto chain_degrees = chain.degrees();
    const detail::PointGrid grid(chain.vertices, 0.5);
    std::vector<std::optional<VertexId>> seam_target(next.vertex_count());
    for (VertexId v = 0; v < next.vertex_count(); ++v) {
      if (next_degrees[v] != 2 || abs(g1.signed_distance(next.vertices[v])) > Scalar(kSideTolerance)) {
        continue;
      }
      auto hit = nearest(chain.vertices, grid, placed[v], 1e-6);
      if (!hit || hit->second > tol || chain_degrees[hit->first] != 2) {
        throw Error(ErrorCode::SeamMismatch, "piece " + std::to_string(k) + ": rail vertex " +
                                                 std::to_string(v) + " has no seam partner");
      }
      seam_target[v] = hit->first;
    }

    const std::size_t first_new = chain.vertex_count();
    std::vector<VertexId> id(next.vertex_count());
    for (VertexId v = 0; v < next.vertex_count(); ++v) {
      if (seam_target[v]) {
        id[v] = *seam_target[v];
      } else {
        id[v] = chain.vertices.size();
        chain.vertices.push_back(placed[v]);
      }
    }
    check_collisions(chain.vertices, first_new);
    for (const Edge& e : next.edges) chain.edges.emplace_back(id[e.u], id[e.v]);
    for (const Triangle& t : next.triangles) {
      chain.triangles.push_back(make_triangle(id[t[0]], id[t[1]], id[t[2]]));
    }
    chain.canonicalize();
    chain.labels["C"] = id[next.label("C")];
    chain.labels["D"] = id[next.label("D")];
    last_piece = id;
    transforms += " " + std::to_string(k) + (use_improper ? ":improper" : ":proper") +
                  (pieces[k].reversed ? ":reversed" : ":forward");
  }

  erase_prefix(chain.meta, "ring.");
  erase_prefix(chain.meta, "fixture.");
  chain.meta.erase("angle_marks");
  chain.meta["kind"] = "chain";
  chain.meta["chain.pieces"] = std::to_string(pieces.size());
  chain.meta["chain.transforms"] = transforms;
  return chain;
}

std::optional<Scalar> aligned_distance(const UnitGraph& a, const UnitGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges.size() != b.edges.size()) return std::nullopt;
  const Point ab = a.vertices[a.label("B")];
  const Point bb = b.vertices[b.label("B")];
  const Point ae = a.vertices[a.label("E")] - ab;
  const Point be = b.vertices[b.label("E")] - bb;
  const Scalar turn = atan2(cross(be, ae), dot(be, ae));
  const detail::PointGrid grid(a.vertices, 0.5);
  std::vector<VertexId> match(b.vertex_count());
  std::vector<bool> used(a.vertex_count(), false);
  Scalar worst(0);
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    const Point p = rotate(b.vertices[v] - bb, Point{}, turn) + ab;
    auto hit = nearest(a.vertices, grid, p, kAlignTolerance);
    if (!hit || hit->second > Scalar(kAlignTolerance) || used[hit->first]) return std::nullopt;
    used[hit->first] = true;
    match[v] = hit->first;
    worst = std::max(worst, hit->second);
  }
  const std::set<Edge> edges(a.edges.begin(), a.edges.end());
  for (const Edge& e : b.edges) {
    if (!edges.contains(Edge(match[e.u], match[e.v]))) return std::nullopt;
  }
  return worst;
}

}  // namespace matchstick
