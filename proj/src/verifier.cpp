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

#include "matchstick/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "spatial.hpp"

namespace matchstick {

namespace {

constexpr double kNearEvent = 1e-3;
constexpr double kCoarseSlack = 1e-9;
constexpr double kSearchRadius = 1.0 + 1e-6;
constexpr double kCell = 0.5;

struct Coarse {
  double x;
  double y;
};

std::vector<Coarse> coarse_points(const UnitGraph& g) {
  std::vector<Coarse> out;
  out.reserve(g.vertex_count());
  for (const Point& p : g.vertices) out.push_back({p.x.convert_to<double>(), p.y.convert_to<double>()});
  return out;
}

double coarse_segment_distance(const Coarse& p, const Coarse& a, const Coarse& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

double coarse_orientation(const Coarse& a, const Coarse& b, const Coarse& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Runs body(begin, end, slot) over [0, count) split into contiguous
/// chunks, one per worker.
template <typename F>
void parallel_chunks(std::size_t count, int threads, F&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads < 1 ? 1 : threads, count));
  if (workers == 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, begin, end, w] { body(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

std::size_t worker_count(int threads) { return static_cast<std::size_t>(std::max(1, threads)); }

bool pair_less(const VertexPair& a, const VertexPair& b) {
  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
}
bool vertex_edge_less(const VertexEdge& a, const VertexEdge& b) {
  return std::tie(a.vertex, a.edge) < std::tie(b.vertex, b.edge);
}
bool crossing_less(const EdgeCrossing& a, const EdgeCrossing& b) {
  return std::tie(a.first, a.second) < std::tie(b.first, b.second);
}

bool better(const VertexPair& a, const std::optional<VertexPair>& b) {
  return !b || a.distance < b->distance || (a.distance == b->distance && pair_less(a, *b));
}
bool better(const VertexEdge& a, const std::optional<VertexEdge>& b) {
  return !b || a.distance < b->distance ||
         (a.distance == b->distance && vertex_edge_less(a, *b));
}

double half_length(const std::vector<Coarse>& c, const Edge& e) {
  return 0.5 * std::hypot(c[e.u].x - c[e.v].x, c[e.u].y - c[e.v].y);
}

std::vector<Point> midpoints(const UnitGraph& g) {
  std::vector<Point> mids;
  mids.reserve(g.edges.size());
  for (const Edge& e : g.edges) mids.push_back(Scalar("0.5") * (g.vertices[e.u] + g.vertices[e.v]));
  return mids;
}

/// Coarse enumeration of vertex pairs (i < j) within `radius`.
template <typename F>
void coarse_vertex_pairs(const std::vector<Coarse>& c, const detail::PointGrid& grid,
                         std::size_t begin, std::size_t end, double radius, F&& f) {
  for (std::size_t i = begin; i < end; ++i) {
    grid.near(c[i].x, c[i].y, radius, [&](std::size_t j) {
      if (j <= i) return;
      const double d = std::hypot(c[i].x - c[j].x, c[i].y - c[j].y);
      if (d <= radius) f(i, j, d);
    });
  }
}

/// Coarse enumeration of non-incident (vertex, edge) pairs within `radius`.
template <typename F>
void coarse_vertex_edges(const UnitGraph& g, const std::vector<Coarse>& c,
                         const detail::PointGrid& grid, std::size_t begin, std::size_t end,
                         double radius, F&& f) {
  for (std::size_t k = begin; k < end; ++k) {
    const Edge& e = g.edges[k];
    const double mx = 0.5 * (c[e.u].x + c[e.v].x), my = 0.5 * (c[e.u].y + c[e.v].y);
    grid.near(mx, my, half_length(c, e) + radius, [&](std::size_t v) {
      if (e.has(v)) return;
      const double d = coarse_segment_distance(c[v], c[e.u], c[e.v]);
      if (d <= radius) f(v, k, d);
    });
  }
}

}  // namespace

ToleranceProfile ToleranceProfile::solved() {
  return {"solved", Scalar("1e-12"), Scalar("1e-12"), Scalar("1e-7"), Scalar("1e-12"), Scalar("1e-10")};
}

ToleranceProfile ToleranceProfile::fixture() {
  return {"fixture", Scalar("1e-13"), Scalar("1e-12"), Scalar("1e-7"), Scalar("1e-12"), Scalar("1e-10")};
}

ToleranceProfile ToleranceProfile::sketch() {
  return {"sketch", Scalar("0.05"), Scalar("1e-4"), Scalar("1e-3"), Scalar("0.05"), Scalar("0.05")};
}

ToleranceProfile ToleranceProfile::by_name(const std::string& name) {
  if (name == "solved") return solved();
  if (name == "fixture") return fixture();
  if (name == "sketch") return sketch();
  throw std::invalid_argument("unknown tolerance profile '" + name + "'");
}

bool CrossingScan::operator==(const CrossingScan& o) const {
  auto same_pairs = [](const std::vector<VertexPair>& a, const std::vector<VertexPair>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      return x.u == y.u && x.v == y.v && x.distance == y.distance;
    });
  };
  auto same_edges = [](const std::vector<VertexEdge>& a, const std::vector<VertexEdge>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      return x.vertex == y.vertex && x.edge == y.edge && x.distance == y.distance;
    });
  };
  const bool same_crossings = std::equal(
      crossings.begin(), crossings.end(), o.crossings.begin(), o.crossings.end(),
      [](const auto& x, const auto& y) {
        return x.first == y.first && x.second == y.second && x.relation == y.relation;
      });
  return same_crossings && same_edges(incidences, o.incidences) &&
         same_pairs(coincidences, o.coincidences) &&
         same_pairs(indeterminate_pairs, o.indeterminate_pairs) &&
         same_edges(indeterminate_edges, o.indeterminate_edges);
}

bool VerificationReport::indeterminate_only() const {
  return scan.crossings.empty() && scan.incidences.empty() && scan.coincidences.empty() &&
         !(scan.indeterminate_pairs.empty() && scan.indeterminate_edges.empty());
}

Separations min_separations(const UnitGraph& g, int threads) {
  Separations out;
  if (g.vertex_count() < 2) return out;
  const auto c = coarse_points(g);
  const detail::PointGrid grid(g.vertices, kCell);
  const std::size_t workers = worker_count(threads);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Vertex pairs: coarse minimum first, then every pair within slack of it
  // at full precision.
  std::vector<double> vv_min(workers, kInf);
  parallel_chunks(g.vertex_count(), threads, [&](std::size_t b, std::size_t e, std::size_t w) {
    coarse_vertex_pairs(c, grid, b, e, kSearchRadius,
                        [&](std::size_t, std::size_t, double d) { vv_min[w] = std::min(vv_min[w], d); });
  });
  double vv = *std::min_element(vv_min.begin(), vv_min.end());
  const bool vv_brute = vv == kInf;
  if (vv_brute) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        vv = std::min(vv, std::hypot(c[i].x - c[j].x, c[i].y - c[j].y));
  }
  std::vector<std::optional<VertexPair>> vv_best(workers);
  const double vv_cut = vv + kCoarseSlack;
  auto consider_pair = [&](std::size_t i, std::size_t j, double d, std::size_t w) {
    if (d > vv_cut) return;
    VertexPair p{i, j, distance(g.vertices[i], g.vertices[j])};
    if (better(p, vv_best[w])) vv_best[w] = p;
  };
  if (vv_brute) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        consider_pair(i, j, std::hypot(c[i].x - c[j].x, c[i].y - c[j].y), 0);
  } else {
    parallel_chunks(g.vertex_count(), threads, [&](std::size_t b, std::size_t e, std::size_t w) {
      coarse_vertex_pairs(c, grid, b, e, vv_cut,
                          [&](std::size_t i, std::size_t j, double d) { consider_pair(i, j, d, w); });
    });
  }
  for (auto& best : vv_best) {
    if (best && better(*best, out.vertex_vertex)) out.vertex_vertex = best;
  }

  // Vertex-edge pairs.
  if (g.edges.empty()) return out;
  std::vector<double> ve_min(workers, kInf);
  parallel_chunks(g.edges.size(), threads, [&](std::size_t b, std::size_t e, std::size_t w) {
    coarse_vertex_edges(g, c, grid, b, e, kSearchRadius,
                        [&](std::size_t, std::size_t, double d) { ve_min[w] = std::min(ve_min[w], d); });
  });
  double ve = *std::min_element(ve_min.begin(), ve_min.end());
  const bool ve_brute = ve == kInf;
  if (ve_brute) {
    for (const Edge& e : g.edges)
      for (std::size_t v = 0; v < c.size(); ++v)
        if (!e.has(v)) ve = std::min(ve, coarse_segment_distance(c[v], c[e.u], c[e.v]));
    if (ve == kInf) return out;
  }
  std::vector<std::optional<VertexEdge>> ve_best(workers);
  const double ve_cut = ve + kCoarseSlack;
  auto consider_edge = [&](std::size_t v, std::size_t k, double d, std::size_t w) {
    if (d > ve_cut) return;
    const Edge& e = g.edges[k];
    VertexEdge p{v, e, point_segment_distance(g.vertices[v], g.vertices[e.u], g.vertices[e.v])};
    if (better(p, ve_best[w])) ve_best[w] = p;
  };
  if (ve_brute) {
    for (std::size_t k = 0; k < g.edges.size(); ++k)
      for (std::size_t v = 0; v < c.size(); ++v)
        if (!g.edges[k].has(v))
          consider_edge(v, k, coarse_segment_distance(c[v], c[g.edges[k].u], c[g.edges[k].v]), 0);
  } else {
    parallel_chunks(g.edges.size(), threads, [&](std::size_t b, std::size_t e, std::size_t w) {
      coarse_vertex_edges(g, c, grid, b, e, ve_cut,
                          [&](std::size_t v, std::size_t k, double d) { consider_edge(v, k, d, w); });
    });
  }
  for (auto& best : ve_best) {
    if (best && better(*best, out.vertex_edge)) out.vertex_edge = best;
  }
  return out;
}

namespace {

void classify_pair(const UnitGraph& g, const ToleranceProfile& prof, VertexId i, VertexId j,
                   CrossingScan& out) {
  const Scalar d = distance(g.vertices[i], g.vertices[j]);
  if (d < prof.incidence) {
    out.coincidences.push_back({i, j, d});
  } else if (d < prof.clearance) {
    out.indeterminate_pairs.push_back({i, j, d});
  }
}

void classify_vertex_edge(const UnitGraph& g, const ToleranceProfile& prof, VertexId v,
                          const Edge& e, CrossingScan& out) {
  const Scalar d = point_segment_distance(g.vertices[v], g.vertices[e.u], g.vertices[e.v]);
  if (d < prof.incidence) {
    out.incidences.push_back({v, e, d});
  } else if (d < prof.clearance) {
    out.indeterminate_edges.push_back({v, e, d});
  }
}

void classify_edges(const UnitGraph& g, const ToleranceProfile& prof, const Edge& e,
                    const Edge& f, CrossingScan& out) {
  const SegmentRelation r = segment_relation(g.vertices[e.u], g.vertices[e.v], g.vertices[f.u],
                                             g.vertices[f.v], prof.incidence);
  if (r == SegmentRelation::ProperCrossing || r == SegmentRelation::CollinearOverlap) {
    out.crossings.push_back({e, f, r});
  }
}

bool shares_endpoint(const Edge& e, const Edge& f) {
  return e.has(f.u) || e.has(f.v);
}

void sort_scan(CrossingScan& s) {
  std::sort(s.crossings.begin(), s.crossings.end(), crossing_less);
  std::sort(s.incidences.begin(), s.incidences.end(), vertex_edge_less);
  std::sort(s.coincidences.begin(), s.coincidences.end(), pair_less);
  std::sort(s.indeterminate_pairs.begin(), s.indeterminate_pairs.end(), pair_less);
  std::sort(s.indeterminate_edges.begin(), s.indeterminate_edges.end(), vertex_edge_less);
}

void append(CrossingScan& into, CrossingScan&& from) {
  auto move_all = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
  };
  move_all(into.crossings, from.crossings);
  move_all(into.incidences, from.incidences);
  move_all(into.coincidences, from.coincidences);
  move_all(into.indeterminate_pairs, from.indeterminate_pairs);
  move_all(into.indeterminate_edges, from.indeterminate_edges);
}

}  // namespace

CrossingScan crossing_scan(const UnitGraph& g, const ToleranceProfile& prof, int threads) {
  const auto c = coarse_points(g);
  const detail::PointGrid grid(g.vertices, kCell);
  const std::size_t workers = worker_count(threads);
  std::vector<CrossingScan> parts(workers);

  parallel_chunks(g.vertex_count(), threads, [&](std::size_t b, std::size_t e, std::size_t w) {
    coarse_vertex_pairs(c, grid, b, e, kNearEvent, [&](std::size_t i, std::size_t j, double) {
      classify_pair(g, prof, i, j, parts[w]);
    });
  });
  parallel_chunks(g.edges.size(), threads, [&](std::size_t b, std::size_t e, std::size_t w) {
    coarse_vertex_edges(g, c, grid, b, e, kNearEvent, [&](std::size_t v, std::size_t k, double) {
      classify_vertex_edge(g, prof, v, g.edges[k], parts[w]);
    });
  });

  if (!g.edges.empty()) {
    const auto mids = midpoints(g);
    const detail::PointGrid edge_grid(mids, kCell);
    double longest = 0;
    for (const Edge& e : g.edges) longest = std::max(longest, half_length(c, e));
    const double incidence = prof.incidence.convert_to<double>();
    const double margin = kCoarseSlack + 2 * incidence;
    parallel_chunks(g.edges.size(), threads, [&](std::size_t b, std::size_t end, std::size_t w) {
      for (std::size_t k = b; k < end; ++k) {
        const Edge& e = g.edges[k];
        const double reach = half_length(c, e) + longest + incidence + 1e-6;
        edge_grid.near(edge_grid.x(k), edge_grid.y(k), reach, [&](std::size_t m) {
          if (m <= k) return;
          const Edge& f = g.edges[m];
          if (shares_endpoint(e, f)) return;
          const double o1 = coarse_orientation(c[e.u], c[e.v], c[f.u]);
          const double o2 = coarse_orientation(c[e.u], c[e.v], c[f.v]);
          const double o3 = coarse_orientation(c[f.u], c[f.v], c[e.u]);
          const double o4 = coarse_orientation(c[f.u], c[f.v], c[e.v]);
          const bool separated = (o1 > margin && o2 > margin) || (o1 < -margin && o2 < -margin) ||
                                 (o3 > margin && o4 > margin) || (o3 < -margin && o4 < -margin);
          if (!separated) classify_edges(g, prof, e, f, parts[w]);
        });
      }
    });
  }

  CrossingScan out;
  for (auto& p : parts) append(out, std::move(p));
  sort_scan(out);
  return out;
}

CrossingScan crossing_scan_bruteforce(const UnitGraph& g, const ToleranceProfile& prof) {
  CrossingScan out;
  const std::size_t n = g.vertex_count();
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) classify_pair(g, prof, i, j, out);
  for (const Edge& e : g.edges)
    for (VertexId v = 0; v < n; ++v)
      if (!e.has(v)) classify_vertex_edge(g, prof, v, e, out);
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    for (std::size_t m = k + 1; m < g.edges.size(); ++m)
      if (!shares_endpoint(g.edges[k], g.edges[m])) classify_edges(g, prof, g.edges[k], g.edges[m], out);
  sort_scan(out);
  return out;
}

namespace {

/// Maximal collinear edge chains as vertex sequences. Two edges at a vertex
/// continue each other when they leave it in opposite directions within the
/// collinearity tolerance and each is the other's best continuation.
std::vector<std::vector<VertexId>> collinear_chains(const UnitGraph& g, const Scalar& tol) {
  const auto adj = g.adjacency();
  const Scalar limit = cos(tol) * -1;
  // next[(v, a)] = b: at vertex v, edge (v, a) continues into edge (v, b).
  std::map<std::pair<VertexId, VertexId>, VertexId> next;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = adj[v];
    std::map<VertexId, std::pair<Scalar, VertexId>> best;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Point a = g.vertices[nb[i]] - g.vertices[v];
        const Point b = g.vertices[nb[j]] - g.vertices[v];
        const Scalar cosine = dot(a, b) / (norm(a) * norm(b));
        if (cosine > limit) continue;
        for (auto [x, y] : {std::pair{nb[i], nb[j]}, std::pair{nb[j], nb[i]}}) {
          auto it = best.find(x);
          if (it == best.end() || cosine < it->second.first) best[x] = {cosine, y};
        }
      }
    }
    for (const auto& [x, entry] : best) {
      auto back = best.find(entry.second);
      if (back != best.end() && back->second.second == x) next[{v, x}] = entry.second;
    }
  }

  std::set<Edge> used;
  std::vector<std::vector<VertexId>> chains;
  auto extend = [&](std::vector<VertexId>& chain) {
    while (true) {
      const VertexId tail = chain.back();
      const VertexId prev = chain[chain.size() - 2];
      auto it = next.find({tail, prev});
      if (it == next.end() || used.contains(Edge(tail, it->second))) return;
      used.insert(Edge(tail, it->second));
      chain.push_back(it->second);
    }
  };
  for (const Edge& e : g.edges) {
    if (used.contains(e)) continue;
    used.insert(e);
    std::vector<VertexId> forward{e.u, e.v};
    extend(forward);
    std::vector<VertexId> backward{e.v, e.u};
    extend(backward);
    std::vector<VertexId> chain(backward.rbegin(), backward.rend());
    chain.insert(chain.end(), forward.begin() + 2, forward.end());
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace

std::vector<AdditionalTriangle> additional_triangle_scan(const UnitGraph& g,
                                                         const ToleranceProfile& prof) {
  std::vector<AdditionalTriangle> out;
  const std::set<Triangle> designated(g.triangles.begin(), g.triangles.end());
  for (const Triangle& t : unit_three_cycles(g, prof.census)) {
    if (!designated.contains(t)) out.push_back({1, t, {t[0], t[1], t[2]}});
  }

  // Side segments of s >= 2 edges along a chain, keyed by endpoints.
  struct Side {
    int length;
    std::size_t chain;
    std::vector<VertexId> path;
  };
  const auto chains = collinear_chains(g, prof.collinear);
  std::map<VertexId, std::vector<std::pair<VertexId, Side>>> sides;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const auto& ch = chains[c];
    for (std::size_t i = 0; i < ch.size(); ++i) {
      for (std::size_t j = i + 2; j < ch.size(); ++j) {
        if (ch[i] == ch[j]) continue;
        Side s{static_cast<int>(j - i), c, {ch.begin() + i, ch.begin() + j + 1}};
        sides[ch[i]].push_back({ch[j], s});
        sides[ch[j]].push_back({ch[i], s});
      }
    }
  }
  std::set<std::pair<int, Triangle>> seen;
  for (const auto& [x, from_x] : sides) {
    for (const auto& [y, xy] : from_x) {
      if (y <= x) continue;
      for (const auto& [z, yz] : sides[y]) {
        if (z <= y || yz.length != xy.length || yz.chain == xy.chain) continue;
        for (const auto& [w, zx] : sides[z]) {
          if (w != x || zx.length != xy.length || zx.chain == xy.chain || zx.chain == yz.chain) continue;
          const Scalar s = xy.length;
          const Scalar slack = prof.census * s;
          if (abs(distance(g.vertices[x], g.vertices[y]) - s) > slack ||
              abs(distance(g.vertices[y], g.vertices[z]) - s) > slack ||
              abs(distance(g.vertices[z], g.vertices[x]) - s) > slack) {
            continue;
          }
          const Triangle corners = make_triangle(x, y, z);
          if (!seen.insert({xy.length, corners}).second) continue;
          std::set<VertexId> all;
          for (const Side* side : {&xy, &yz, &zx}) all.insert(side->path.begin(), side->path.end());
          out.push_back({xy.length, corners, {all.begin(), all.end()}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.side, a.corners) < std::tie(b.side, b.corners);
  });
  return out;
}

VerificationReport verify(const UnitGraph& g, const ToleranceProfile& prof, int threads) {
  VerificationReport r;
  r.profile = prof.name;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edges.size();
  r.degrees = degree_histogram(g);
  r.max_unit_error = 0;
  for (const Edge& e : g.edges) {
    const Scalar err = abs(distance(g.vertices[e.u], g.vertices[e.v]) - 1);
    if (!r.worst_edge || err > r.max_unit_error) {
      r.max_unit_error = err;
      r.worst_edge = e;
    }
  }
  r.separations = min_separations(g, threads);
  r.scan = crossing_scan(g, prof, threads);
  r.unit_cycles = unit_three_cycles(g, prof.census).size();
  r.designated = g.triangles.size();
  r.additional = additional_triangle_scan(g, prof);

  r.unit = r.max_unit_error <= prof.unit;
  r.regular4 = g.vertex_count() > 0 && r.degrees.size() == 1 && r.degrees.begin()->first == 4;
  r.planar = r.scan.crossings.empty() && r.scan.incidences.empty() && r.scan.coincidences.empty() &&
             r.scan.indeterminate_pairs.empty() && r.scan.indeterminate_edges.empty();
  const bool larger = std::any_of(r.additional.begin(), r.additional.end(),
                                  [](const auto& t) { return t.side >= 2; });
  r.no_additional = r.unit_cycles == r.designated && !larger;
  return r;
}

namespace {

std::string str(const Scalar& s) { return format_scalar(s, 16); }

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

}  // namespace

std::string report_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  j["profile"] = r.profile;
  j["vertices"] = r.vertex_count;
  j["edges"] = r.edge_count;
  json degrees = json::object();
  for (const auto& [d, c] : r.degrees) degrees[std::to_string(d)] = c;
  j["degrees"] = degrees;
  j["max_unit_error"] = str(r.max_unit_error);
  j["worst_edge"] = r.worst_edge ? edge_json(*r.worst_edge) : json();
  if (const auto& vv = r.separations.vertex_vertex) {
    j["min_vertex_vertex"] = {{"distance", str(vv->distance)}, {"witness", {vv->u, vv->v}}};
  } else {
    j["min_vertex_vertex"] = json();
  }
  if (const auto& ve = r.separations.vertex_edge) {
    j["min_vertex_edge"] = {{"distance", str(ve->distance)},
                            {"vertex", ve->vertex},
                            {"edge", edge_json(ve->edge)}};
  } else {
    j["min_vertex_edge"] = json();
  }
  json crossings = json::array();
  for (const auto& c : r.scan.crossings) {
    crossings.push_back({{"first", edge_json(c.first)},
                         {"second", edge_json(c.second)},
                         {"relation", std::string(to_string(c.relation))}});
  }
  j["crossings"] = crossings;
  auto vertex_edges = [](const std::vector<VertexEdge>& list) {
    json a = json::array();
    for (const auto& x : list) {
      a.push_back({{"vertex", x.vertex}, {"edge", edge_json(x.edge)}, {"distance", str(x.distance)}});
    }
    return a;
  };
  auto pairs = [](const std::vector<VertexPair>& list) {
    json a = json::array();
    for (const auto& x : list) a.push_back({{"pair", {x.u, x.v}}, {"distance", str(x.distance)}});
    return a;
  };
  j["incidences"] = vertex_edges(r.scan.incidences);
  j["coincidences"] = pairs(r.scan.coincidences);
  j["indeterminate"] = {{"vertex_vertex", pairs(r.scan.indeterminate_pairs)},
                        {"vertex_edge", vertex_edges(r.scan.indeterminate_edges)}};
  j["unit_three_cycles"] = r.unit_cycles;
  j["designated_triangles"] = r.designated;
  json additional = json::array();
  for (const auto& t : r.additional) {
    additional.push_back({{"side", t.side},
                          {"corners", {t.corners[0], t.corners[1], t.corners[2]}},
                          {"vertices", t.vertices}});
  }
  j["additional_triangles"] = additional;
  j["verdicts"] = {{"unit", r.unit},
                   {"regular4", r.regular4},
                   {"planar", r.planar},
                   {"no_additional", r.no_additional}};
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "pass" : "FAIL"; };
  os << "profile        " << r.profile << "\n";
  os << "size           V=" << r.vertex_count << " E=" << r.edge_count << "\n";
  os << "degrees       ";
  for (const auto& [d, c] : r.degrees) os << " " << d << ":" << c;
  os << "\n";
  os << "max |len-1|    " << format_scalar(r.max_unit_error, 6) << "\n";
  if (const auto& vv = r.separations.vertex_vertex) {
    os << "min v-v        " << str(vv->distance) << " (" << vv->u << "," << vv->v << ")\n";
  }
  if (const auto& ve = r.separations.vertex_edge) {
    os << "min v-e        " << str(ve->distance) << " (" << ve->vertex << " to " << ve->edge.u << "-"
       << ve->edge.v << ")\n";
  }
  os << "crossings      " << r.scan.crossings.size() << "\n";
  os << "incidences     " << r.scan.incidences.size() << "\n";
  os << "coincidences   " << r.scan.coincidences.size() << "\n";
  os << "indeterminate  " << r.scan.indeterminate_pairs.size() + r.scan.indeterminate_edges.size()
     << "\n";
  os << "triangles      " << r.unit_cycles << " unit 3-cycles, " << r.designated << " designated, "
     << r.additional.size() << " additional\n";
  os << "unit           " << yes(r.unit) << "\n";
  os << "regular4       " << yes(r.regular4) << "\n";
  os << "planar         " << yes(r.planar) << "\n";
  os << "no_additional  " << yes(r.no_additional) << "\n";
  return os.str();
}

int verdict_exit_code(const VerificationReport& r) {
  if (!r.unit) return 1;
  if (!r.regular4) return 2;
  if (!r.planar && !r.indeterminate_only()) return 3;
  if (!r.no_additional) return 4;
  if (!r.planar) return 5;
  return 0;
}

}  // namespace matchstick
