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

#include "property/properties.hpp"

#include <algorithm>
#include <sstream>

#include "matchstick/error.hpp"
#include "matchstick/graph_io.hpp"
#include "matchstick/linkage.hpp"
#include "matchstick/verifier.hpp"

namespace matchstick::testing {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// A Scalar with more significant digits than a double carries.
Scalar random_scalar(std::mt19937_64& rng, double lo, double hi) {
  return Scalar(uniform(rng, lo, hi)) + Scalar(uniform(rng, -1, 1)) * Scalar("1e-20");
}

Point random_point(std::mt19937_64& rng, double lo, double hi) {
  return {random_scalar(rng, lo, hi), random_scalar(rng, lo, hi)};
}

std::string describe(const Scalar& s) { return format_scalar(s, 6); }

}  // namespace

UnitGraph random_event_graph(std::mt19937_64& rng, std::size_t max_edges) {
  UnitGraph g;
  const Scalar h = sqrt(Scalar(3)) / 2;
  const int cols = 3 + static_cast<int>(rng() % 5);
  const int rows = 2 + static_cast<int>(rng() % 4);
  const Scalar jitter = uniform(rng, 0, 1) < 0.5 ? Scalar(0) : Scalar(uniform(rng, 0, 1e-3));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Point p{Scalar(c) + (r % 2 ? Scalar("0.5") : Scalar(0)), h * r};
      p.x += jitter * uniform(rng, -1, 1);
      p.y += jitter * uniform(rng, -1, 1);
      g.vertices.push_back(p);
    }
  }
  auto id = [&](int r, int c) { return static_cast<VertexId>(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (uniform(rng, 0, 1) < 0.8 && c + 1 < cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) {
        // Row r + 1 is offset by half a unit; its two neighbours of (r, c)
        // sit at columns c - 1 + r % 2 and c + r % 2.
        for (int nc : {c - 1 + r % 2, c + r % 2}) {
          if (nc >= 0 && nc < cols && uniform(rng, 0, 1) < 0.8) g.edges.emplace_back(id(r, c), id(r + 1, nc));
        }
      }
    }
  }
  auto add_vertex = [&](const Point& p) {
    g.vertices.push_back(p);
    return g.vertices.size() - 1;
  };
  auto random_existing = [&]() { return static_cast<VertexId>(rng() % g.vertices.size()); };
  const double w = cols + 1, hgt = rows;
  const int events = 2 + static_cast<int>(rng() % 6);
  for (int k = 0; k < events && !g.edges.empty(); ++k) {
    const Edge e = g.edges[rng() % g.edges.size()];
    const Point a = g.vertices[e.u], b = g.vertices[e.v];
    const Scalar t = uniform(rng, 0.1, 0.9);
    const Point on = a + t * (b - a);
    const Point normal{(a.y - b.y), (b.x - a.x)};
    switch (rng() % 6) {
      case 0: {  // vertex exactly on an edge
        const VertexId v = add_vertex(on);
        g.edges.emplace_back(v, random_existing());
        break;
      }
      case 1: {  // near miss in the indeterminate band of the solved profile
        const VertexId v = add_vertex(on + Scalar(uniform(rng, 2e-12, 5e-8)) * normal);
        g.edges.emplace_back(v, random_existing());
        break;
      }
      case 2: {  // clear gap
        add_vertex(on + Scalar(uniform(rng, 1e-6, 1e-3)) * normal);
        break;
      }
      case 3: {  // coincident copy of a vertex
        const Point p = g.vertices[random_existing()];
        add_vertex(p + Scalar(uniform(rng, 0, 1e-14)) * Point{Scalar(1), Scalar(1)});
        break;
      }
      case 4: {  // collinear overlap along an existing edge
        const VertexId v1 = add_vertex(a + Scalar(uniform(rng, 0.2, 0.4)) * (b - a));
        const VertexId v2 = add_vertex(a + Scalar(uniform(rng, 1.1, 1.3)) * (b - a));
        g.edges.emplace_back(v1, v2);
        break;
      }
      default: {  // stray random edge
        const Point p = random_point(rng, 0, std::max(w, hgt));
        const Scalar ang = uniform(rng, 0, 6.283185307179586);
        const VertexId v1 = add_vertex(p);
        const VertexId v2 = add_vertex(p + Point{cos(ang), sin(ang)});
        g.edges.emplace_back(v1, v2);
        break;
      }
    }
  }
  g.canonicalize();
  // Drop edges whose endpoints coincide (degenerate segments).
  std::erase_if(g.edges, [&](const Edge& e) {
    return distance(g.vertices[e.u], g.vertices[e.v]) < Scalar("1e-6");
  });
  if (g.edges.size() > max_edges) g.edges.resize(max_edges);
  g.triangles = unit_three_cycles(g, Scalar("1e-12"));
  return g;
}

PropertyOutcome circle_intersection_law(int cases, std::uint64_t seed) {
  PropertyOutcome out{"circle-intersection distance law"};
  std::mt19937_64 rng(seed);
  const Scalar tol = precision_tolerance(5);
  for (int k = 0; k < cases; ++k, ++out.cases) {
    const Point c1 = random_point(rng, -50, 50);
    const Scalar d = random_scalar(rng, 1e-3, 1.999);
    const Scalar ang = random_scalar(rng, 0, 6.283185307179586);
    const Point c2 = c1 + d * Point{cos(ang), sin(ang)};
    const Side side = rng() % 2 ? Side::Left : Side::Right;
    const Point p = circle_circle_intersect(c1, c2, side);
    const Scalar e1 = abs(distance(p, c1) - 1), e2 = abs(distance(p, c2) - 1);
    const int sign = orientation(c1, c2, p).sign();
    if (e1 > tol || e2 > tol) {
      out.fail("distance error " + describe(std::max(e1, e2)) + " at d=" + describe(d));
    } else if (sign != static_cast<int>(side)) {
      out.fail("wrong side at d=" + describe(d));
    }
    // Out-of-range centre distances must be rejected, never answered.
    try {
      const Scalar far = random_scalar(rng, 2, 10);
      circle_circle_intersect(c1, c1 + far * Point{cos(ang), sin(ang)}, side);
      out.fail("no NoIntersection for distance " + describe(far));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoIntersection) out.fail(e.what());
    }
  }
  return out;
}

PropertyOutcome rotate_reflect_laws(int cases, std::uint64_t seed) {
  PropertyOutcome out{"reflect/rotate involution and composition laws"};
  std::mt19937_64 rng(seed);
  const Scalar tol = precision_tolerance(5);
  for (int k = 0; k < cases; ++k, ++out.cases) {
    const Point p = random_point(rng, -100, 100);
    const Point c = random_point(rng, -100, 100);
    const Scalar a = random_scalar(rng, -7, 7), b = random_scalar(rng, -7, 7);
    const Line l1(random_point(rng, -100, 100), random_scalar(rng, 0, 3.14));
    const Line l2(c, random_scalar(rng, 0, 3.14));
    const Line l3(c, random_scalar(rng, 0, 3.14));
    std::ostringstream why;
    if (distance(reflect(reflect(p, l1), l1), p) > tol) why << "reflect twice; ";
    if (abs(l1.signed_distance(Scalar("0.5") * (p + reflect(p, l1)))) > tol) why << "midpoint off axis; ";
    if (distance(rotate(rotate(p, c, a), c, -a), p) > tol) why << "rotate back; ";
    if (distance(rotate(rotate(p, c, a), c, b), rotate(p, c, a + b)) > tol) why << "rotation composition; ";
    if (abs(distance(rotate(p, c, a), c) - distance(p, c)) > tol) why << "radius; ";
    // Two reflections through lines meeting at c rotate by twice the angle.
    const Point twice = reflect(reflect(p, l2), l3);
    if (distance(twice, rotate(p, c, 2 * (l3.angle() - l2.angle()))) > tol) why << "reflection pair; ";
    const int n = 3 + static_cast<int>(rng() % 200);
    Point q = p;
    const Scalar step = 2 * pi() / n;
    for (int i = 0; i < n; ++i) q = rotate(q, c, step);
    if (distance(q, p) > tol) why << "n-fold rotation (n=" << n << "); ";
    if (!why.str().empty()) out.fail(why.str());
  }
  return out;
}

PropertyOutcome segment_relation_symmetry(int cases, std::uint64_t seed) {
  PropertyOutcome out{"segment_relation symmetry"};
  std::mt19937_64 rng(seed);
  const Scalar inc("1e-12");
  for (int k = 0; k < cases; ++k, ++out.cases) {
    Point a = random_point(rng, 0, 2), b = random_point(rng, 0, 2);
    Point c = random_point(rng, 0, 2), d = random_point(rng, 0, 2);
    switch (rng() % 4) {
      case 0: c = a; break;                                   // shared endpoint
      case 1: c = a + Scalar("0.5") * (b - a); break;         // T-junction
      case 2: c = a + Scalar("0.25") * (b - a); d = a + Scalar("1.5") * (b - a); break;  // overlap
      default: break;
    }
    const SegmentRelation r = segment_relation(a, b, c, d, inc);
    for (const auto& other : {segment_relation(c, d, a, b, inc), segment_relation(b, a, c, d, inc),
                              segment_relation(a, b, d, c, inc), segment_relation(d, c, b, a, inc)}) {
      if (other != r) {
        out.fail(std::string(to_string(r)) + " vs " + std::string(to_string(other)));
        break;
      }
    }
  }
  return out;
}

PropertyOutcome jacobian_matches_differences(int cases, std::uint64_t seed) {
  PropertyOutcome out{"Jacobian vs central finite differences"};
  std::mt19937_64 rng(seed);
  static const LinkageTemplate templates[] = {named_template("g1").linkage, named_template("g2").linkage};
  const Scalar h = pow(Scalar(10), -static_cast<int>(precision()) / 2);
  const Scalar rel = Scalar("1e-15");
  for (int k = 0; k < cases; ++k, ++out.cases) {
    const LinkageTemplate& t = templates[k % 2];
    const RingSpec spec = RingSpec::for_n(90 + static_cast<int>(rng() % 120));
    auto state = t.initial_state();
    for (auto& x : state) x += uniform(rng, -1e-2, 1e-2);
    const auto j = jacobian(t, spec, state);
    Scalar worst = 0;
    for (std::size_t col = 0; col < state.size(); ++col) {
      auto plus = state, minus = state;
      plus[col] += h;
      minus[col] -= h;
      const auto rp = residuals(t, spec, plus), rm = residuals(t, spec, minus);
      for (std::size_t row = 0; row < rp.size(); ++row) {
        const Scalar fd = (rp[row] - rm[row]) / (2 * h);
        const Scalar err = abs(fd - j[row][col]) / std::max(Scalar(1), Scalar(abs(j[row][col])));
        worst = std::max(worst, err);
      }
    }
    if (worst > rel) out.fail(t.name + " relative error " + describe(worst));
  }
  return out;
}

PropertyOutcome crossing_scan_equivalence(int cases, std::uint64_t seed) {
  PropertyOutcome out{"prefiltered vs brute-force crossing scan"};
  std::mt19937_64 rng(seed);
  const ToleranceProfile profiles[] = {ToleranceProfile::solved(), ToleranceProfile::fixture(),
                                       ToleranceProfile::sketch()};
  for (int k = 0; k < cases; ++k, ++out.cases) {
    const UnitGraph g = random_event_graph(rng, 200);
    const ToleranceProfile& prof = profiles[k % 3];
    const CrossingScan fast = crossing_scan(g, prof, 1 + k % 3);
    const CrossingScan slow = crossing_scan_bruteforce(g, prof);
    if (!(fast == slow)) {
      out.fail("case " + std::to_string(k) + ": " + std::to_string(fast.crossings.size()) + "/" +
               std::to_string(slow.crossings.size()) + " crossings, " +
               std::to_string(fast.incidences.size()) + "/" + std::to_string(slow.incidences.size()) +
               " incidences");
      continue;
    }
    // Minimum separations against an all-pairs evaluation.
    const Separations sep = min_separations(g);
    std::optional<Scalar> vv, ve;
    for (VertexId i = 0; i < g.vertex_count(); ++i) {
      for (VertexId j = i + 1; j < g.vertex_count(); ++j) {
        const Scalar d = distance(g.vertices[i], g.vertices[j]);
        if (!vv || d < *vv) vv = d;
      }
      for (const Edge& e : g.edges) {
        if (e.has(i)) continue;
        const Scalar d = point_segment_distance(g.vertices[i], g.vertices[e.u], g.vertices[e.v]);
        if (!ve || d < *ve) ve = d;
      }
    }
    if (!sep.vertex_vertex || sep.vertex_vertex->distance != *vv) out.fail("vertex-vertex minimum differs");
    if (ve.has_value() != sep.vertex_edge.has_value() ||
        (ve && sep.vertex_edge->distance != *ve)) {
      out.fail("vertex-edge minimum differs");
    }
  }
  return out;
}

PropertyOutcome file_round_trip(int cases, std::uint64_t seed) {
  PropertyOutcome out{"lossless graph file round trip"};
  std::mt19937_64 rng(seed);
  const char* alphabet = "ab c\\\nd=;é";
  for (int k = 0; k < cases; ++k, ++out.cases) {
    UnitGraph g = random_event_graph(rng, 120);
    for (Point& p : g.vertices) {
      p.x += random_scalar(rng, -1, 1) * Scalar("1e-30");
      if (rng() % 7 == 0) p.y = -p.y;
    }
    const std::size_t labels = rng() % 4;
    for (std::size_t i = 0; i < labels; ++i) {
      g.labels[std::string(1, static_cast<char>('A' + i))] = rng() % g.vertex_count();
    }
    const std::size_t metas = rng() % 5;
    for (std::size_t i = 0; i < metas; ++i) {
      std::string key = "k" + std::to_string(i), value;
      for (int c = 0; c < 12; ++c) value += alphabet[rng() % 12];
      if (i == 0) key += " with space";
      g.meta[key] = value;
    }
    const std::string first = format_graph(g);
    const GraphDocument doc = parse_graph(first);
    const std::string second = format_graph(doc.graph);
    const UnitGraph& h = doc.graph;
    bool same = first == second && h.edges == g.edges && h.triangles == g.triangles &&
                h.labels == g.labels && h.meta == g.meta && h.vertex_count() == g.vertex_count() &&
                doc.precision == precision();
    for (std::size_t i = 0; same && i < g.vertex_count(); ++i) {
      same = g.vertices[i].x == h.vertices[i].x && g.vertices[i].y == h.vertices[i].y;
    }
    if (!same) out.fail("case " + std::to_string(k) + " differs after round trip");
  }
  return out;
}

PropertyOutcome deterministic_reports(int cases, std::uint64_t seed) {
  PropertyOutcome out{"byte-deterministic reports under parallelism"};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k, ++out.cases) {
    const UnitGraph g = random_event_graph(rng, 200);
    const ToleranceProfile prof = k % 2 ? ToleranceProfile::solved() : ToleranceProfile::sketch();
    const std::string serial = report_json(verify(g, prof, 1));
    for (int threads : {2, 3, 8}) {
      if (report_json(verify(g, prof, threads)) != serial) {
        out.fail("case " + std::to_string(k) + " differs with " + std::to_string(threads) + " threads");
        break;
      }
    }
  }
  return out;
}

std::vector<PropertyOutcome> run_property_suites(int cases, std::uint64_t seed) {
  return {circle_intersection_law(cases, seed),      rotate_reflect_laws(cases, seed + 1),
          segment_relation_symmetry(cases, seed + 2), jacobian_matches_differences(cases, seed + 3),
          crossing_scan_equivalence(cases, seed + 4), file_round_trip(cases, seed + 5),
          deterministic_reports(cases, seed + 6)};
}

}  // namespace matchstick::testing
