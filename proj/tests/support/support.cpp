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

#include "support/support.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace matchstick::testing {

VertexId row(const UnitGraph& g, int fixture_row) { return fixture_vertex(g, fixture_row); }

namespace {

Solved solve_anchor(const char* name) {
  NamedTemplate t = named_template(name);
  SolveResult r = solve(t.linkage, RingSpec::for_n(t.anchor_n), t.linkage.initial_state());
  return {std::move(t), std::move(r)};
}

}  // namespace

const Solved& solved_g2() {
  static const Solved s = solve_anchor("g2");
  return s;
}

const Solved& solved_g1() {
  static const Solved s = solve_anchor("g1");
  return s;
}

const UnitGraph& g2_base() {
  static const UnitGraph g = mirror_close(solved_g2().t.linkage, solved_g2().result);
  return g;
}

const UnitGraph& g2_ring() {
  static const UnitGraph g = ring_assemble(g2_base(), solved_g2().result.spec, std::nullopt);
  return g;
}

const UnitGraph& g1_ring() {
  static const UnitGraph g = [] {
    const Solved& s = solved_g1();
    return ring_assemble(mirror_close(s.t.linkage, s.result), s.result.spec, std::nullopt);
  }();
  return g;
}

UnitGraph unit_triangle() {
  UnitGraph g;
  g.vertices = {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar("0.5"), sqrt(Scalar(3)) / 2}};
  g.edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2)};
  g.triangles = {make_triangle(0, 1, 2)};
  g.canonicalize();
  return g;
}

std::size_t brute_force_ring_vertices(const UnitGraph& base, const RingSpec& spec, double tol) {
  const double ox = spec.apex_x.convert_to<double>();
  const double omega = spec.omega.convert_to<double>();
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < spec.n; ++k) {
    const double c = std::cos(k * omega), s = std::sin(k * omega);
    for (const Point& p : base.vertices) {
      const double x = p.x.convert_to<double>() - ox, y = p.y.convert_to<double>();
      pts.emplace_back(ox + c * x - s * y, s * x + c * y);
    }
  }
  // Union-find over all pairs closer than tol.
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].first - pts[j].first, dy = pts[i].second - pts[j].second;
      if (std::abs(dx) < tol && std::abs(dy) < tol && std::hypot(dx, dy) < tol) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) roots += find(i) == i;
  return roots;
}

Scalar deviation(const Scalar& value, const std::string& reference) {
  return abs(value - parse_scalar(reference));
}

}  // namespace matchstick::testing
