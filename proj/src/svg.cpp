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

#include "matchstick/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "spatial.hpp"

namespace matchstick {

namespace {

struct Candidate {
  double coarse;
  VertexId vertex;
  std::optional<VertexId> other;
  std::optional<Edge> edge;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Point closest_on_segment(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  Scalar t = dot(p - a, d) / squared_norm(d);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return a + t * d;
}

}  // namespace

std::vector<SvgInset> choose_insets(const UnitGraph& g, int count) {
  std::vector<SvgInset> out;
  if (count <= 0 || g.vertex_count() < 2) return out;
  constexpr double kRadius = 0.5;
  const detail::PointGrid grid(g.vertices, kRadius);
  const auto adj = g.adjacency();
  std::vector<Candidate> candidates;
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    grid.near(grid.x(i), grid.y(i), kRadius, [&](std::size_t j) {
      if (j <= i || std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end()) return;
      const double d = std::hypot(grid.x(i) - grid.x(j), grid.y(i) - grid.y(j));
      if (d < kRadius) candidates.push_back({d, i, j, std::nullopt});
    });
  }
  for (const Edge& e : g.edges) {
    const double mx = 0.5 * (grid.x(e.u) + grid.x(e.v));
    const double my = 0.5 * (grid.y(e.u) + grid.y(e.v));
    grid.near(mx, my, 1.0, [&](std::size_t v) {
      if (e.has(v)) return;
      const Point& p = g.vertices[v];
      const Scalar d = point_segment_distance(p, g.vertices[e.u], g.vertices[e.v]);
      const double dd = d.convert_to<double>();
      // A vertex-edge gap equal to a vertex-vertex gap is the same event.
      const bool at_endpoint = distance(p, g.vertices[e.u]) <= d || distance(p, g.vertices[e.v]) <= d;
      if (dd < kRadius && !at_endpoint) candidates.push_back({dd, v, std::nullopt, e});
    });
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return std::tie(a.coarse, a.vertex, a.other, a.edge) < std::tie(b.coarse, b.vertex, b.other, b.edge);
  });
  for (const Candidate& c : candidates) {
    if (static_cast<int>(out.size()) >= count) break;
    const Point& p = g.vertices[c.vertex];
    SvgInset inset;
    inset.vertex = c.vertex;
    if (c.other) {
      inset.center = Scalar("0.5") * (p + g.vertices[*c.other]);
      inset.separation = distance(p, g.vertices[*c.other]);
      inset.partner = "v:" + std::to_string(*c.other);
    } else {
      const Point q = closest_on_segment(p, g.vertices[c.edge->u], g.vertices[c.edge->v]);
      inset.center = Scalar("0.5") * (p + q);
      inset.separation = distance(p, q);
      inset.partner = "e:" + std::to_string(c.edge->u) + "-" + std::to_string(c.edge->v);
    }
    const bool crowded = std::any_of(out.begin(), out.end(), [&](const SvgInset& o) {
      return distance(o.center, inset.center) < Scalar(0.25);
    });
    if (!crowded) out.push_back(std::move(inset));
  }
  return out;
}

std::string export_svg(const UnitGraph& g, const SvgOptions& options) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const double x = g.vertices[i].x.convert_to<double>();
    const double y = g.vertices[i].y.convert_to<double>();
    if (i == 0) {
      min_x = max_x = x;
      min_y = max_y = y;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double margin = 1.0;
  const double s = options.scale;
  const double width = (max_x - min_x + 2 * margin) * s;
  const double height = (max_y - min_y + 2 * margin) * s;
  auto px = [&](const Point& p) { return (p.x.convert_to<double>() - min_x + margin) * s; };
  auto py = [&](const Point& p) { return (max_y - p.y.convert_to<double>() + margin) * s; };

  const auto insets = choose_insets(g, options.insets);
  const double box = options.inset_size;
  const double inset_row = insets.empty() ? 0.0 : box + 40;
  const double total_width = std::max(width, insets.size() * (box + 20) + 20);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(total_width)
     << "\" height=\"" << num(height + inset_row) << "\">\n";
  os << "<style>.tri{fill:#dde8f6;stroke:none}.edge{stroke:#1a1a1a;stroke-linecap:round}"
        ".vtx{fill:#c0392b}.hl{fill:none;stroke:#e67e22}.frame{fill:#fff;stroke:#555}"
        ".cap{font:11px sans-serif;fill:#333}</style>\n";

  os << "<g id=\"main\">\n";
  for (const Triangle& t : g.triangles) {
    os << "<polygon class=\"tri\" points=\"";
    for (int k = 0; k < 3; ++k) {
      os << (k ? " " : "") << num(px(g.vertices[t[k]])) << "," << num(py(g.vertices[t[k]]));
    }
    os << "\"/>\n";
  }
  const std::string stroke = num(options.stroke * s);
  for (const Edge& e : g.edges) {
    os << "<line class=\"edge\" stroke-width=\"" << stroke << "\" x1=\"" << num(px(g.vertices[e.u]))
       << "\" y1=\"" << num(py(g.vertices[e.u])) << "\" x2=\"" << num(px(g.vertices[e.v]))
       << "\" y2=\"" << num(py(g.vertices[e.v])) << "\"/>\n";
  }
  const std::string r = num(options.stroke * s * 1.5);
  for (const Point& p : g.vertices) {
    os << "<circle class=\"vtx\" cx=\"" << num(px(p)) << "\" cy=\"" << num(py(p)) << "\" r=\"" << r
       << "\"/>\n";
  }
  os << "</g>\n";

  for (std::size_t k = 0; k < insets.size(); ++k) {
    const SvgInset& in = insets[k];
    // Window half-width in units; local coordinates are taken relative to
    // the centre at full precision before narrowing.
    const Scalar half = std::max(Scalar(in.separation * 4), Scalar("1e-9"));
    const double zoom = (box / 2) / half.convert_to<double>();
    const double ox = 20 + k * (box + 20), oy = height + 10;
    auto lx = [&](const Point& p) { return ox + box / 2 + ((p.x - in.center.x) * zoom).convert_to<double>(); };
    auto ly = [&](const Point& p) { return oy + box / 2 - ((p.y - in.center.y) * zoom).convert_to<double>(); };

    os << "<g class=\"inset\" data-cx=\"" << format_scalar(in.center.x, 20) << "\" data-cy=\""
       << format_scalar(in.center.y, 20) << "\" data-separation=\"" << format_scalar(in.separation, 16)
       << "\" data-vertex=\"" << in.vertex << "\" data-partner=\"" << in.partner << "\">\n";
    if (options.highlight) {
      os << "<circle class=\"hl\" stroke-width=\"2\" cx=\"" << num(px(in.center)) << "\" cy=\""
         << num(py(in.center)) << "\" r=\"" << num(0.3 * s) << "\"/>\n";
    }
    os << "<svg x=\"" << num(ox) << "\" y=\"" << num(oy) << "\" width=\"" << num(box) << "\" height=\""
       << num(box) << "\" viewBox=\"" << num(ox) << " " << num(oy) << " " << num(box) << " "
       << num(box) << "\">\n";
    os << "<rect class=\"frame\" x=\"" << num(ox) << "\" y=\"" << num(oy) << "\" width=\"" << num(box)
       << "\" height=\"" << num(box) << "\"/>\n";
    const Scalar reach = half * 2 + 1;
    for (const Edge& e : g.edges) {
      const Point& a = g.vertices[e.u];
      const Point& b = g.vertices[e.v];
      if (point_segment_distance(in.center, a, b) > half * 2) continue;
      if (distance(a, in.center) > reach && distance(b, in.center) > reach) continue;
      os << "<line class=\"edge\" stroke-width=\"2\" x1=\"" << num(lx(a)) << "\" y1=\"" << num(ly(a))
         << "\" x2=\"" << num(lx(b)) << "\" y2=\"" << num(ly(b)) << "\"/>\n";
    }
    for (const Point& p : g.vertices) {
      if (distance(p, in.center) > half * 2) continue;
      os << "<circle class=\"vtx\" cx=\"" << num(lx(p)) << "\" cy=\"" << num(ly(p)) << "\" r=\"3\"/>\n";
    }
    os << "</svg>\n";
    os << "<text class=\"cap\" x=\"" << num(ox) << "\" y=\"" << num(oy + box + 16) << "\">d = "
       << format_scalar(in.separation, 6) << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace matchstick
