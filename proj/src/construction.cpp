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

#include "construction.hpp"

#include <algorithm>
#include <optional>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

using Kind = ConstructionStep::Kind;

Point rail_direction(const Scalar& omega) { return {-cos(omega / 2), sin(omega / 2)}; }

int sign_of(const Scalar& value) { return value < 0 ? -1 : 1; }

}  // namespace

namespace detail {

std::vector<ConstructionStep> make_plan(const LinkageTemplate& t) {
  const auto& p = t.base.vertices;
  const std::size_t n = p.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : t.half_edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto adjacent = [&](VertexId a, VertexId b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  std::vector<bool> on_axis(n, false), on_rail(n, false), in_half(n, false);
  for (VertexId v : t.axis) on_axis[v] = true;
  for (VertexId v : t.rails) on_rail[v] = true;
  for (VertexId v : t.upper) in_half[v] = true;

  const std::vector<Scalar> init = t.initial_state();
  const Point apex{init.back(), Scalar(0)};
  const Point a_label = p[t.base.label("A")];
  const Point d = Scalar(1) / distance(a_label, apex) * (a_label - apex);
  auto along = [&](VertexId v) { return dot(p[v] - apex, d); };
  const Scalar reach("1.9");

  std::vector<ConstructionStep> plan;
  std::vector<VertexId> placed{t.anchor};
  std::vector<bool> is_placed(n, false);
  is_placed[t.anchor] = true;

  auto rule_for = [&](VertexId v) -> std::optional<ConstructionStep> {
    std::vector<VertexId> nb;
    for (VertexId w : placed) {
      if (adjacent(v, w)) nb.push_back(w);
    }
    if (on_axis[v]) {
      for (VertexId c : nb) {
        if (on_axis[c]) continue;
        for (VertexId w : placed) {
          if (w != v && on_axis[w] && adjacent(c, w) &&
              (p[v].x - p[c].x) * (p[w].x - p[c].x) < 0) {
            return ConstructionStep{Kind::ReflectAxis, v, c, 0, w, 1};
          }
        }
      }
    }
    if (on_rail[v]) {
      for (VertexId c : nb) {
        for (VertexId w : placed) {
          if (w != v && on_rail[w] && adjacent(c, w) &&
              (along(v) - along(c)) * (along(w) - along(c)) < 0) {
            return ConstructionStep{Kind::ReflectRail, v, c, 0, w, 1};
          }
        }
      }
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const VertexId a = nb[i], b = nb[j];
        if (distance(p[a], p[b]) >= reach) continue;
        const Scalar side_v = orientation(p[a], p[b], p[v]);
        for (VertexId w : placed) {
          if (w != v && adjacent(a, w) && adjacent(b, w) &&
              side_v * orientation(p[a], p[b], p[w]) < 0) {
            return ConstructionStep{Kind::ReflectPair, v, a, b, w, 1};
          }
        }
      }
    }
    std::optional<ConstructionStep> best;
    Scalar best_score;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const VertexId a = nb[i], b = nb[j];
        const Scalar gap = distance(p[a], p[b]);
        if (gap >= reach) continue;
        const Scalar score = abs(gap - 1);
        if (!best || score < best_score) {
          best = ConstructionStep{Kind::Circles, v, a, b, 0, sign_of(orientation(p[a], p[b], p[v]))};
          best_score = score;
        }
      }
    }
    if (best) return best;
    if (!nb.empty() && on_axis[v]) {
      return ConstructionStep{Kind::AxisCircle, v, nb[0], 0, 0, sign_of(p[v].x - p[nb[0]].x)};
    }
    if (!nb.empty() && on_rail[v]) {
      return ConstructionStep{Kind::RailCircle, v, nb[0], 0, 0, sign_of(dot(p[v] - p[nb[0]], d))};
    }
    return std::nullopt;
  };

  while (placed.size() < t.upper.size()) {
    std::optional<ConstructionStep> step;
    for (VertexId v : t.upper) {
      if (is_placed[v]) continue;
      step = rule_for(v);
      if (step) break;
    }
    if (!step) {
      for (VertexId v : t.upper) {
        if (is_placed[v]) continue;
        for (VertexId w : placed) {
          if (adjacent(v, w)) {
            step = ConstructionStep{Kind::Driver, v, w, 0, 0, 1};
            break;
          }
        }
        if (step) break;
      }
    }
    if (!step) return {};
    plan.push_back(*step);
    placed.push_back(step->v);
    is_placed[step->v] = true;
  }
  return plan;
}

std::vector<Scalar> solve_in_plan(const LinkageTemplate& t, const RingSpec& spec,
                                  const std::vector<Scalar>& init, const Scalar& tol,
                                  int max_iterations, int& iterations) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  std::vector<Scalar> params = plan_parameters(t, init);
  const std::size_t k = params.size();
  auto evaluate = [&](const std::vector<Scalar>& q) {
    return residuals(t, spec, execute_plan(t, spec, q));
  };
  auto norm_inf = [](const std::vector<Scalar>& r) {
    Scalar m(0);
    for (const Scalar& v : r) m = std::max(m, Scalar(abs(v)));
    return m;
  };

  std::vector<Scalar> r = evaluate(params);
  Scalar current = norm_inf(r);
  const Scalar h = pow(Scalar(10), -static_cast<int>(precision()) / 3);
  while (current >= tol) {
    if (iterations >= max_iterations) {
      throw Error(ErrorCode::NoConvergence, "driver iteration cap reached");
    }
    ++iterations;
    Matrix j(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(k));
    for (std::size_t c = 0; c < k; ++c) {
      auto plus = params, minus = params;
      plus[c] += h;
      minus[c] -= h;
      const auto rp = evaluate(plus);
      const auto rm = evaluate(minus);
      for (std::size_t i = 0; i < r.size(); ++i) j(i, c) = (rp[i] - rm[i]) / (2 * h);
    }
    Vector rhs(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) rhs(i) = -r[i];
    const Vector step = j.colPivHouseholderQr().solve(rhs);

    bool accepted = false;
    Scalar fraction(1);
    for (int halving = 0; halving < 40 && !accepted; ++halving, fraction /= 2) {
      auto trial = params;
      for (std::size_t c = 0; c < k; ++c) trial[c] += fraction * step(c);
      try {
        auto trial_r = evaluate(trial);
        const Scalar trial_norm = norm_inf(trial_r);
        if (trial_norm < current) {
          params = std::move(trial);
          r = std::move(trial_r);
          current = trial_norm;
          accepted = true;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoIntersection && e.code() != ErrorCode::DegenerateCenters) {
          throw;
        }
      }
    }
    if (!accepted) throw Error(ErrorCode::NoConvergence, "driver step stalled");
  }
  return execute_plan(t, spec, params);
}

}  // namespace detail

std::vector<Scalar> plan_parameters(const LinkageTemplate& t, const std::vector<Scalar>& state) {
  const auto p = full_coordinates(t, state);
  std::vector<Scalar> params;
  for (const ConstructionStep& s : t.plan) {
    if (s.kind == Kind::Driver) {
      const Point d = p[s.v] - p[s.a];
      params.push_back(atan2(d.y, d.x));
    }
  }
  params.push_back(state.back());
  return params;
}

std::vector<Scalar> execute_plan(const LinkageTemplate& t, const RingSpec& spec,
                                 const std::vector<Scalar>& parameters) {
  std::vector<Point> p(t.base.vertex_count());
  p[t.anchor] = {Scalar(0), Scalar(0)};
  const Point apex{parameters.back(), Scalar(0)};
  const Point d = rail_direction(spec.omega);
  const Scalar guard = precision_tolerance(5);
  std::size_t next = 0;

  for (const ConstructionStep& s : t.plan) {
    Point& v = p[s.v];
    switch (s.kind) {
      case Kind::Driver: {
        const Scalar& angle = parameters[next++];
        v = p[s.a] + Point{cos(angle), sin(angle)};
        break;
      }
      case Kind::Circles:
        v = circle_circle_intersect(p[s.a], p[s.b], s.side > 0 ? Side::Left : Side::Right);
        break;
      case Kind::AxisCircle: {
        const Scalar h = p[s.a].y;
        if (abs(h) >= 1 - guard) throw Error(ErrorCode::NoIntersection, "unit circle misses the axis");
        v = {p[s.a].x + s.side * sqrt(1 - h * h), Scalar(0)};
        break;
      }
      case Kind::RailCircle: {
        const Point foot = apex + dot(p[s.a] - apex, d) * d;
        const Scalar h = distance(p[s.a], foot);
        if (h >= 1 - guard) throw Error(ErrorCode::NoIntersection, "unit circle misses the rail");
        v = foot + (s.side * sqrt(1 - h * h)) * d;
        break;
      }
      case Kind::ReflectPair:
        v = reflect(p[s.c], Line::through(p[s.a], p[s.b]));
        break;
      case Kind::ReflectAxis:
        v = {2 * p[s.a].x - p[s.c].x, Scalar(0)};
        break;
      case Kind::ReflectRail: {
        const Scalar ta = dot(p[s.a] - apex, d);
        const Scalar tc = dot(p[s.c] - apex, d);
        v = apex + (2 * ta - tc) * d;
        break;
      }
    }
  }

  std::vector<Scalar> state;
  state.reserve(t.dimension());
  for (VertexId v : t.variable_vertices) {
    state.push_back(p[v].x);
    state.push_back(p[v].y);
  }
  state.push_back(parameters.back());
  return state;
}

}  // namespace matchstick
