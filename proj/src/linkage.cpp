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

#include "matchstick/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "construction.hpp"
#include "matchstick/error.hpp"
#include "matchstick/fixtures.hpp"

namespace matchstick {

namespace {

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

constexpr double kHalfTolerance = 1e-9;
constexpr double kMirrorTolerance = 1e-12;
constexpr double kRankThreshold = 1e-12;

std::vector<long> variable_index(const LinkageTemplate& t) {
  std::vector<long> index(t.base.vertex_count(), -1);
  for (std::size_t i = 0; i < t.variable_vertices.size(); ++i) {
    index[t.variable_vertices[i]] = static_cast<long>(i);
  }
  return index;
}

void check_dimension(const LinkageTemplate& t, const std::vector<Scalar>& state) {
  if (state.size() != t.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state has " + std::to_string(state.size()) + " entries, template expects " +
                    std::to_string(t.dimension()));
  }
}

Point upper_point(const std::vector<long>& index, const std::vector<Scalar>& state,
                  VertexId v) {
  const long i = index[v];
  if (i < 0) return {Scalar(0), Scalar(0)};
  return {state[2 * i], state[2 * i + 1]};
}

Matrix to_matrix(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Scalar inf_norm(const std::vector<Scalar>& r) {
  Scalar m(0);
  for (const Scalar& v : r) m = std::max(m, Scalar(abs(v)));
  return m;
}

Scalar sum_squares(const std::vector<Scalar>& r) {
  Scalar s(0);
  for (const Scalar& v : r) s += v * v;
  return s;
}

Scalar smallest_singular_value(const Matrix& j) {
  Eigen::JacobiSVD<Matrix> svd(j);
  const auto& s = svd.singularValues();
  return s.size() == 0 ? Scalar(0) : Scalar(s(s.size() - 1));
}

}  // namespace

RingSpec RingSpec::for_n(int n) {
  if (n < 3) throw std::invalid_argument("ring needs at least 3 copies");
  RingSpec spec;
  spec.n = n;
  spec.omega = 2 * pi() / n;
  spec.apex_x = 0;
  return spec;
}

std::size_t LinkageTemplate::residual_count() const {
  return half_edges.size() + crossing_edges.size() + (axis.size() - 1) + rails.size();
}

std::vector<Scalar> LinkageTemplate::initial_state() const {
  std::vector<Scalar> state;
  state.reserve(dimension());
  for (VertexId v : variable_vertices) {
    state.push_back(base.vertices[v].x);
    state.push_back(base.vertices[v].y);
  }
  const Point& a = base.vertices[base.label("A")];
  const Point& f = base.vertices[base.label("F")];
  state.push_back(a.x - a.y * (f.x - a.x) / (f.y - a.y));
  return state;
}

LinkageTemplate build_template(const UnitGraph& g) {
  for (const char* name : {"A", "B", "E", "F"}) g.label(name);

  LinkageTemplate t;
  t.name = g.meta_value("fixture").value_or(g.meta_value("template").value_or("custom"));
  const Point b = g.vertices[g.label("B")];
  const Point e = g.vertices[g.label("E")];
  const Scalar theta = atan2(e.y - b.y, e.x - b.x);
  t.base = transformed(g, [&](const Point& p) { return rotate(p - b, Point{}, -theta); });
  t.anchor = g.label("B");
  t.base.vertices[t.anchor] = {Scalar(0), Scalar(0)};

  const std::size_t n = t.base.vertex_count();
  const Scalar half_tol(kHalfTolerance);
  for (VertexId v = 0; v < n; ++v) {
    const Scalar& y = t.base.vertices[v].y;
    if (y >= -half_tol) t.upper.push_back(v);
    if (abs(y) < half_tol) t.axis.push_back(v);
  }
  if (t.axis.size() < 2) {
    throw Error(ErrorCode::AsymmetricFixture, "fewer than two vertices on the mirror axis");
  }

  const Scalar mirror_tol(kMirrorTolerance);
  t.mirror.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const Point image{t.base.vertices[v].x, -t.base.vertices[v].y};
    VertexId best = v;
    Scalar best_distance = -1;
    for (VertexId w = 0; w < n; ++w) {
      const Scalar d = distance(image, t.base.vertices[w]);
      if (best_distance < 0 || d < best_distance) {
        best_distance = d;
        best = w;
      }
    }
    if (best_distance > mirror_tol) {
      throw Error(ErrorCode::AsymmetricFixture,
                  "vertex " + std::to_string(v) + " has no mirror image across BE");
    }
    t.mirror[v] = best;
  }
  std::set<Edge> edge_set(t.base.edges.begin(), t.base.edges.end());
  for (const Edge& edge : t.base.edges) {
    if (!edge_set.contains(Edge(t.mirror[edge.u], t.mirror[edge.v]))) {
      throw Error(ErrorCode::AsymmetricFixture, "edge set is not mirror-symmetric about BE");
    }
  }

  std::vector<bool> is_upper(n, false);
  for (VertexId v : t.upper) is_upper[v] = true;
  const auto degrees = t.base.degrees();
  for (VertexId v : t.upper) {
    if (degrees[v] == 2) t.rails.push_back(v);
  }
  if (t.rails.empty()) throw Error(ErrorCode::MissingLabels, "template has no rail vertices");

  std::set<Edge> crossing;
  for (const Edge& edge : t.base.edges) {
    if (is_upper[edge.u] && is_upper[edge.v]) {
      t.half_edges.push_back(edge);
    } else if (is_upper[edge.u] != is_upper[edge.v]) {
      const VertexId u = is_upper[edge.u] ? edge.u : edge.v;
      const VertexId w = t.mirror[edge.other(u)];
      // An axis endpoint makes this the mirror image of a half edge.
      if (std::binary_search(t.axis.begin(), t.axis.end(), u)) continue;
      crossing.insert(Edge(u, w));
    }
  }
  t.crossing_edges.assign(crossing.begin(), crossing.end());

  for (VertexId v : t.upper) {
    if (v != t.anchor) t.variable_vertices.push_back(v);
  }
  t.plan = detail::make_plan(t);
  return t;
}

std::vector<Scalar> residuals(const LinkageTemplate& t, const RingSpec& spec,
                              const std::vector<Scalar>& state) {
  check_dimension(t, state);
  const auto index = variable_index(t);
  const Scalar& apex_x = state.back();
  const Scalar nx = sin(spec.omega / 2);
  const Scalar ny = cos(spec.omega / 2);

  std::vector<Scalar> r;
  r.reserve(t.residual_count());
  for (const Edge& e : t.half_edges) {
    r.push_back(squared_norm(upper_point(index, state, e.u) - upper_point(index, state, e.v)) - 1);
  }
  for (const Edge& e : t.crossing_edges) {
    const Point pu = upper_point(index, state, e.u);
    const Point pw = upper_point(index, state, e.v);
    const Scalar dx = pu.x - pw.x;
    const Scalar sy = pu.y + pw.y;
    r.push_back(dx * dx + sy * sy - 1);
  }
  for (VertexId v : t.axis) {
    if (v != t.anchor) r.push_back(upper_point(index, state, v).y);
  }
  for (VertexId v : t.rails) {
    const Point p = upper_point(index, state, v);
    r.push_back((p.x - apex_x) * nx + p.y * ny);
  }
  return r;
}

std::vector<std::vector<Scalar>> jacobian(const LinkageTemplate& t, const RingSpec& spec,
                                          const std::vector<Scalar>& state) {
  check_dimension(t, state);
  const auto index = variable_index(t);
  const std::size_t cols = t.dimension();
  std::vector<std::vector<Scalar>> jac;
  jac.reserve(t.residual_count());
  auto row = [&] { return std::vector<Scalar>(cols, Scalar(0)); };
  auto put = [&](std::vector<Scalar>& r, VertexId v, int coord, const Scalar& value) {
    if (index[v] >= 0) r[2 * index[v] + coord] += value;
  };

  for (const Edge& e : t.half_edges) {
    const Point d = upper_point(index, state, e.u) - upper_point(index, state, e.v);
    auto r = row();
    put(r, e.u, 0, 2 * d.x);
    put(r, e.u, 1, 2 * d.y);
    put(r, e.v, 0, -2 * d.x);
    put(r, e.v, 1, -2 * d.y);
    jac.push_back(std::move(r));
  }
  for (const Edge& e : t.crossing_edges) {
    const Point pu = upper_point(index, state, e.u);
    const Point pw = upper_point(index, state, e.v);
    const Scalar dx = pu.x - pw.x;
    const Scalar sy = pu.y + pw.y;
    auto r = row();
    put(r, e.u, 0, 2 * dx);
    put(r, e.u, 1, 2 * sy);
    put(r, e.v, 0, -2 * dx);
    put(r, e.v, 1, 2 * sy);
    jac.push_back(std::move(r));
  }
  for (VertexId v : t.axis) {
    if (v == t.anchor) continue;
    auto r = row();
    put(r, v, 1, Scalar(1));
    jac.push_back(std::move(r));
  }
  const Scalar nx = sin(spec.omega / 2);
  const Scalar ny = cos(spec.omega / 2);
  for (VertexId v : t.rails) {
    auto r = row();
    put(r, v, 0, nx);
    put(r, v, 1, ny);
    r[cols - 1] = -nx;
    jac.push_back(std::move(r));
  }
  return jac;
}

SolveResult solve(const LinkageTemplate& t, const RingSpec& spec,
                  const std::vector<Scalar>& init, const SolveOptions& options) {
  check_dimension(t, init);
  const Scalar tol = options.tol > 0 ? options.tol : precision_tolerance(10);
  const Scalar lambda_floor = precision_tolerance(0);
  const std::size_t cols = t.dimension();

  SolveResult result;
  result.spec = spec;
  result.state = init;
  if (options.use_construction && !t.plan.empty()) {
    try {
      result.state = detail::solve_in_plan(t, spec, init, tol, options.max_iterations,
                                           result.iterations);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConvergence && e.code() != ErrorCode::NoIntersection &&
          e.code() != ErrorCode::DegenerateCenters) {
        throw;
      }
      result.state = init;
    }
  }
  std::vector<Scalar> r = residuals(t, spec, result.state);
  Scalar cost = sum_squares(r);
  Scalar lambda(0);

  while (inf_norm(r) >= tol) {
    if (result.iterations >= options.max_iterations) {
      throw Error(ErrorCode::NoConvergence,
                  "iteration cap " + std::to_string(options.max_iterations) +
                      " reached, residual " + format_scalar(inf_norm(r), 6));
    }
    ++result.iterations;

    const Matrix j = to_matrix(jacobian(t, spec, result.state), cols);
    const Eigen::Index m = j.rows();
    Matrix augmented = Matrix::Zero(m + static_cast<Eigen::Index>(cols), cols);
    augmented.topRows(m) = j;
    Vector rhs = Vector::Zero(augmented.rows());
    for (Eigen::Index i = 0; i < m; ++i) rhs(i) = -r[i];
    if (lambda > 0) {
      const Scalar root = sqrt(lambda);
      for (std::size_t i = 0; i < cols; ++i) augmented(m + i, i) = root;
    }
    const Vector step = augmented.colPivHouseholderQr().solve(rhs);

    std::vector<Scalar> trial = result.state;
    for (std::size_t i = 0; i < cols; ++i) trial[i] += step(i);
    std::vector<Scalar> trial_r = residuals(t, spec, trial);
    const Scalar trial_cost = sum_squares(trial_r);
    if (trial_cost < cost) {
      result.state = std::move(trial);
      r = std::move(trial_r);
      cost = trial_cost;
      lambda /= 10;
      if (lambda < lambda_floor) lambda = 0;
    } else {
      lambda = lambda > 0 ? lambda * 10 : Scalar("1e-12");
      if (lambda > Scalar("1e20")) {
        throw Error(ErrorCode::NoConvergence,
                    "damping diverged, residual " + format_scalar(inf_norm(r), 6));
      }
    }
  }

  result.residual_norm = inf_norm(r);
  result.converged = true;
  result.spec.apex_x = result.state.back();
  if (options.compute_rigidity) {
    result.sigma_min = smallest_singular_value(to_matrix(jacobian(t, spec, result.state), cols));
    result.rank_deficient = result.sigma_min < Scalar(kRankThreshold);
  } else {
    result.sigma_min = -1;
  }
  return result;
}

std::vector<Point> full_coordinates(const LinkageTemplate& t, const std::vector<Scalar>& state) {
  check_dimension(t, state);
  const auto index = variable_index(t);
  std::vector<bool> is_upper(t.base.vertex_count(), false);
  for (VertexId v : t.upper) is_upper[v] = true;
  std::vector<Point> out(t.base.vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) {
    if (is_upper[v]) {
      out[v] = upper_point(index, state, v);
    } else {
      const Point p = upper_point(index, state, t.mirror[v]);
      out[v] = {p.x, -p.y};
    }
  }
  return out;
}

AngleReadout extract_angles(const UnitGraph& g) {
  const auto& p = g.vertices;
  AngleReadout out;
  std::map<std::string, std::pair<Scalar, Scalar>> range;
  for (const AngleMark& mark : angle_marks(g)) {
    const Scalar deg = radians_to_degrees(ccw_angle(p[mark.from], p[mark.vertex], p[mark.to]));
    out.angles.emplace(mark.name, deg);
    auto [it, inserted] = range.emplace(mark.name, std::make_pair(deg, deg));
    if (!inserted) {
      it->second.first = std::min(it->second.first, deg);
      it->second.second = std::max(it->second.second, deg);
    }
  }
  for (const auto& [name, lh] : range) out.spreads[name] = lh.second - lh.first;

  out.gh = distance(p[g.label("G")], p[g.label("H")]);
  const Point fa = p[g.label("A")] - p[g.label("F")];
  const Point dc = p[g.label("C")] - p[g.label("D")];
  out.omega_check = radians_to_degrees(angle_between(fa, dc));
  return out;
}

AngleReadout extract_angles(const LinkageTemplate& t, const SolveResult& solved) {
  UnitGraph g = t.base;
  g.vertices = full_coordinates(t, solved.state);
  return extract_angles(g);
}

SolveResult continue_in_n(const LinkageTemplate& t, const SolveResult& from, int n1,
                          const SolveOptions& options) {
  if (!from.converged) throw Error(ErrorCode::NoConvergence, "continuation start is not solved");
  if (n1 == from.spec.n) return from;
  const RingSpec target = RingSpec::for_n(n1);
  const Scalar max_step = degrees_to_radians(Scalar("0.05"));

  SolveOptions inner = options;
  inner.compute_rigidity = false;

  Scalar omega = from.spec.omega;
  std::vector<Scalar> state = from.state;
  std::optional<std::pair<Scalar, std::vector<Scalar>>> previous;
  Scalar step = std::min(max_step, Scalar(abs(target.omega - omega)));
  const int direction = target.omega > omega ? 1 : -1;
  int total_iterations = 0;

  while (omega != target.omega) {
    const Scalar remaining = abs(target.omega - omega);
    const bool last = step >= remaining;
    const Scalar next_omega = last ? target.omega : Scalar(omega + direction * step);

    std::vector<Scalar> guess = state;
    if (previous) {
      const Scalar ratio = (next_omega - omega) / (omega - previous->first);
      for (std::size_t i = 0; i < guess.size(); ++i) {
        guess[i] += ratio * (state[i] - previous->second[i]);
      }
    }
    RingSpec spec = target;
    spec.omega = next_omega;
    spec.n = last ? n1 : 0;
    try {
      SolveResult r = solve(t, spec, guess, inner);
      total_iterations += r.iterations;
      previous = std::make_pair(omega, state);
      omega = next_omega;
      state = std::move(r.state);
      step = std::min(max_step, Scalar(step * 2));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConvergence) throw;
      step /= 2;
      if (step < Scalar("1e-12")) {
        const Matrix j = to_matrix(jacobian(t, spec, state), t.dimension());
        Eigen::ColPivHouseholderQR<Matrix> qr(j);
        qr.setThreshold(Scalar(kRankThreshold));
        const std::string where =
            "last feasible omega " + format_fixed(radians_to_degrees(omega), 12) + " deg";
        if (qr.rank() < static_cast<Eigen::Index>(t.dimension())) {
          throw Error(ErrorCode::StepCollapse, "linkage locks up; " + where);
        }
        throw Error(ErrorCode::NoConvergence, "continuation stalled; " + where);
      }
    }
  }

  SolveResult result = solve(t, target, state, options);
  result.iterations += total_iterations;
  return result;
}

const std::vector<ReferenceReadout>& reference_readouts() {
  static const std::vector<ReferenceReadout> table{
      {"G1", 100,
       {{"alpha", "91,58566772584003"},
        {"beta", "43,94364026236698"},
        {"gamma", "119,90161279889431"}},
       "0,00171718039014"},
      {"G2", 169,
       {{"alpha", "78,95050838942406"},
        {"beta", "38,40835335322197"},
        {"gamma", "119,99637583181277"},
        {"delta", "122,42510282308054"}},
       "0,00006325366750"},
  };
  return table;
}

const ReferenceReadout* find_reference(const std::string& template_name, int n) {
  for (const auto& ref : reference_readouts()) {
    if (ref.template_name == template_name && ref.n == n) return &ref;
  }
  return nullptr;
}

NamedTemplate named_template(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "G1") return {build_template(load_fixture("G1")), 100};
  if (upper == "G2") return {build_template(load_fixture("G2")), 169};
  throw Error(ErrorCode::UnknownFixture, "no linkage template named '" + name + "'");
}

}  // namespace matchstick
