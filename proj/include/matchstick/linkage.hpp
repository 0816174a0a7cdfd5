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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

/// Ring parameters: n copies, rail angle omega and the rail apex O = (apex_x, 0)
/// in template frame. omega is stored explicitly so continuation can visit
/// non-integer intermediate angles.
struct RingSpec {
  int n = 0;
  Scalar omega;
  Scalar apex_x;

  static RingSpec for_n(int n);
  Point apex() const { return {apex_x, Scalar(0)}; }
};

/// One placement in a construction plan. Every vertex of the upper half is
/// placed from already placed vertices so that the template's branch (which
/// side of each hinge a vertex lies on) is built in rather than inferred
/// from proximity.
struct ConstructionStep {
  enum class Kind {
    Driver,        // v = a + (cos t, sin t), t a free parameter
    Circles,       // unit circles about a and b, side `side` of a->b
    AxisCircle,    // unit circle about a meets the axis, side `side` in x
    RailCircle,    // unit circle about a meets the rail, side `side` along it
    ReflectPair,   // v = mirror of c across line ab (rhombus completion)
    ReflectAxis,   // v = mirror of c across the foot of a on the axis
    ReflectRail,   // v = mirror of c across the foot of a on the rail
  };
  Kind kind;
  VertexId v;
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;
  int side = 1;
};

/// A mirror-symmetric fixture brought into template frame (B at the origin,
/// E on the positive x-axis) and decomposed into the half that carries the
/// unknowns.
struct LinkageTemplate {
  std::string name;
  UnitGraph base;                   // full graph, template frame
  std::vector<VertexId> upper;      // y >= -1e-9, ascending
  std::vector<VertexId> axis;       // |y| < 1e-9, ascending
  std::vector<VertexId> rails;      // degree-2 vertices of the upper half
  std::vector<VertexId> mirror;     // mirror[v]: image of v across the axis
  std::vector<Edge> half_edges;     // both endpoints in the upper half
  std::vector<Edge> crossing_edges; // (upper u, upper image of a lower w)
  VertexId anchor = 0;              // B
  std::vector<ConstructionStep> plan;  // empty if the half is not constructible

  /// Variable layout: (x, y) of every upper vertex except B, then x_O.
  std::vector<VertexId> variable_vertices;
  std::size_t dimension() const { return 2 * variable_vertices.size() + 1; }
  std::size_t residual_count() const;

  /// Template-frame coordinates of the base graph packed as a state vector
  /// (x_O from the line through A and F).
  std::vector<Scalar> initial_state() const;
};

LinkageTemplate build_template(const UnitGraph& g);

/// Residual vector in the order unit edges, crossing edges, axis, rails.
std::vector<Scalar> residuals(const LinkageTemplate& t, const RingSpec& spec,
                              const std::vector<Scalar>& state);

/// Dense row-major Jacobian (residual_count x dimension).
std::vector<std::vector<Scalar>> jacobian(const LinkageTemplate& t, const RingSpec& spec,
                                          const std::vector<Scalar>& state);

struct SolveOptions {
  Scalar tol;                  // default 10^(10-p) when zero
  int max_iterations = 200;
  bool compute_rigidity = true;
  /// Solve the closure equations in construction-plan coordinates first.
  bool use_construction = true;
};

struct SolveResult {
  RingSpec spec;
  std::vector<Scalar> state;
  Scalar residual_norm;        // infinity norm
  int iterations = 0;
  Scalar sigma_min;            // smallest singular value of the Jacobian (-1 if skipped)
  bool converged = false;
  bool rank_deficient = false;
};

/// Driver parameters (edge angles of the Driver steps, then x_O) read off a
/// state vector.
std::vector<Scalar> plan_parameters(const LinkageTemplate& t, const std::vector<Scalar>& state);

/// State vector built by executing the plan. Throws NoIntersection or
/// DegenerateCenters when a placement is infeasible.
std::vector<Scalar> execute_plan(const LinkageTemplate& t, const RingSpec& spec,
                                 const std::vector<Scalar>& parameters);

/// Solves the closure problem. With a construction plan the driver
/// parameters are first solved by damped Newton on the constraints the plan
/// does not satisfy by construction; the result is then polished by
/// Levenberg-Marquardt on the full residual vector. Throws NoConvergence when
/// the iteration cap is hit or the damping runs away.
SolveResult solve(const LinkageTemplate& t, const RingSpec& spec,
                  const std::vector<Scalar>& init, const SolveOptions& options = {});

/// Full-graph coordinates (template frame) of a solved state: the upper half
/// from the state, the lower half as its mirror image.
std::vector<Point> full_coordinates(const LinkageTemplate& t, const std::vector<Scalar>& state);

struct AngleReadout {
  std::map<std::string, Scalar> angles;   // degrees, first annotated triple
  std::map<std::string, Scalar> spreads;  // max - min over all triples of a name
  Scalar gh;
  Scalar omega_check;                     // degrees
};

AngleReadout extract_angles(const LinkageTemplate& t, const SolveResult& solved);

/// Readout straight from a graph carrying angle marks and the labels A, C,
/// D, F, G and H.
AngleReadout extract_angles(const UnitGraph& g);

/// Steps omega from from.spec to 360/n1 degrees in steps of at most 0.05
/// degrees with a secant predictor and step halving. Throws NoConvergence
/// (message carries the last feasible omega) or StepCollapse.
SolveResult continue_in_n(const LinkageTemplate& t, const SolveResult& from, int n1,
                          const SolveOptions& options = {});

/// Reference values of the readout table, decimal commas as printed.
struct ReferenceReadout {
  std::string template_name;
  int n;
  std::map<std::string, std::string> angles;
  std::string gh;
};

const std::vector<ReferenceReadout>& reference_readouts();
const ReferenceReadout* find_reference(const std::string& template_name, int n);

/// "g1"/"G1" -> G1 fixture template, "g2"/"G2" -> G2, with its anchor n.
struct NamedTemplate {
  LinkageTemplate linkage;
  int anchor_n;
};
NamedTemplate named_template(const std::string& name);

}  // namespace matchstick
