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

#include <vector>

#include "matchstick/linkage.hpp"

namespace matchstick::detail {

std::vector<ConstructionStep> make_plan(const LinkageTemplate& t);

/// Damped Newton on the driver parameters of the plan. Returns the executed
/// state; throws NoConvergence.
std::vector<Scalar> solve_in_plan(const LinkageTemplate& t, const RingSpec& spec,
                                  const std::vector<Scalar>& init, const Scalar& tol,
                                  int max_iterations, int& iterations);

}  // namespace matchstick::detail
