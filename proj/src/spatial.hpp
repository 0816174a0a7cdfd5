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

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "matchstick/geometry.hpp"

namespace matchstick::detail {

/// Uniform grid over double-precision shadows of the coordinates. Used only
/// to enumerate candidate pairs; every decision is made at full precision.
class PointGrid {
 public:
  PointGrid(const std::vector<Point>& points, double cell) : cell_(cell) {
    coarse_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double x = points[i].x.convert_to<double>();
      const double y = points[i].y.convert_to<double>();
      coarse_.push_back({x, y});
      cells_[key(cell_of(x), cell_of(y))].push_back(i);
    }
  }

  /// Calls f(j) for every point whose cell is within radius of (x, y).
  template <typename F>
  void near(double x, double y, double radius, F&& f) const {
    const long reach = static_cast<long>(std::ceil(radius / cell_));
    const long cx = cell_of(x), cy = cell_of(y);
    for (long i = cx - reach; i <= cx + reach; ++i) {
      for (long j = cy - reach; j <= cy + reach; ++j) {
        auto it = cells_.find(key(i, j));
        if (it == cells_.end()) continue;
        for (std::size_t k : it->second) f(k);
      }
    }
  }

  double x(std::size_t i) const { return coarse_[i].first; }
  double y(std::size_t i) const { return coarse_[i].second; }

 private:
  long cell_of(double v) const { return static_cast<long>(std::floor(v / cell_)); }
  static std::uint64_t key(long i, long j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
  }

  double cell_;
  std::vector<std::pair<double, double>> coarse_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace matchstick::detail
