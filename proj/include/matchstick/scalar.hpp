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

#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

namespace matchstick {

/// Arbitrary-precision real. The working precision is a single process-wide
/// context (significant decimal digits); values pick it up when constructed.
using Scalar = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 60;
inline constexpr unsigned kMinPrecision = 30;

/// Sets the working precision. Throws std::invalid_argument below 30 digits.
void set_precision(unsigned digits);
unsigned precision();

/// Precision from `MSF_PRECISION` if set and valid, otherwise the default.
unsigned precision_from_environment();

/// Restores the previous precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// 10^(offset - p): the precision-relative tolerance family used throughout
/// (10^(5-p) for kernel checks, 10^(10-p) for solver residuals, ...).
Scalar precision_tolerance(int offset);

/// Parses a decimal literal. A single decimal comma is accepted and treated
/// as a decimal point ("91,5856" == "91.5856").
Scalar parse_scalar(std::string_view text);

/// Scientific notation with `digits` significant digits (default: the
/// working precision). Negative zero is printed as zero.
std::string format_scalar(const Scalar& value, unsigned digits = 0);

/// Scientific notation with enough digits that parsing the text at the
/// same precision restores `value` bit for bit.
std::string format_lossless(const Scalar& value);

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(const Scalar& value, unsigned decimals);

Scalar pi();
Scalar degrees_to_radians(const Scalar& degrees);
Scalar radians_to_degrees(const Scalar& radians);

}  // namespace matchstick
