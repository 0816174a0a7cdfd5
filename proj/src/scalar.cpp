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

#include "matchstick/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++mantissa_digits;
  }
  if (i < s.size() && (s[i] == '.' || s[i] == ',')) {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++mantissa_digits;
    }
  }
  if (mantissa_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exponent_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++exponent_digits;
    }
    if (exponent_digits == 0) return false;
  }
  return i == s.size();
}

}  // namespace

void set_precision(unsigned digits) {
  if (digits < kMinPrecision) {
    throw std::invalid_argument("precision must be at least " +
                                std::to_string(kMinPrecision) + " digits");
  }
  Scalar::default_precision(digits);
}

unsigned precision() { return Scalar::default_precision(); }

unsigned precision_from_environment() {
  const char* env = std::getenv("MSF_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || value < kMinPrecision || value > 100000) {
    throw std::invalid_argument(std::string("invalid MSF_PRECISION: ") + env);
  }
  return static_cast<unsigned>(value);
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(precision()) {
  set_precision(digits);
}

PrecisionScope::~PrecisionScope() { Scalar::default_precision(saved_); }

Scalar precision_tolerance(int offset) {
  return boost::multiprecision::pow(
      Scalar(10), offset - static_cast<int>(precision()));
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (!is_decimal_literal(s)) {
    throw Error(ErrorCode::ParseError, "not a decimal number: '" + s + "'");
  }
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return Scalar(s);
}

std::string format_scalar(const Scalar& value, unsigned digits) {
  if (digits == 0) digits = precision();
  if (value == 0) return Scalar(0).str(digits - 1, std::ios_base::scientific);
  return value.str(digits - 1, std::ios_base::scientific);
}

std::string format_lossless(const Scalar& value) {
  const auto bits = static_cast<double>(mpfr_get_prec(value.backend().data()));
  return format_scalar(value, static_cast<unsigned>(std::ceil(bits * std::log10(2.0))) + 1);
}

std::string format_fixed(const Scalar& value, unsigned decimals) {
  if (value == 0) return Scalar(0).str(decimals, std::ios_base::fixed);
  return value.str(decimals, std::ios_base::fixed);
}

Scalar pi() {
  Scalar result;
  mpfr_const_pi(result.backend().data(), MPFR_RNDN);
  return result;
}

Scalar degrees_to_radians(const Scalar& degrees) { return degrees * pi() / 180; }

Scalar radians_to_degrees(const Scalar& radians) { return radians * 180 / pi(); }

}  // namespace matchstick
