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

#include "matchstick/error.hpp"

namespace matchstick {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateCenters: return "DegenerateCenters";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VersionError: return "VersionError";
    case ErrorCode::MergeAmbiguity: return "MergeAmbiguity";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::AsymmetricFixture: return "AsymmetricFixture";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::StepCollapse: return "StepCollapse";
    case ErrorCode::NoPassingN: return "NoPassingN";
    case ErrorCode::SeamMismatch: return "SeamMismatch";
    case ErrorCode::MergeFailure: return "MergeFailure";
    case ErrorCode::UnexpectedCollision: return "UnexpectedCollision";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace matchstick
