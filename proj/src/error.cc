// Copyright 2026 The cyclat Authors
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

#include "cyclat/error.h"

namespace cyclat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kAdjacentNonzero: return "AdjacentNonzero";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotAnInversionSet: return "NotAnInversionSet";
    case ErrorCode::kPtolemyViolation: return "PtolemyViolation";
    case ErrorCode::kInvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::kQuadNotFlippable: return "QuadNotFlippable";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kNotInInterval: return "NotInInterval";
    case ErrorCode::kNotAChain: return "NotAChain";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kUnknownCheck: return "UnknownCheck";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cyclat
