// Copyright 2026 The GUTEK Authors.
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

#include "gutek/error.h"

namespace gutek {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownSegmenter: return "UnknownSegmenter";
    case ErrorCode::kInvalidRequest: return "InvalidRequest";
    case ErrorCode::kModelUnavailable: return "ModelUnavailable";
    case ErrorCode::kProtocolError: return "ProtocolError";
    case ErrorCode::kUnsupportedCapability: return "UnsupportedCapability";
    case ErrorCode::kDegenerateCorpus: return "DegenerateCorpus";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kMaskMismatch: return "MaskMismatch";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kBadResponse: return "BadResponse";
    case ErrorCode::kAlignmentError: return "AlignmentError";
    case ErrorCode::kEmptyScores: return "EmptyScores";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kEmptyDistribution: return "EmptyDistribution";
    case ErrorCode::kDegenerateLabels: return "DegenerateLabels";
    case ErrorCode::kEmptyCaseSet: return "EmptyCaseSet";
  }
  return "Unknown";
}

bool IsModelError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kModelUnavailable:
    case ErrorCode::kProtocolError:
    case ErrorCode::kUnsupportedCapability:
    case ErrorCode::kBadResponse:
    case ErrorCode::kDegenerateCorpus:
      return true;
    default:
      return false;
  }
}

}  // namespace gutek
