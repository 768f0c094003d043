// Copyright 2026 The tempowl Authors
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

#include "tempowl/error.h"

namespace tempowl {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEmptyTimes: return "EmptyTimes";
    case ErrorCode::kNonIncreasingTimes: return "NonIncreasingTimes";
    case ErrorCode::kSnapshotCountMismatch: return "SnapshotCountMismatch";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kMissingColour: return "MissingColour";
    case ErrorCode::kNotColourPersistent: return "NotColourPersistent";
    case ErrorCode::kEmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::kLayerNotComputed: return "LayerNotComputed";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kConfigMismatch: return "ConfigMismatch";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kUnknownTime: return "UnknownTime";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tempowl
