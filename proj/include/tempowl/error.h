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

#ifndef TEMPOWL_ERROR_H_
#define TEMPOWL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tempowl {

// Stable error taxonomy. The numeric values are mirrored by tw_status in
// tempowl.h and must not be reordered.
enum class ErrorCode {
  kOk = 0,
  kInvalidArgument = 1,
  kParseError = 2,
  kIoError = 3,
  kEmptyTimes = 4,
  kNonIncreasingTimes = 5,
  kSnapshotCountMismatch = 6,
  kDuplicateNode = 7,
  kUnknownNode = 8,
  kSelfLoop = 9,
  kDuplicateEdge = 10,
  kMissingColour = 11,
  kNotColourPersistent = 12,
  kEmptyEdgeSet = 13,
  kLayerNotComputed = 14,
  kSizeLimitExceeded = 15,
  kConfigMismatch = 16,
  kUnknownFixture = 17,
  kUnknownTime = 18,
  kInternal = 19,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tempowl

#endif  // TEMPOWL_ERROR_H_
