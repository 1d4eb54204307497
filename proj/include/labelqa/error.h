// Copyright 2026 The labelqa Authors.
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

#ifndef LABELQA_ERROR_H_
#define LABELQA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace labelqa {

enum class ErrorCode {
  kDanglingParent,
  kCycleDetected,
  kDuplicateId,
  kEmptySource,
  kLevelOutOfRange,
  kUnknownConceptId,
  kDelimiterCollision,
  kInvalidDelimiter,
  kEmptyCorpus,
  kOverflow,
  kLengthMismatch,
  kSegmentMismatch,
  kInvalidTag,
  kInvalidConfidence,
  kInvalidMargin,
  kInvalidPopulation,
  kSampleTooLarge,
  kUnknownSampleId,
  kParse,
  kIo,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library. The code is stable and is what
// tests and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace labelqa

#endif  // LABELQA_ERROR_H_
