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

#include "labelqa/error.h"

namespace labelqa {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDanglingParent: return "DanglingParent";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptySource: return "EmptySource";
    case ErrorCode::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::kUnknownConceptId: return "UnknownConceptId";
    case ErrorCode::kDelimiterCollision: return "DelimiterCollision";
    case ErrorCode::kInvalidDelimiter: return "InvalidDelimiter";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSegmentMismatch: return "SegmentMismatch";
    case ErrorCode::kInvalidTag: return "InvalidTag";
    case ErrorCode::kInvalidConfidence: return "InvalidConfidence";
    case ErrorCode::kInvalidMargin: return "InvalidMargin";
    case ErrorCode::kInvalidPopulation: return "InvalidPopulation";
    case ErrorCode::kSampleTooLarge: return "SampleTooLarge";
    case ErrorCode::kUnknownSampleId: return "UnknownSampleId";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace labelqa
