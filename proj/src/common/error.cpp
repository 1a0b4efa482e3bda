// Copyright 2026 The Synthaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synthaudit/common/error.hpp"

namespace synthaudit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidSchema: return "InvalidSchema";
    case ErrorCode::kInvalidRecord: return "InvalidRecord";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kHeaderMismatch: return "HeaderMismatch";
    case ErrorCode::kBadCell: return "BadCell";
    case ErrorCode::kTooFewRows: return "TooFewRows";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kTrainTooSmall: return "TrainTooSmall";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNonPositiveScale: return "NonPositiveScale";
    case ErrorCode::kZeroEpsilon: return "ZeroEpsilon";
    case ErrorCode::kUnsupportedDelta: return "UnsupportedDelta";
    case ErrorCode::kVariantPreconditionFailed:
      return "VariantPreconditionFailed";
    case ErrorCode::kTooFewTrials: return "TooFewTrials";
    case ErrorCode::kTargetInBase: return "TargetInBase";
    case ErrorCode::kReferenceTooSmall: return "ReferenceTooSmall";
    case ErrorCode::kUnknownColumn: return "UnknownColumn";
    case ErrorCode::kEmptySynth: return "EmptySynth";
    case ErrorCode::kNoVictims: return "NoVictims";
    case ErrorCode::kDomainTooLarge: return "DomainTooLarge";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidModel: return "InvalidModel";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace synthaudit
