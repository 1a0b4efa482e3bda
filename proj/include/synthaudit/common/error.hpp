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

#ifndef SYNTHAUDIT_COMMON_ERROR_HPP_
#define SYNTHAUDIT_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace synthaudit {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidSchema,
  kInvalidRecord,
  kSchemaMismatch,
  kMissingFile,
  kIoError,
  kHeaderMismatch,
  kBadCell,
  kTooFewRows,
  kEmptyDataset,
  kEmptyCorpus,
  kKTooLarge,
  kTrainTooSmall,
  kEmptyInput,
  kNonPositiveScale,
  kZeroEpsilon,
  kUnsupportedDelta,
  kVariantPreconditionFailed,
  kTooFewTrials,
  kTargetInBase,
  kReferenceTooSmall,
  kUnknownColumn,
  kEmptySynth,
  kNoVictims,
  kDomainTooLarge,
  kInvalidConfig,
  kInvalidModel,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map failures onto exit codes without parsing
// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_COMMON_ERROR_HPP_
