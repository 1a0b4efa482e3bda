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

#ifndef SYNTHAUDIT_ATTACKS_AIA_HPP_
#define SYNTHAUDIT_ATTACKS_AIA_HPP_

#include <cstddef>
#include <string_view>

#include "synthaudit/attacks/results.hpp"
#include "synthaudit/data/distance.hpp"

namespace synthaudit {

// Predicts the hidden column of `partial` (whose own hidden value is ignored)
// from its k nearest synthetic rows, measuring distance on the other columns
// only. Categorical: majority level, ties to the lowest level index. Numeric:
// neighbor mean. k larger than the synthetic set uses every row.
// Throws kUnknownColumn, kEmptySynth, kInvalidArgument (k == 0).
Value AiaKnn(const Dataset& synth, const Record& partial,
             std::string_view hidden_column, std::size_t k,
             const DistanceConfig& cfg);

// Runs AiaKnn on every victim. A prediction is correct when it equals the
// truth (categorical) or lies within `tolerance` normalized distance of it
// (numeric). The baseline always predicts the synthetic marginal mode or
// mean; advantage = accuracy - baseline. Throws kNoVictims.
AiaResult AiaAdvantage(const Dataset& synth, const Dataset& victims,
                       std::string_view hidden_column, std::size_t k,
                       const DistanceConfig& cfg, double tolerance = 0.05);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_AIA_HPP_
