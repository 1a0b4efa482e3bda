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

#ifndef SYNTHAUDIT_ATTACKS_TRAINER_HPP_
#define SYNTHAUDIT_ATTACKS_TRAINER_HPP_

#include <cstddef>
#include <functional>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/rng.hpp"
#include "synthaudit/generators/leaky.hpp"

namespace synthaudit {

// Train-then-sample pipeline under attack. Attacks call it once per trial,
// possibly from several threads at once, so implementations must be
// reentrant; all randomness must come from the supplied rng.
using Trainer = std::function<Dataset(const Dataset& training, SeededRng& rng)>;

// Returns its training set unchanged.
Trainer MakeIdentityTrainer();
// Ignores its input and always returns `output`.
Trainer MakeConstantTrainer(Dataset output);
// Non-private marginals, then `synth_rows` samples. A fixed output size keeps
// the row count itself from depending on the training set.
Trainer MakeMarginalsTrainer(std::size_t bins, std::size_t synth_rows);
// DP marginals at `epsilon`. Each call charges a private scratch accountant,
// so attack simulations never touch a release's ledger.
Trainer MakeDpMarginalsTrainer(std::size_t bins, double epsilon,
                               std::size_t synth_rows);
Trainer MakeLeakyTrainer(LeakySpec spec, Dataset test);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_TRAINER_HPP_
