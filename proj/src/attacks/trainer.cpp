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

#include "synthaudit/attacks/trainer.hpp"

#include "synthaudit/generators/marginals.hpp"

namespace synthaudit {

Trainer MakeIdentityTrainer() {
  return [](const Dataset& training, SeededRng&) { return training; };
}

Trainer MakeConstantTrainer(Dataset output) {
  return [output = std::move(output)](const Dataset&, SeededRng&) {
    return output;
  };
}

Trainer MakeMarginalsTrainer(std::size_t bins, std::size_t synth_rows) {
  return [bins, synth_rows](const Dataset& training, SeededRng& rng) {
    GeneratorModel model = FitMarginals(training, bins);
    SeededRng sample_rng = rng.Substream("sample");
    return SampleModel(model, synth_rows, sample_rng);
  };
}

Trainer MakeDpMarginalsTrainer(std::size_t bins, double epsilon,
                               std::size_t synth_rows) {
  return [bins, epsilon, synth_rows](const Dataset& training, SeededRng& rng) {
    PrivacyAccountant scratch;
    SeededRng fit_rng = rng.Substream("fit");
    GeneratorModel model =
        FitMarginalsDp(training, bins, {epsilon, 0.0}, scratch, fit_rng);
    SeededRng sample_rng = rng.Substream("sample");
    return SampleModel(model, synth_rows, sample_rng);
  };
}

Trainer MakeLeakyTrainer(LeakySpec spec, Dataset test) {
  return [spec = std::move(spec), test = std::move(test)](
             const Dataset& training, SeededRng& rng) {
    return GenerateLeaky(spec, training, test, rng);
  };
}

}  // namespace synthaudit
