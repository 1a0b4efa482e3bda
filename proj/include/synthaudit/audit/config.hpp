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

#ifndef SYNTHAUDIT_AUDIT_CONFIG_HPP_
#define SYNTHAUDIT_AUDIT_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "json.hpp"
#include "synthaudit/data/schema.hpp"
#include "synthaudit/generators/leaky.hpp"

namespace synthaudit {

// Independent per-column histograms without noise.
struct NonPrivateMarginals {};
// Laplace-noised per-column histograms at the given total epsilon.
struct DpMarginals {
  double epsilon = 1.0;
};
// A deliberately leaky release used to reproduce known failure modes.
struct LeakyPipeline {
  LeakySpec spec;
};

using Pipeline = std::variant<NonPrivateMarginals, DpMarginals, LeakyPipeline>;

// A verdict is flagged when the attack score is strictly above its threshold.
struct Thresholds {
  double eps_flag = 1.0;
  double mia_auc_flag = 0.6;
  double aia_adv_flag = 0.1;
  double recon_flag = 0.0;
};

struct AuditConfig {
  Pipeline pipeline = NonPrivateMarginals{};
  Thresholds thresholds;
  std::uint64_t seed = 0;
  // Histogram bins for the marginal pipelines and the reconstruction domain.
  std::size_t bins = 10;
  // Rows per synthetic release; 0 means "as many as the training set".
  // Ignored by leaky pipelines, whose size is fixed by the variant.
  std::size_t synth_rows = 0;
  double radius = 0.05;
  std::size_t probe_trials = 1000;
  double ci_level = 0.95;
  std::size_t n_shadow = 200;
  std::size_t aia_k = 5;
  // Empty selects the last schema column.
  std::string aia_hidden;

  // Throws kInvalidConfig naming the first offending field.
  void Validate() const;
  // Every field, defaults included. The schema renders leaky-spec records.
  nlohmann::json ToJson(const TabularSchema& schema) const;
};

std::string PipelineName(const Pipeline& pipeline);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_AUDIT_CONFIG_HPP_
