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

#ifndef SYNTHAUDIT_ATTACKS_RESULTS_HPP_
#define SYNTHAUDIT_ATTACKS_RESULTS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "json.hpp"
#include "synthaudit/data/schema.hpp"

namespace synthaudit {

// The record an adversary focuses on.
struct TargetRecord {
  Record record;
  std::string label;
};

enum class Direction { kAbove, kBelow };

// Acceptance region of a distinguishing test on a scalar observable: the
// "target included" world is guessed when the observable is strictly above
// (kAbove) or strictly below (kBelow) the threshold.
struct DecisionRule {
  double threshold = 0.0;
  Direction direction = Direction::kAbove;

  bool Accepts(double observable) const {
    return direction == Direction::kAbove ? observable > threshold
                                          : observable < threshold;
  }

  friend bool operator==(const DecisionRule&, const DecisionRule&) = default;
};

struct DifferencingResult {
  double eps_hat = 0.0;
  double ci_level = 0.95;
  std::size_t trials = 0;
  // Configuration echo.
  double radius = 0.05;
  std::uint64_t seed = 0;
  std::string stream;
  std::string target_label;
  // Calibration outcome.
  DecisionRule rule;
  double calibration_accuracy = 0.0;
  bool degenerate_calibration = false;
  // Evaluation counts and one-sided upper confidence bounds.
  std::size_t eval_without_target = 0;
  std::size_t eval_with_target = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double alpha_upper = 1.0;
  double beta_upper = 1.0;

  friend bool operator==(const DifferencingResult&,
                         const DifferencingResult&) = default;
};

struct MiaResult {
  double auc = 0.5;
  double accuracy = 0.5;
  std::size_t n_shadow = 0;
  std::size_t shadow_train_size = 0;
  std::size_t feature_count = 0;
  double radius = 0.05;
  std::uint64_t seed = 0;
  std::string stream;
  std::string target_label;

  friend bool operator==(const MiaResult&, const MiaResult&) = default;
};

struct AiaResult {
  double accuracy = 0.0;
  double baseline = 0.0;
  double advantage = 0.0;
  std::size_t victims = 0;
  std::size_t k = 5;
  std::string hidden_column;
  double tolerance = 0.05;

  friend bool operator==(const AiaResult&, const AiaResult&) = default;
};

struct ReconResult {
  // Share of hidden train rows (with multiplicity) whose exact value was
  // declared a member through the metrics oracle.
  double match_rate = 0.0;
  std::size_t oracle_queries = 0;
  std::size_t domain_size = 0;
  bool domain_truncated = false;
  std::size_t declared = 0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  // Share of the audited population (train and test records) republished
  // verbatim in the released synthetic data. Set by audits only.
  double release_match_rate = 0.0;
  std::uint64_t seed = 0;

  // The score compared against the reconstruction threshold.
  double score() const { return std::max(match_rate, release_match_rate); }

  friend bool operator==(const ReconResult&, const ReconResult&) = default;
};

using AttackResult =
    std::variant<DifferencingResult, MiaResult, AiaResult, ReconResult>;

// Name used in serialized reports: differencing, mia, aia or reconstruction.
std::string AttackKindName(const AttackResult& result);
// The single number compared against the attack's threshold.
double AttackScore(const AttackResult& result);

void to_json(nlohmann::json& j, const DecisionRule& r);
void from_json(const nlohmann::json& j, DecisionRule& r);
void to_json(nlohmann::json& j, const DifferencingResult& r);
void from_json(const nlohmann::json& j, DifferencingResult& r);
void to_json(nlohmann::json& j, const MiaResult& r);
void from_json(const nlohmann::json& j, MiaResult& r);
void to_json(nlohmann::json& j, const AiaResult& r);
void from_json(const nlohmann::json& j, AiaResult& r);
void to_json(nlohmann::json& j, const ReconResult& r);
void from_json(const nlohmann::json& j, ReconResult& r);

nlohmann::json AttackResultToJson(const AttackResult& result);
AttackResult AttackResultFromJson(const nlohmann::json& j);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_RESULTS_HPP_
