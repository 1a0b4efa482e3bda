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

#include "synthaudit/attacks/results.hpp"

#include "synthaudit/common/error.hpp"

namespace synthaudit {

std::string AttackKindName(const AttackResult& result) {
  switch (result.index()) {
    case 0: return "differencing";
    case 1: return "mia";
    case 2: return "aia";
    default: return "reconstruction";
  }
}

double AttackScore(const AttackResult& result) {
  struct Score {
    double operator()(const DifferencingResult& r) const { return r.eps_hat; }
    double operator()(const MiaResult& r) const { return r.auc; }
    double operator()(const AiaResult& r) const { return r.advantage; }
    double operator()(const ReconResult& r) const { return r.score(); }
  };
  return std::visit(Score{}, result);
}

void to_json(nlohmann::json& j, const DecisionRule& r) {
  j = {{"observable", "count_within_radius"},
       {"threshold", r.threshold},
       {"direction", r.direction == Direction::kAbove ? "above" : "below"}};
}

void from_json(const nlohmann::json& j, DecisionRule& r) {
  r.threshold = j.at("threshold").get<double>();
  r.direction = j.at("direction").get<std::string>() == "above"
                    ? Direction::kAbove
                    : Direction::kBelow;
}

void to_json(nlohmann::json& j, const DifferencingResult& r) {
  j = {{"eps_hat", r.eps_hat},
       {"ci_level", r.ci_level},
       {"trials", r.trials},
       {"radius", r.radius},
       {"seed", r.seed},
       {"stream", r.stream},
       {"target_label", r.target_label},
       {"rule", r.rule},
       {"calibration_accuracy", r.calibration_accuracy},
       {"degenerate_calibration", r.degenerate_calibration},
       {"eval_without_target", r.eval_without_target},
       {"eval_with_target", r.eval_with_target},
       {"false_positives", r.false_positives},
       {"false_negatives", r.false_negatives},
       {"alpha_upper", r.alpha_upper},
       {"beta_upper", r.beta_upper}};
}

void from_json(const nlohmann::json& j, DifferencingResult& r) {
  j.at("eps_hat").get_to(r.eps_hat);
  j.at("ci_level").get_to(r.ci_level);
  j.at("trials").get_to(r.trials);
  j.at("radius").get_to(r.radius);
  j.at("seed").get_to(r.seed);
  j.at("stream").get_to(r.stream);
  j.at("target_label").get_to(r.target_label);
  j.at("rule").get_to(r.rule);
  j.at("calibration_accuracy").get_to(r.calibration_accuracy);
  j.at("degenerate_calibration").get_to(r.degenerate_calibration);
  j.at("eval_without_target").get_to(r.eval_without_target);
  j.at("eval_with_target").get_to(r.eval_with_target);
  j.at("false_positives").get_to(r.false_positives);
  j.at("false_negatives").get_to(r.false_negatives);
  j.at("alpha_upper").get_to(r.alpha_upper);
  j.at("beta_upper").get_to(r.beta_upper);
}

void to_json(nlohmann::json& j, const MiaResult& r) {
  j = {{"auc", r.auc},
       {"accuracy", r.accuracy},
       {"n_shadow", r.n_shadow},
       {"shadow_train_size", r.shadow_train_size},
       {"feature_count", r.feature_count},
       {"radius", r.radius},
       {"seed", r.seed},
       {"stream", r.stream},
       {"target_label", r.target_label}};
}

void from_json(const nlohmann::json& j, MiaResult& r) {
  j.at("auc").get_to(r.auc);
  j.at("accuracy").get_to(r.accuracy);
  j.at("n_shadow").get_to(r.n_shadow);
  j.at("shadow_train_size").get_to(r.shadow_train_size);
  j.at("feature_count").get_to(r.feature_count);
  j.at("radius").get_to(r.radius);
  j.at("seed").get_to(r.seed);
  j.at("stream").get_to(r.stream);
  j.at("target_label").get_to(r.target_label);
}

void to_json(nlohmann::json& j, const AiaResult& r) {
  j = {{"accuracy", r.accuracy},   {"baseline", r.baseline},
       {"advantage", r.advantage}, {"victims", r.victims},
       {"k", r.k},                 {"hidden_column", r.hidden_column},
       {"tolerance", r.tolerance}};
}

void from_json(const nlohmann::json& j, AiaResult& r) {
  j.at("accuracy").get_to(r.accuracy);
  j.at("baseline").get_to(r.baseline);
  j.at("advantage").get_to(r.advantage);
  j.at("victims").get_to(r.victims);
  j.at("k").get_to(r.k);
  j.at("hidden_column").get_to(r.hidden_column);
  j.at("tolerance").get_to(r.tolerance);
}

void to_json(nlohmann::json& j, const ReconResult& r) {
  j = {{"match_rate", r.match_rate},
       {"oracle_queries", r.oracle_queries},
       {"domain_size", r.domain_size},
       {"domain_truncated", r.domain_truncated},
       {"declared", r.declared},
       {"true_positives", r.true_positives},
       {"false_positives", r.false_positives},
       {"release_match_rate", r.release_match_rate},
       {"seed", r.seed}};
}

void from_json(const nlohmann::json& j, ReconResult& r) {
  j.at("match_rate").get_to(r.match_rate);
  j.at("oracle_queries").get_to(r.oracle_queries);
  j.at("domain_size").get_to(r.domain_size);
  j.at("domain_truncated").get_to(r.domain_truncated);
  j.at("declared").get_to(r.declared);
  j.at("true_positives").get_to(r.true_positives);
  j.at("false_positives").get_to(r.false_positives);
  j.at("release_match_rate").get_to(r.release_match_rate);
  j.at("seed").get_to(r.seed);
}

nlohmann::json AttackResultToJson(const AttackResult& result) {
  nlohmann::json j;
  std::visit([&](const auto& r) { j = r; }, result);
  j["kind"] = AttackKindName(result);
  return j;
}

AttackResult AttackResultFromJson(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "differencing") return j.get<DifferencingResult>();
  if (kind == "mia") return j.get<MiaResult>();
  if (kind == "aia") return j.get<AiaResult>();
  if (kind == "reconstruction") return j.get<ReconResult>();
  Fail(ErrorCode::kInvalidArgument, "unknown attack kind '" + kind + "'");
}

}  // namespace synthaudit
