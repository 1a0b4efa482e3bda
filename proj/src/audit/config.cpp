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

#include "synthaudit/audit/config.hpp"

#include <cmath>

#include "synthaudit/common/error.hpp"

namespace synthaudit {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) Fail(ErrorCode::kInvalidConfig, what);
}

}  // namespace

std::string PipelineName(const Pipeline& pipeline) {
  switch (pipeline.index()) {
    case 0:
      return "non_private_marginals";
    case 1:
      return "dp_marginals";
    default:
      return "leaky";
  }
}

void AuditConfig::Validate() const {
  if (const auto* dp = std::get_if<DpMarginals>(&pipeline)) {
    Require(std::isfinite(dp->epsilon) && dp->epsilon > 0.0,
            "epsilon must be positive");
  }
  const Thresholds& t = thresholds;
  Require(std::isfinite(t.eps_flag) && t.eps_flag >= 0.0,
          "eps_flag must be a non-negative number");
  Require(t.mia_auc_flag >= 0.0 && t.mia_auc_flag <= 1.0,
          "mia_auc_flag must lie in [0, 1]");
  Require(t.aia_adv_flag >= -1.0 && t.aia_adv_flag <= 1.0,
          "aia_adv_flag must lie in [-1, 1]");
  Require(t.recon_flag >= 0.0 && t.recon_flag <= 1.0,
          "recon_flag must lie in [0, 1]");
  Require(bins >= 1, "bins must be positive");
  Require(std::isfinite(radius) && radius >= 0.0,
          "radius must be a non-negative number");
  Require(probe_trials >= 100 && probe_trials % 2 == 0,
          "probe_trials must be even and at least 100");
  Require(ci_level > 0.0 && ci_level < 1.0, "ci_level must lie in (0, 1)");
  Require(n_shadow >= 20 && n_shadow % 2 == 0,
          "n_shadow must be even and at least 20");
  Require(aia_k >= 1, "aia_k must be positive");
}

nlohmann::json AuditConfig::ToJson(const TabularSchema& schema) const {
  nlohmann::json p = {{"kind", PipelineName(pipeline)}};
  if (const auto* dp = std::get_if<DpMarginals>(&pipeline)) {
    p["epsilon"] = dp->epsilon;
  } else if (const auto* leaky = std::get_if<LeakyPipeline>(&pipeline)) {
    p["spec"] = LeakySpecToJson(leaky->spec, schema);
  }
  return {
      {"pipeline", p},
      {"thresholds",
       {{"eps_flag", thresholds.eps_flag},
        {"mia_auc_flag", thresholds.mia_auc_flag},
        {"aia_adv_flag", thresholds.aia_adv_flag},
        {"recon_flag", thresholds.recon_flag}}},
      {"seed", seed},
      {"bins", bins},
      {"synth_rows", synth_rows},
      {"radius", radius},
      {"probe_trials", probe_trials},
      {"ci_level", ci_level},
      {"n_shadow", n_shadow},
      {"aia_k", aia_k},
      {"aia_hidden", aia_hidden},
  };
}

}  // namespace synthaudit
