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

#include "synthaudit/audit/run_audit.hpp"

#include <utility>
#include <vector>

#include "synthaudit/attacks/aia.hpp"
#include "synthaudit/attacks/differencing.hpp"
#include "synthaudit/attacks/mia.hpp"
#include "synthaudit/attacks/reconstruction.hpp"
#include "synthaudit/common/error.hpp"
#include "synthaudit/generators/marginals.hpp"
#include "synthaudit/sbpm/oracle.hpp"

namespace synthaudit {
namespace {

Dataset WithoutRecord(const Dataset& data, const Record& record) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < data.n(); ++i) {
    if (!RecordsEqual(data.row(i), record)) keep.push_back(i);
  }
  return data.Subset(keep);
}

}  // namespace

Trainer MakePipelineTrainer(const AuditConfig& cfg, const Dataset& test,
                            std::size_t synth_rows) {
  if (const auto* dp = std::get_if<DpMarginals>(&cfg.pipeline)) {
    return MakeDpMarginalsTrainer(cfg.bins, dp->epsilon, synth_rows);
  }
  if (const auto* leaky = std::get_if<LeakyPipeline>(&cfg.pipeline)) {
    return MakeLeakyTrainer(leaky->spec, test);
  }
  return MakeMarginalsTrainer(cfg.bins, synth_rows);
}

Dataset GenerateRelease(const AuditConfig& cfg, const Dataset& train,
                        const Dataset& test, PrivacyAccountant& accountant) {
  const SeededRng release(cfg.seed, "release");
  const std::size_t rows = cfg.synth_rows ? cfg.synth_rows : train.n();
  if (const auto* dp = std::get_if<DpMarginals>(&cfg.pipeline)) {
    SeededRng fit_rng = release.Substream("fit");
    const GeneratorModel model = FitMarginalsDp(
        train, cfg.bins, {dp->epsilon, 0.0}, accountant, fit_rng);
    SeededRng sample_rng = release.Substream("sample");
    return SampleModel(model, rows, sample_rng);
  }
  SeededRng rng = release;
  return MakePipelineTrainer(cfg, test, rows)(train, rng);
}

RiskReport RunAudit(const Dataset& train, const Dataset& test,
                    const AuditConfig& config) {
  config.Validate();
  RequireSameSchema(train, test, "audit");
  RequireNonEmpty(train, "audit train");
  RequireNonEmpty(test, "audit test");
  const TabularSchema& schema = train.schema();

  AuditConfig cfg = config;
  if (cfg.aia_hidden.empty()) {
    cfg.aia_hidden = schema.column(schema.size() - 1).name;
  }
  schema.ColumnIndex(cfg.aia_hidden);
  if (cfg.synth_rows == 0) cfg.synth_rows = train.n();

  const DistanceConfig dist = DistanceConfig::FitRanges({&train, &test});
  PrivacyAccountant accountant;
  const Dataset synth = GenerateRelease(cfg, train, test, accountant);
  const Trainer trainer = MakePipelineTrainer(cfg, test, cfg.synth_rows);

  RiskReport report;
  report.config = cfg.ToJson(schema);
  report.sbpm = EvaluateSbpm(train, test, synth, dist);
  report.synth_rows = synth.n();

  const SeededRng attacks(cfg.seed, "attacks");
  const Record& outlier = train.row(CentroidOutliers(train, 1).front());
  const TargetRecord target{outlier, "train_outlier"};

  {
    const Dataset base = WithoutRecord(train, outlier);
    ProbeOptions options;
    options.radius = cfg.radius;
    options.ci_level = cfg.ci_level;
    options.distance = dist;
    report.verdicts.push_back(MakeVerdict(
        Risk::kSinglingOut,
        DifferencingProbe(trainer, base, target, cfg.probe_trials,
                          attacks.Substream("differencing"), options),
        cfg.thresholds.eps_flag));
  }
  {
    const Dataset reference = WithoutRecord(train.Concat(test), outlier);
    MiaOptions options;
    options.radius = cfg.radius;
    options.distance = dist;
    report.verdicts.push_back(MakeVerdict(
        Risk::kLinkability,
        MiaShadow(trainer, reference, target, cfg.n_shadow,
                  attacks.Substream("mia"), options),
        cfg.thresholds.mia_auc_flag));
  }
  report.verdicts.push_back(MakeVerdict(
      Risk::kInference,
      AiaAdvantage(synth, train, cfg.aia_hidden, cfg.aia_k, dist),
      cfg.thresholds.aia_adv_flag));
  {
    MetricsOracle oracle(train, test, dist);
    CandidateDomain domain =
        CandidateDomain::FromSchema(train.shared_schema(), cfg.bins);
    const std::uint64_t full_size = domain.size();
    const bool truncated = full_size > kMaxReconDomain;
    if (truncated) domain = domain.Truncate(kMaxReconDomain);
    const ReconOutcome outcome = ReconstructViaMetricsOracle(
        oracle, domain, attacks.Substream("reconstruction"));
    ReconResult recon = ScoreReconstruction(outcome, train, domain.size());
    recon.domain_truncated = truncated;
    recon.release_match_rate = ReleaseMatchRate(synth, train.Concat(test));
    recon.seed = cfg.seed;
    report.verdicts.push_back(
        MakeVerdict(Risk::kOverall, recon, cfg.thresholds.recon_flag));
  }

  report.accountant = accountant.ToJson();
  return report;
}

}  // namespace synthaudit
