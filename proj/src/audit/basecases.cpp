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

#include "synthaudit/audit/basecases.hpp"

#include <memory>
#include <unordered_set>

#include "synthaudit/attacks/differencing.hpp"
#include "synthaudit/attacks/trainer.hpp"
#include "synthaudit/audit/run_audit.hpp"
#include "synthaudit/data/neighbors.hpp"
#include "synthaudit/data/sampling.hpp"
#include "synthaudit/generators/leaky.hpp"

namespace synthaudit {

GaussianFixture MakeGaussianFixture(std::uint64_t seed) {
  const SeededRng root(seed, "gaussian_fixture");
  SeededRng train_rng = root.Substream("train");
  SeededRng test_rng = root.Substream("test");
  return {Gaussian2dSample(10, train_rng), Gaussian2dSample(10, test_rng)};
}

TwoRecordOutcome RunTwoRecordCase(std::uint64_t seed,
                                  const TwoRecordOptions& options) {
  const Dataset empty(Gaussian2dSchema());
  SeededRng unused(seed, "unused");
  TwoRecordOutcome out;
  out.train = GenerateLeaky(TwoRecordWorstCase{options.target, options.other},
                            empty, empty, unused);
  out.epsilon = options.epsilon;

  const Dataset base(out.train.shared_schema(), {options.other});
  ProbeOptions probe_options;
  probe_options.radius = options.radius;
  probe_options.ci_level = options.ci_level;
  out.probe = DifferencingProbe(
      MakeDpMarginalsTrainer(options.bins, options.epsilon, options.synth_rows),
      base, {options.target, "outlier"}, options.trials,
      SeededRng(seed, "two_record"), probe_options);
  out.expectation_met = out.probe.eps_hat <= options.epsilon;
  return out;
}

CopyTestOutcome RunCopyTestCase(std::uint64_t seed) {
  CopyTestOutcome out{MakeGaussianFixture(seed), {}, {}, 0, {}, false};
  const GaussianFixture& d = out.data;
  SeededRng rng(seed, "copy_test");
  out.synth = GenerateLeaky(CopyTest{}, d.train, d.test, rng);
  out.sbpm = EvaluateSbpm(d.train, d.test, out.synth,
                          DistanceConfig::FitRanges({&d.train, &d.test}));
  std::unordered_set<Record, RecordHash, RecordEq> test_rows(
      d.test.rows().begin(), d.test.rows().end());
  for (const Record& r : out.synth.rows()) {
    if (test_rows.count(r)) ++out.exact_test_matches;
  }

  AuditConfig cfg;
  cfg.pipeline = LeakyPipeline{CopyTest{}};
  cfg.seed = seed;
  out.report = RunAudit(d.train, d.test, cfg);

  bool overall_flagged = false;
  for (const RiskVerdict& v : out.report.verdicts) {
    if (v.risk == Risk::kOverall) overall_flagged = v.flagged;
  }
  out.expectation_met = out.sbpm.all_pass &&
                        out.exact_test_matches == out.synth.n() &&
                        out.synth.n() == d.test.n() && overall_flagged;
  return out;
}

OutlierLeakOutcome RunOutlierLeakCase(std::uint64_t seed) {
  OutlierLeakOutcome out{MakeGaussianFixture(seed), {}, {}, {}, {}, {}, false};
  const GaussianFixture& d = out.data;
  const OutlierLeak spec;
  SeededRng rng(seed, "outlier_leak");
  out.synth = GenerateLeaky(spec, d.train, d.test, rng);
  const DistanceConfig cfg = DistanceConfig::FitRanges({&d.train, &d.test});
  out.sbpm = EvaluateSbpm(d.train, d.test, out.synth, cfg);

  out.outliers = CentroidOutliers(d.train, spec.k);
  bool all_close = true;
  for (std::size_t i : out.outliers) {
    const double nearest =
        NearestNeighborsSerial(d.train.row(i), out.synth, 1, cfg)
            .front()
            .distance;
    out.nearest_synth_distance.push_back(nearest);
    all_close = all_close && nearest <= kOutlierLeakRadius;
  }

  AuditConfig audit_cfg;
  audit_cfg.pipeline = LeakyPipeline{spec};
  audit_cfg.seed = seed;
  out.report = RunAudit(d.train, d.test, audit_cfg);
  out.expectation_met = out.sbpm.all_pass && all_close && out.report.flagged();
  return out;
}

}  // namespace synthaudit
