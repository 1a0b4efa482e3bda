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

#include "commands.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "synthaudit/attacks/aia.hpp"
#include "synthaudit/attacks/differencing.hpp"
#include "synthaudit/attacks/mia.hpp"
#include "synthaudit/attacks/reconstruction.hpp"
#include "synthaudit/audit/basecases.hpp"
#include "synthaudit/audit/run_audit.hpp"
#include "synthaudit/common/error.hpp"
#include "synthaudit/data/csv.hpp"
#include "synthaudit/generators/marginals.hpp"
#include "synthaudit/sbpm/oracle.hpp"

namespace synthaudit::cli {
namespace {

namespace fs = std::filesystem;

// Bad flag values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineFlags {
  std::string pipeline = "marginals";
  double epsilon = 1.0;
  std::size_t bins = 10;
  std::size_t rows = 0;
  double sigma = 0.0;

  void Register(CLI::App* app) {
    app->add_option("--pipeline", pipeline,
                    "marginals | dp | copy-test | outlier-leak | overfit")
        ->check(CLI::IsMember(
            {"marginals", "dp", "copy-test", "outlier-leak", "overfit"}));
    app->add_option("--epsilon", epsilon, "total privacy budget for dp");
    app->add_option("--bins", bins, "histogram bins per numeric column");
    app->add_option("--rows", rows, "synthetic rows (default: train rows)");
    app->add_option("--sigma", sigma, "resampling noise for overfit");
  }

  AuditConfig ToConfig() const {
    if (bins == 0) throw UsageError("bins must be positive");
    AuditConfig cfg;
    cfg.bins = bins;
    cfg.synth_rows = rows;
    if (pipeline == "dp") {
      if (!(epsilon > 0.0)) throw UsageError("epsilon must be positive");
      cfg.pipeline = DpMarginals{epsilon};
    } else if (pipeline == "copy-test") {
      cfg.pipeline = LeakyPipeline{CopyTest{}};
    } else if (pipeline == "outlier-leak") {
      cfg.pipeline = LeakyPipeline{OutlierLeak{}};
    } else if (pipeline == "overfit") {
      if (!(sigma >= 0.0)) throw UsageError("sigma must be non-negative");
      cfg.pipeline = LeakyPipeline{Overfit{sigma}};
    }
    return cfg;
  }
};

struct CommonFlags {
  std::string schema, train, test, synth, out;
  std::string format = "json";
  std::uint64_t seed = 0;
};

void AddData(CLI::App* app, CommonFlags& f, bool test, bool synth) {
  app->add_option("--schema", f.schema, "schema JSON")->required();
  app->add_option("--train", f.train, "training CSV")->required();
  if (test) app->add_option("--test", f.test, "holdout CSV")->required();
  if (synth) app->add_option("--synth", f.synth, "synthetic CSV")->required();
  app->add_option("--seed", f.seed, "random seed");
}

void AddOutput(CLI::App* app, CommonFlags& f, bool format) {
  app->add_option("--out", f.out, "output path (default: stdout)");
  if (format) {
    app->add_option("--format", f.format, "json | markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
  }
}

void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct Inputs {
  std::shared_ptr<const TabularSchema> schema;
  Dataset train, test, synth;
};

Inputs Load(const CommonFlags& f) {
  Inputs in;
  in.schema = std::make_shared<const TabularSchema>(TabularSchema::Load(f.schema));
  in.train = LoadCsv(f.train, *in.schema);
  if (!f.test.empty()) in.test = LoadCsv(f.test, *in.schema);
  if (!f.synth.empty()) in.synth = LoadCsv(f.synth, *in.schema);
  return in;
}

std::size_t CheckTargetRow(std::size_t row, const Dataset& train) {
  if (row >= train.n()) {
    throw UsageError("--target-row " + std::to_string(row) +
                     " is out of range for " + std::to_string(train.n()) +
                     " train rows");
  }
  return row;
}

Dataset WithoutRecord(const Dataset& data, const Record& record) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < data.n(); ++i) {
    if (!RecordsEqual(data.row(i), record)) keep.push_back(i);
  }
  return data.Subset(keep);
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Privacy audits for tabular synthetic data", "synthaudit"};
  app.require_subcommand(1);

  CommonFlags common;
  PipelineFlags pipe;

  // generate
  std::string model_out;
  auto* generate = app.add_subcommand("generate", "fit a pipeline and sample");
  AddData(generate, common, false, false);
  generate->add_option("--test", common.test, "holdout CSV (copy-test only)");
  generate->add_option("--out", common.out, "synthetic CSV")->required();
  generate->add_option("--model-out", model_out,
                       "model JSON (default: <out>.model.json)");
  pipe.Register(generate);

  // metrics
  auto* metrics = app.add_subcommand("metrics", "similarity-based metrics");
  AddData(metrics, common, true, true);
  AddOutput(metrics, common, false);

  // attack
  auto* attack = app.add_subcommand("attack", "run one attack");
  attack->require_subcommand(1);
  std::size_t target_row = 0, trials = 1000, n_shadow = 200, k = 5;
  double radius = 0.05, ci_level = 0.95;
  std::string hidden;

  auto* differencing =
      attack->add_subcommand("differencing", "differencing probe");
  AddData(differencing, common, false, false);
  AddOutput(differencing, common, false);
  pipe.Register(differencing);
  differencing->add_option("--target-row", target_row, "train row to target");
  differencing->add_option("--trials", trials, "probe rounds");
  differencing->add_option("--radius", radius, "proximity radius");
  differencing->add_option("--ci-level", ci_level, "confidence level");

  auto* mia = attack->add_subcommand("mia", "shadow-model membership inference");
  AddData(mia, common, true, false);
  AddOutput(mia, common, false);
  pipe.Register(mia);
  mia->add_option("--target-row", target_row, "train row to target");
  mia->add_option("--n-shadow", n_shadow, "shadow worlds (even, >= 20)");
  mia->add_option("--radius", radius, "proximity radius");

  auto* aia = attack->add_subcommand("aia", "k-NN attribute inference");
  AddData(aia, common, true, true);
  AddOutput(aia, common, false);
  aia->add_option("--hidden", hidden, "hidden column (default: last)");
  aia->add_option("--k", k, "neighbors");

  auto* recon =
      attack->add_subcommand("recon", "reconstruction via the metrics oracle");
  AddData(recon, common, true, false);
  AddOutput(recon, common, false);
  recon->add_option("--bins", pipe.bins, "bins per numeric column");

  // audit
  AuditConfig overrides;
  auto* audit = app.add_subcommand("audit", "full privacy audit");
  AddData(audit, common, true, false);
  AddOutput(audit, common, true);
  pipe.Register(audit);
  audit->add_option("--trials", overrides.probe_trials, "probe rounds");
  audit->add_option("--n-shadow", overrides.n_shadow, "shadow worlds");
  audit->add_option("--k", overrides.aia_k, "AIA neighbors");
  audit->add_option("--hidden", overrides.aia_hidden, "AIA hidden column");
  audit->add_option("--radius", overrides.radius, "proximity radius");
  audit->add_option("--ci-level", overrides.ci_level, "confidence level");
  audit->add_option("--eps-flag", overrides.thresholds.eps_flag);
  audit->add_option("--mia-auc-flag", overrides.thresholds.mia_auc_flag);
  audit->add_option("--aia-adv-flag", overrides.thresholds.aia_adv_flag);
  audit->add_option("--recon-flag", overrides.thresholds.recon_flag);

  // basecase
  std::string fig;
  double basecase_eps = 0.5;
  common.seed = kBasecaseSeed;
  auto* basecase = app.add_subcommand("basecase", "reproduce a base case");
  basecase->add_option("fig", fig, "6a | 6b | 6c")
      ->required()
      ->check(CLI::IsMember({"6a", "6b", "6c"}));
  basecase->add_option("--seed", common.seed, "random seed");
  basecase->add_option("--epsilon", basecase_eps, "DP budget for 6a");
  basecase->add_option("--out", common.out,
                       "directory for fixtures and reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) {
      AuditConfig cfg = pipe.ToConfig();
      cfg.seed = common.seed;
      if (std::holds_alternative<LeakyPipeline>(cfg.pipeline) &&
          pipe.pipeline == "copy-test" && common.test.empty()) {
        throw UsageError("--pipeline copy-test requires --test");
      }
      const Inputs in = Load(common);
      const Dataset test = common.test.empty() ? Dataset(in.schema) : in.test;
      PrivacyAccountant accountant;
      const Dataset synth = GenerateRelease(cfg, in.train, test, accountant);
      SaveCsv(synth, common.out);
      if (!std::holds_alternative<LeakyPipeline>(cfg.pipeline)) {
        // Refit deterministically for the model file; the accountant is a
        // scratch copy so the ledger reports the release fit only.
        GeneratorModel model;
        if (const auto* dp = std::get_if<DpMarginals>(&cfg.pipeline)) {
          PrivacyAccountant scratch;
          SeededRng fit_rng = SeededRng(cfg.seed, "release").Substream("fit");
          model = FitMarginalsDp(in.train, cfg.bins, {dp->epsilon, 0.0},
                                 scratch, fit_rng);
        } else {
          model = FitMarginals(in.train, cfg.bins);
        }
        model.Save(model_out.empty() ? common.out + ".model.json" : model_out);
      }
      out << Dump(accountant.ToJson());
      return kExitOk;
    }

    if (*metrics) {
      const Inputs in = Load(common);
      const SbpmReport report = EvaluateSbpm(
          in.train, in.test, in.synth,
          DistanceConfig::FitRanges({&in.train, &in.test}));
      Emit(Dump(report.ToJson()), common.out, out);
      return report.all_pass ? kExitOk : kExitMetricsFail;
    }

    if (*attack) {
      const Inputs in = Load(common);
      AttackResult result;
      if (*differencing) {
        if (trials < 100 || trials % 2 != 0) {
          throw UsageError("trials must be even and at least 100");
        }
        AuditConfig cfg = pipe.ToConfig();
        const std::size_t row = CheckTargetRow(target_row, in.train);
        const Record& target = in.train.row(row);
        const Dataset base = WithoutRecord(in.train, target);
        const std::size_t rows = cfg.synth_rows ? cfg.synth_rows : in.train.n();
        ProbeOptions options;
        options.radius = radius;
        options.ci_level = ci_level;
        result = DifferencingProbe(
            MakePipelineTrainer(cfg, Dataset(in.schema), rows), base,
            {target, "train_row_" + std::to_string(row)}, trials,
            SeededRng(common.seed, "differencing"), options);
      } else if (*mia) {
        AuditConfig cfg = pipe.ToConfig();
        const std::size_t row = CheckTargetRow(target_row, in.train);
        const Record& target = in.train.row(row);
        const std::size_t rows = cfg.synth_rows ? cfg.synth_rows : in.train.n();
        MiaOptions options;
        options.radius = radius;
        result = MiaShadow(MakePipelineTrainer(cfg, in.test, rows),
                           WithoutRecord(in.train.Concat(in.test), target),
                           {target, "train_row_" + std::to_string(row)},
                           n_shadow, SeededRng(common.seed, "mia"), options);
      } else if (*aia) {
        const std::string column =
            hidden.empty() ? in.schema->column(in.schema->size() - 1).name
                           : hidden;
        result = AiaAdvantage(in.synth, in.train, column, k,
                              DistanceConfig::FitRanges({&in.train, &in.test}));
      } else {
        MetricsOracle oracle(in.train, in.test,
                             DistanceConfig::FitRanges({&in.train, &in.test}));
        const CandidateDomain domain =
            CandidateDomain::FromSchema(in.schema, pipe.bins);
        const ReconOutcome outcome = ReconstructViaMetricsOracle(
            oracle, domain, SeededRng(common.seed, "reconstruction"));
        ReconResult r = ScoreReconstruction(outcome, in.train, domain.size());
        r.seed = common.seed;
        result = r;
      }
      Emit(Dump(AttackResultToJson(result)), common.out, out);
      return kExitOk;
    }

    if (*audit) {
      AuditConfig cfg = pipe.ToConfig();
      cfg.seed = common.seed;
      cfg.thresholds = overrides.thresholds;
      cfg.probe_trials = overrides.probe_trials;
      cfg.n_shadow = overrides.n_shadow;
      cfg.aia_k = overrides.aia_k;
      cfg.aia_hidden = overrides.aia_hidden;
      cfg.radius = overrides.radius;
      cfg.ci_level = overrides.ci_level;
      try {
        cfg.Validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const Inputs in = Load(common);
      const RiskReport report = RunAudit(in.train, in.test, cfg);
      Emit(RenderReport(report, common.format == "markdown"
                                    ? ReportFormat::kMarkdown
                                    : ReportFormat::kJson),
           common.out, out);
      return kExitOk;
    }

    // basecase
    const fs::path dir = common.out;
    if (!dir.empty()) fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
      if (!dir.empty()) WriteFile(dir / name, text);
    };
    bool met = false;
    if (fig == "6a") {
      if (!(basecase_eps > 0.0)) throw UsageError("epsilon must be positive");
      TwoRecordOptions options;
      options.epsilon = basecase_eps;
      const TwoRecordOutcome r = RunTwoRecordCase(common.seed, options);
      write("schema.json", Dump(r.train.schema().ToJson()));
      write("train.csv", FormatCsv(r.train));
      const std::string result = Dump(AttackResultToJson(r.probe));
      write("differencing.json", result);
      out << "basecase 6a: two-record worst case, epsilon "
          << FormatNumber(r.epsilon) << "\n"
          << "eps_hat: " << FormatNumber(r.probe.eps_hat) << "\n"
          << "eps_hat_within_epsilon: "
          << (r.expectation_met ? "true" : "false") << "\n";
      met = r.expectation_met;
    } else if (fig == "6b") {
      const CopyTestOutcome r = RunCopyTestCase(common.seed);
      write("schema.json", Dump(r.data.train.schema().ToJson()));
      write("train.csv", FormatCsv(r.data.train));
      write("test.csv", FormatCsv(r.data.test));
      write("synth.csv", FormatCsv(r.synth));
      write("report.json", RenderReport(r.report, ReportFormat::kJson));
      out << "basecase 6b: synthetic data replicates the test set\n"
          << "exact_test_matches: " << r.exact_test_matches << "/"
          << r.synth.n() << "\n\n"
          << RenderReport(r.report, ReportFormat::kMarkdown);
      met = r.expectation_met;
    } else {
      const OutlierLeakOutcome r = RunOutlierLeakCase(common.seed);
      write("schema.json", Dump(r.data.train.schema().ToJson()));
      write("train.csv", FormatCsv(r.data.train));
      write("test.csv", FormatCsv(r.data.test));
      write("synth.csv", FormatCsv(r.synth));
      write("report.json", RenderReport(r.report, ReportFormat::kJson));
      out << "basecase 6c: synthetic data leaks perturbed train outliers\n";
      for (std::size_t i = 0; i < r.outliers.size(); ++i) {
        out << "outlier train row " << r.outliers[i] << " "
            << r.data.train.schema().DescribeRecord(
                   r.data.train.row(r.outliers[i]))
            << ": nearest synthetic distance "
            << FormatNumber(r.nearest_synth_distance[i])
            << (r.nearest_synth_distance[i] <= kOutlierLeakRadius ? " (leaked)"
                                                                  : "")
            << "\n";
      }
      out << "\n" << RenderReport(r.report, ReportFormat::kMarkdown);
      met = r.expectation_met;
    }
    out << "expectation: " << (met ? "met" : "NOT met") << "\n";
    return met ? kExitOk : kExitBasecaseFail;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace synthaudit::cli
