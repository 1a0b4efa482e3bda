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

#include "synthaudit/audit/report.hpp"

#include <sstream>
#include <utility>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/csv.hpp"

namespace synthaudit {
namespace {

constexpr std::pair<Risk, const char*> kRiskNames[] = {
    {Risk::kSinglingOut, "singling_out"},
    {Risk::kLinkability, "linkability"},
    {Risk::kInference, "inference"},
    {Risk::kOverall, "overall"},
};

std::string MarkdownCell(std::string text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string RiskName(Risk risk) {
  for (const auto& [r, name] : kRiskNames) {
    if (r == risk) return name;
  }
  return "unknown";
}

Risk RiskFromName(std::string_view name) {
  for (const auto& [r, n] : kRiskNames) {
    if (name == n) return r;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown risk '" + std::string(name) + "'");
}

RiskVerdict MakeVerdict(Risk risk, AttackResult attack, double threshold) {
  RiskVerdict v;
  v.risk = risk;
  v.score = AttackScore(attack);
  v.attack = std::move(attack);
  v.threshold = threshold;
  v.flagged = v.score > threshold;
  if (risk == Risk::kSinglingOut) v.caveat = kSinglingOutCaveat;
  return v;
}

bool RiskReport::flagged() const {
  for (const RiskVerdict& v : verdicts) {
    if (v.flagged) return true;
  }
  return false;
}

std::vector<Risk> RiskReport::flagged_risks() const {
  std::vector<Risk> out;
  for (const RiskVerdict& v : verdicts) {
    if (v.flagged) out.push_back(v.risk);
  }
  return out;
}

nlohmann::json RiskReport::ToJson() const {
  nlohmann::json verdict_list = nlohmann::json::array();
  for (const RiskVerdict& v : verdicts) {
    verdict_list.push_back({
        {"risk", RiskName(v.risk)},
        {"attack", AttackResultToJson(v.attack)},
        {"score", v.score},
        {"threshold", v.threshold},
        {"flagged", v.flagged},
        {"caveat", v.caveat ? nlohmann::json(*v.caveat) : nlohmann::json()},
    });
  }
  nlohmann::json summary = {{"status", flagged() ? "flagged" : "all_clear"}};
  nlohmann::json risks = nlohmann::json::array();
  for (Risk r : flagged_risks()) risks.push_back(RiskName(r));
  summary["risks"] = risks;
  return {
      {"report_version", report_version},
      {"config", config},
      {"sbpm", sbpm.ToJson()},
      {"verdicts", verdict_list},
      {"accountant", accountant},
      {"synth_rows", synth_rows},
      {"summary", summary},
  };
}

RiskReport RiskReport::FromJson(const nlohmann::json& j) {
  try {
    RiskReport r;
    r.report_version = j.at("report_version").get<int>();
    if (r.report_version != kVersion) {
      Fail(ErrorCode::kInvalidArgument,
           "unsupported report_version " + std::to_string(r.report_version));
    }
    r.config = j.at("config");
    r.sbpm = SbpmReport::FromJson(j.at("sbpm"));
    for (const auto& jv : j.at("verdicts")) {
      RiskVerdict v;
      v.risk = RiskFromName(jv.at("risk").get<std::string>());
      v.attack = AttackResultFromJson(jv.at("attack"));
      v.score = jv.at("score").get<double>();
      v.threshold = jv.at("threshold").get<double>();
      v.flagged = jv.at("flagged").get<bool>();
      if (!jv.at("caveat").is_null()) {
        v.caveat = jv.at("caveat").get<std::string>();
      }
      r.verdicts.push_back(std::move(v));
    }
    r.accountant = j.at("accountant");
    r.synth_rows = j.at("synth_rows").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("malformed report: ") +
                                          e.what());
  }
}

std::string RenderReport(const RiskReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report.ToJson().dump(2) + "\n";

  std::ostringstream md;
  md << "# Synthetic data privacy audit\n\n";
  md << "Summary: "
     << (report.flagged() ? "**flagged**" : "all clear") << "\n\n";
  md << "## Similarity-based metrics\n\n";
  md << "| metric | synth | test | pass |\n|---|---|---|---|\n";
  const SbpmReport& s = report.sbpm;
  md << "| IMS | " << FormatNumber(s.ims_synth) << " | "
     << FormatNumber(s.ims_test) << " | " << (s.ims_pass ? "yes" : "no")
     << " |\n";
  md << "| DCR p5 | " << FormatNumber(s.dcr_p5_synth) << " | "
     << FormatNumber(s.dcr_p5_test) << " | " << (s.dcr_pass ? "yes" : "no")
     << " |\n";
  md << "| NNDR p5 | " << FormatNumber(s.nndr_p5_synth) << " | "
     << FormatNumber(s.nndr_p5_test) << " | " << (s.nndr_pass ? "yes" : "no")
     << " |\n\n";
  md << "all_pass: " << (s.all_pass ? "true" : "false") << "\n\n";
  md << "## Risk verdicts\n\n";
  md << "| risk | attack | score | threshold | flagged | caveat |\n";
  md << "|---|---|---|---|---|---|\n";
  for (const RiskVerdict& v : report.verdicts) {
    md << "| " << RiskName(v.risk) << " | " << AttackKindName(v.attack)
       << " | " << FormatNumber(v.score) << " | " << FormatNumber(v.threshold)
       << " | " << (v.flagged ? "yes" : "no") << " | "
       << MarkdownCell(v.caveat.value_or("")) << " |\n";
  }
  return md.str();
}

}  // namespace synthaudit
