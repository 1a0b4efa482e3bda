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

#ifndef SYNTHAUDIT_AUDIT_REPORT_HPP_
#define SYNTHAUDIT_AUDIT_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "synthaudit/attacks/results.hpp"
#include "synthaudit/sbpm/metrics.hpp"

namespace synthaudit {

enum class Risk { kSinglingOut, kLinkability, kInference, kOverall };

std::string RiskName(Risk risk);
Risk RiskFromName(std::string_view name);

// Attached to every singling-out verdict.
inline constexpr const char kSinglingOutCaveat[] =
    "mitigating differencing attacks does not fully eliminate singling out "
    "risk";

struct RiskVerdict {
  Risk risk = Risk::kOverall;
  AttackResult attack;
  double score = 0.0;
  double threshold = 0.0;
  bool flagged = false;
  std::optional<std::string> caveat;

  friend bool operator==(const RiskVerdict&, const RiskVerdict&) = default;
};

struct RiskReport {
  static constexpr int kVersion = 1;

  int report_version = kVersion;
  nlohmann::json config;
  SbpmReport sbpm;
  std::vector<RiskVerdict> verdicts;
  nlohmann::json accountant;
  std::size_t synth_rows = 0;

  bool flagged() const;
  // Risks of the flagged verdicts, in verdict order.
  std::vector<Risk> flagged_risks() const;

  nlohmann::json ToJson() const;
  static RiskReport FromJson(const nlohmann::json& j);

  friend bool operator==(const RiskReport&, const RiskReport&) = default;
};

// Builds a verdict with flagged = score > threshold.
RiskVerdict MakeVerdict(Risk risk, AttackResult attack, double threshold);

enum class ReportFormat { kJson, kMarkdown };

// JSON is the canonical form: sorted keys, two-space indent, trailing newline.
std::string RenderReport(const RiskReport& report, ReportFormat format);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_AUDIT_REPORT_HPP_
