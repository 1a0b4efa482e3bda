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

#include "synthaudit/generators/budget.hpp"

#include <cmath>

#include "synthaudit/common/error.hpp"

namespace synthaudit {

void PrivacyBudget::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    Fail(ErrorCode::kInvalidArgument, "epsilon must be positive and finite");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "delta must lie in [0, 1)");
  }
}

nlohmann::json PrivacyBudget::ToJson() const {
  return {{"epsilon", epsilon}, {"delta", delta}};
}

PrivacyAccountant::PrivacyAccountant(const PrivacyAccountant& other) {
  std::lock_guard lock(other.mu_);
  ledger_ = other.ledger_;
}

PrivacyAccountant& PrivacyAccountant::operator=(
    const PrivacyAccountant& other) {
  if (this == &other) return *this;
  std::vector<LedgerEntry> copy = other.ledger();
  std::lock_guard lock(mu_);
  ledger_ = std::move(copy);
  return *this;
}

void PrivacyAccountant::Charge(std::string label, const PrivacyBudget& budget) {
  budget.Validate();
  std::lock_guard lock(mu_);
  ledger_.push_back({std::move(label), budget});
}

std::vector<LedgerEntry> PrivacyAccountant::ledger() const {
  std::lock_guard lock(mu_);
  return ledger_;
}

BudgetTotal PrivacyAccountant::total() const {
  std::lock_guard lock(mu_);
  BudgetTotal t;
  for (const auto& e : ledger_) {
    t.epsilon += e.charge.epsilon;
    t.delta += e.charge.delta;
  }
  return t;
}

nlohmann::json PrivacyAccountant::ToJson() const {
  const auto entries = ledger();
  const BudgetTotal t = total();
  nlohmann::json j = {{"ledger", nlohmann::json::array()},
                      {"total", {{"epsilon", t.epsilon}, {"delta", t.delta}}}};
  for (const auto& e : entries) {
    j["ledger"].push_back({{"label", e.label},
                           {"epsilon", e.charge.epsilon},
                           {"delta", e.charge.delta}});
  }
  return j;
}

}  // namespace synthaudit
