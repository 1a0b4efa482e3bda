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

#ifndef SYNTHAUDIT_GENERATORS_BUDGET_HPP_
#define SYNTHAUDIT_GENERATORS_BUDGET_HPP_

#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

namespace synthaudit {

// (epsilon, delta) with epsilon > 0 and delta in [0, 1).
struct PrivacyBudget {
  double epsilon = 1.0;
  double delta = 0.0;

  // Throws kInvalidArgument.
  void Validate() const;
  nlohmann::json ToJson() const;

  friend bool operator==(const PrivacyBudget&, const PrivacyBudget&) = default;
};

struct LedgerEntry {
  std::string label;
  PrivacyBudget charge;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct BudgetTotal {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Basic sequential composition: the total is the sum of every charge. Charges
// are serialized, so concurrent Charge calls behave as if applied in some
// total order. Sampling from a trained model never touches the accountant.
class PrivacyAccountant {
 public:
  PrivacyAccountant() = default;
  PrivacyAccountant(const PrivacyAccountant& other);
  PrivacyAccountant& operator=(const PrivacyAccountant& other);

  void Charge(std::string label, const PrivacyBudget& budget);

  std::vector<LedgerEntry> ledger() const;
  BudgetTotal total() const;
  nlohmann::json ToJson() const;

 private:
  mutable std::mutex mu_;
  std::vector<LedgerEntry> ledger_;
};

}  // namespace synthaudit

#endif  // SYNTHAUDIT_GENERATORS_BUDGET_HPP_
