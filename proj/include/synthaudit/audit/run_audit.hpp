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

#ifndef SYNTHAUDIT_AUDIT_RUN_AUDIT_HPP_
#define SYNTHAUDIT_AUDIT_RUN_AUDIT_HPP_

#include "synthaudit/attacks/trainer.hpp"
#include "synthaudit/audit/config.hpp"
#include "synthaudit/audit/report.hpp"
#include "synthaudit/generators/budget.hpp"

namespace synthaudit {

// The attack-side replica of a configured pipeline: maps a training set to a
// synthetic dataset of fixed size.
Trainer MakePipelineTrainer(const AuditConfig& cfg, const Dataset& test,
                            std::size_t synth_rows);

// Produces the release that the audit evaluates, charging `accountant` for
// DP pipelines.
Dataset GenerateRelease(const AuditConfig& cfg, const Dataset& train,
                        const Dataset& test, PrivacyAccountant& accountant);

// Generates the release, scores it with the similarity metrics and attacks it
// four ways:
//   singling out   differencing probe on the train row farthest from the
//                  centroid, against the rest of train
//   linkability    shadow-model membership inference on the same row, with
//                  the other train and test rows as the reference pool
//   inference      k-NN attribute inference of the hidden column for every
//                  train row
//   overall        reconstruction through the metrics oracle over the
//                  discretized schema domain, combined with the share of
//                  train and test rows the release republishes verbatim
// Distances are normalized by ranges fitted on train and test. Any failure
// aborts the whole audit.
RiskReport RunAudit(const Dataset& train, const Dataset& test,
                    const AuditConfig& cfg);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_AUDIT_RUN_AUDIT_HPP_
