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

#ifndef SYNTHAUDIT_ATTACKS_RECONSTRUCTION_HPP_
#define SYNTHAUDIT_ATTACKS_RECONSTRUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "synthaudit/attacks/results.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/rng.hpp"
#include "synthaudit/sbpm/oracle.hpp"

namespace synthaudit {

inline constexpr std::uint64_t kMaxReconDomain = 1'000'000;

// A finite set of candidate records, either an explicit list or the product of
// per-column value lists enumerated in mixed radix (last column fastest).
class CandidateDomain {
 public:
  // Categorical columns contribute every level, numeric columns the midpoints
  // of `bins` equal-width bins over the schema range.
  static CandidateDomain FromSchema(std::shared_ptr<const TabularSchema> schema,
                                    std::size_t bins);
  static CandidateDomain Product(std::shared_ptr<const TabularSchema> schema,
                                 std::vector<std::vector<Value>> values);
  static CandidateDomain Explicit(const Dataset& records);

  // Saturates at UINT64_MAX for astronomically large products.
  std::uint64_t size() const { return size_; }
  Record At(std::uint64_t i) const;
  // The first `limit` candidates in enumeration order.
  CandidateDomain Truncate(std::uint64_t limit) const;
  const TabularSchema& schema() const { return *schema_; }
  const std::shared_ptr<const TabularSchema>& shared_schema() const {
    return schema_;
  }

 private:
  CandidateDomain() = default;

  std::shared_ptr<const TabularSchema> schema_;
  std::vector<std::vector<Value>> values_;
  std::vector<Record> explicit_;
  bool is_explicit_ = false;
  std::uint64_t size_ = 0;
};

struct ReconOutcome {
  // Distinct candidates with ims_synth > 0, in enumeration order.
  std::vector<Record> declared;
  std::size_t queries = 0;
};

// Submits every candidate, alone, to the oracle and keeps those the oracle
// reports as identical matches of a train row. Queries run concurrently; the
// rng only decides the submission order. Throws kDomainTooLarge above
// kMaxReconDomain candidates.
ReconOutcome ReconstructViaMetricsOracle(MetricsOracle& oracle,
                                         const CandidateDomain& domain,
                                         const SeededRng& rng);

// Grades an outcome against the hidden training set.
ReconResult ScoreReconstruction(const ReconOutcome& outcome,
                                const Dataset& hidden_train,
                                std::uint64_t domain_size);

// Share of population rows that occur verbatim in synth. Returns 0 for an
// empty population.
double ReleaseMatchRate(const Dataset& synth, const Dataset& population);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_RECONSTRUCTION_HPP_
