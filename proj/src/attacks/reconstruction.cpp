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

#include "synthaudit/attacks/reconstruction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "synthaudit/common/error.hpp"
#include "synthaudit/common/parallel.hpp"
#include "synthaudit/generators/marginals.hpp"

namespace synthaudit {

CandidateDomain CandidateDomain::FromSchema(
    std::shared_ptr<const TabularSchema> schema, std::size_t bins) {
  if (bins == 0) Fail(ErrorCode::kInvalidArgument, "bins must be positive");
  std::vector<std::vector<Value>> values;
  for (const Column& col : schema->columns()) {
    std::vector<Value> vals;
    if (col.is_numeric()) {
      const auto edges = BinEdges(col.numeric(), bins);
      for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
        vals.emplace_back(0.5 * (edges[b] + edges[b + 1]));
      }
    } else {
      const auto levels = col.categorical().levels.size();
      for (std::size_t l = 0; l < levels; ++l) {
        vals.emplace_back(CategoryIndex{static_cast<std::uint32_t>(l)});
      }
    }
    values.push_back(std::move(vals));
  }
  return Product(std::move(schema), std::move(values));
}

CandidateDomain CandidateDomain::Product(
    std::shared_ptr<const TabularSchema> schema,
    std::vector<std::vector<Value>> values) {
  if (values.size() != schema->size()) {
    Fail(ErrorCode::kSchemaMismatch, "one value list per column required");
  }
  CandidateDomain d;
  d.schema_ = std::move(schema);
  d.size_ = values.empty() ? 0 : 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t c = 0; c < values.size(); ++c) {
    for (const Value& v : values[c]) {
      Record probe(values.size());
      for (std::size_t o = 0; o < values.size(); ++o) {
        probe[o] = values[o].empty() ? v : values[o].front();
      }
      probe[c] = v;
      if (!values[c].empty()) d.schema_->ValidateRecord(probe);
    }
    const std::uint64_t k = values[c].size();
    if (k == 0) {
      d.size_ = 0;
    } else if (d.size_ > kMax / k) {
      d.size_ = kMax;
    } else if (d.size_ != kMax) {
      d.size_ *= k;
    }
  }
  d.values_ = std::move(values);
  return d;
}

CandidateDomain CandidateDomain::Explicit(const Dataset& records) {
  CandidateDomain d;
  d.schema_ = records.shared_schema();
  d.explicit_ = records.rows();
  d.is_explicit_ = true;
  d.size_ = d.explicit_.size();
  return d;
}

Record CandidateDomain::At(std::uint64_t i) const {
  if (i >= size_) {
    Fail(ErrorCode::kInvalidArgument,
         "candidate index " + std::to_string(i) + " out of range");
  }
  if (is_explicit_) return explicit_[i];
  Record r(values_.size());
  for (std::size_t c = values_.size(); c-- > 0;) {
    const std::uint64_t k = values_[c].size();
    r[c] = values_[c][i % k];
    i /= k;
  }
  return r;
}

CandidateDomain CandidateDomain::Truncate(std::uint64_t limit) const {
  if (limit >= size_) return *this;
  CandidateDomain d;
  d.schema_ = schema_;
  d.is_explicit_ = true;
  d.explicit_.reserve(limit);
  for (std::uint64_t i = 0; i < limit; ++i) d.explicit_.push_back(At(i));
  d.size_ = limit;
  return d;
}

ReconOutcome ReconstructViaMetricsOracle(MetricsOracle& oracle,
                                         const CandidateDomain& domain,
                                         const SeededRng& rng) {
  if (domain.size() > kMaxReconDomain) {
    Fail(ErrorCode::kDomainTooLarge,
         "candidate domain has " + std::to_string(domain.size()) +
             " records; the limit is " + std::to_string(kMaxReconDomain));
  }
  if (!(domain.schema() == oracle.schema())) {
    Fail(ErrorCode::kSchemaMismatch, "domain schema differs from oracle's");
  }
  const std::size_t n = static_cast<std::size_t>(domain.size());

  // Distinct candidates only; an explicit domain may repeat records.
  std::vector<Record> candidates;
  candidates.reserve(n);
  {
    std::unordered_set<Record, RecordHash, RecordEq> seen;
    for (std::size_t i = 0; i < n; ++i) {
      Record r = domain.At(i);
      if (seen.insert(r).second) candidates.push_back(std::move(r));
    }
  }

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SeededRng shuffle = rng.Substream("order");
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[shuffle.UniformInt(i)]);
  }

  std::vector<char> member(candidates.size(), 0);
  const auto schema = domain.shared_schema();
  ParallelFor(order.size(), [&](std::size_t q) {
    const std::size_t c = order[q];
    const Dataset one(schema, {candidates[c]});
    member[c] = oracle.Evaluate(one).ims_synth > 0.0;
  });

  ReconOutcome out;
  out.queries = candidates.size();
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (member[c]) out.declared.push_back(candidates[c]);
  }
  return out;
}

ReconResult ScoreReconstruction(const ReconOutcome& outcome,
                                const Dataset& hidden_train,
                                std::uint64_t domain_size) {
  std::unordered_set<Record, RecordHash, RecordEq> train_set(
      hidden_train.rows().begin(), hidden_train.rows().end());
  std::unordered_set<Record, RecordHash, RecordEq> declared(
      outcome.declared.begin(), outcome.declared.end());

  ReconResult r;
  r.oracle_queries = outcome.queries;
  r.domain_size = static_cast<std::size_t>(domain_size);
  r.declared = declared.size();
  for (const Record& d : declared) {
    (train_set.count(d) ? r.true_positives : r.false_positives)++;
  }
  std::size_t recovered = 0;
  for (const Record& row : hidden_train.rows()) {
    if (declared.count(row)) ++recovered;
  }
  r.match_rate = hidden_train.empty()
                     ? 0.0
                     : static_cast<double>(recovered) /
                           static_cast<double>(hidden_train.n());
  return r;
}

double ReleaseMatchRate(const Dataset& synth, const Dataset& population) {
  if (population.empty()) return 0.0;
  std::unordered_set<Record, RecordHash, RecordEq> released(
      synth.rows().begin(), synth.rows().end());
  std::size_t hits = 0;
  for (const Record& row : population.rows()) {
    if (released.count(row)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(population.n());
}

}  // namespace synthaudit
