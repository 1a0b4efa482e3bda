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

#include "synthaudit/data/neighbors.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "synthaudit/common/error.hpp"
#include "synthaudit/common/parallel.hpp"

namespace synthaudit {
namespace {

void CheckScan(const Record& query, const Dataset& corpus, std::size_t k,
               const DistanceConfig& cfg) {
  if (corpus.empty()) Fail(ErrorCode::kEmptyCorpus, "corpus has no rows");
  if (k == 0) Fail(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (k > corpus.n()) {
    Fail(ErrorCode::kKTooLarge, "k=" + std::to_string(k) +
                                    " exceeds corpus size " +
                                    std::to_string(corpus.n()));
  }
  cfg.CheckCompatible(corpus.schema());
  cfg.CheckRecord(query);
}

// Bounded max-heap keeping the k smallest neighbors seen so far.
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) { heap_.reserve(k + 1); }

  void Offer(const Neighbor& nb) {
    if (heap_.size() < k_) {
      heap_.push_back(nb);
      std::push_heap(heap_.begin(), heap_.end(), NeighborLess);
    } else if (NeighborLess(nb, heap_.front())) {
      std::pop_heap(heap_.begin(), heap_.end(), NeighborLess);
      heap_.back() = nb;
      std::push_heap(heap_.begin(), heap_.end(), NeighborLess);
    }
  }

  std::vector<Neighbor>& items() { return heap_; }

 private:
  std::size_t k_;
  std::vector<Neighbor> heap_;
};

std::vector<Neighbor> ScanSerial(const Record& query, const Dataset& corpus,
                                 std::size_t k, const DistanceConfig& cfg) {
  std::vector<Neighbor> all(corpus.n());
  for (std::size_t i = 0; i < corpus.n(); ++i) {
    all[i] = {i, cfg.DistanceUnchecked(query, corpus.rows()[i])};
  }
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k),
                    all.end(), NeighborLess);
  all.resize(k);
  return all;
}

}  // namespace

std::vector<Neighbor> NearestNeighborsSerial(const Record& query,
                                             const Dataset& corpus,
                                             std::size_t k,
                                             const DistanceConfig& cfg) {
  CheckScan(query, corpus, k, cfg);
  return ScanSerial(query, corpus, k, cfg);
}

std::vector<Neighbor> NearestNeighbors(const Record& query,
                                       const Dataset& corpus, std::size_t k,
                                       const DistanceConfig& cfg) {
  CheckScan(query, corpus, k, cfg);
  const auto& rows = corpus.rows();
  const auto n = static_cast<std::int64_t>(rows.size());
  std::vector<Neighbor> merged;
#pragma omp parallel
  {
    TopK local(k);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      local.Offer({idx, cfg.DistanceUnchecked(query, rows[idx])});
    }
#pragma omp critical(synthaudit_topk_merge)
    merged.insert(merged.end(), local.items().begin(), local.items().end());
  }
  std::sort(merged.begin(), merged.end(), NeighborLess);
  merged.resize(k);
  return merged;
}

std::vector<std::vector<Neighbor>> BatchNearestNeighborsSerial(
    const Dataset& queries, const Dataset& corpus, std::size_t k,
    const DistanceConfig& cfg) {
  std::vector<std::vector<Neighbor>> out;
  out.reserve(queries.n());
  for (const Record& q : queries.rows()) {
    out.push_back(NearestNeighborsSerial(q, corpus, k, cfg));
  }
  return out;
}

std::vector<std::vector<Neighbor>> BatchNearestNeighbors(
    const Dataset& queries, const Dataset& corpus, std::size_t k,
    const DistanceConfig& cfg) {
  std::vector<std::vector<Neighbor>> out(queries.n());
  for (const Record& q : queries.rows()) CheckScan(q, corpus, k, cfg);
  if (queries.empty()) return out;
  ParallelFor(queries.n(), [&](std::size_t i) {
    out[i] = ScanSerial(queries.rows()[i], corpus, k, cfg);
  });
  return out;
}

std::size_t CountWithinRadius(const Record& query, const Dataset& corpus,
                              double radius, const DistanceConfig& cfg) {
  cfg.CheckRecord(query);
  if (corpus.empty()) return 0;
  cfg.CheckCompatible(corpus.schema());
  std::size_t count = 0;
  for (const Record& r : corpus.rows()) {
    if (cfg.DistanceUnchecked(query, r) <= radius) ++count;
  }
  return count;
}

}  // namespace synthaudit
