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

#ifndef SYNTHAUDIT_DATA_NEIGHBORS_HPP_
#define SYNTHAUDIT_DATA_NEIGHBORS_HPP_

#include <cstddef>
#include <vector>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/distance.hpp"

namespace synthaudit {

struct Neighbor {
  std::size_t index = 0;
  double distance = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Strict total order used everywhere neighbors are ranked: smaller distance
// first, then smaller corpus index.
inline bool NeighborLess(const Neighbor& a, const Neighbor& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  return a.index < b.index;
}

// Exhaustive single-threaded scan. This is the reference implementation that
// the OpenMP kernels below are tested against.
std::vector<Neighbor> NearestNeighborsSerial(const Record& query,
                                             const Dataset& corpus,
                                             std::size_t k,
                                             const DistanceConfig& cfg);

// OpenMP kernel: per-thread bounded top-k over a static partition of the
// corpus, merged under NeighborLess. Output is identical to the serial scan,
// including tie order.
std::vector<Neighbor> NearestNeighbors(const Record& query,
                                       const Dataset& corpus, std::size_t k,
                                       const DistanceConfig& cfg);

// k nearest corpus rows for every query row, parallel over queries.
std::vector<std::vector<Neighbor>> BatchNearestNeighborsSerial(
    const Dataset& queries, const Dataset& corpus, std::size_t k,
    const DistanceConfig& cfg);
std::vector<std::vector<Neighbor>> BatchNearestNeighbors(
    const Dataset& queries, const Dataset& corpus, std::size_t k,
    const DistanceConfig& cfg);

// Number of corpus rows within `radius` (inclusive) of query.
std::size_t CountWithinRadius(const Record& query, const Dataset& corpus,
                              double radius, const DistanceConfig& cfg);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_NEIGHBORS_HPP_
