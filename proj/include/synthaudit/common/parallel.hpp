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

#ifndef SYNTHAUDIT_COMMON_PARALLEL_HPP_
#define SYNTHAUDIT_COMMON_PARALLEL_HPP_

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

namespace synthaudit {

// Runs body(i) for i in [0, n) across OpenMP threads. Exceptions cannot cross
// the parallel region, so each iteration's exception is captured and the one
// from the lowest index is rethrown afterwards; the reported failure is
// therefore independent of scheduling.
template <typename Body>
void ParallelFor(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> failures(n);
  bool any_failure = false;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(|| : any_failure)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
      any_failure = true;
    }
  }
  if (!any_failure) return;
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

}  // namespace synthaudit

#endif  // SYNTHAUDIT_COMMON_PARALLEL_HPP_
