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

#ifndef SYNTHAUDIT_GENERATORS_LAPLACE_HPP_
#define SYNTHAUDIT_GENERATORS_LAPLACE_HPP_

#include "synthaudit/data/rng.hpp"

namespace synthaudit {

// Inverse CDF of Laplace(0, scale) at u in (0, 1):
//   -scale * sgn(u - 1/2) * ln(1 - 2 |u - 1/2|)
double LaplaceInverseCdf(double u, double scale);

// One Laplace(0, scale) draw from a single open-interval uniform. Throws
// kNonPositiveScale unless scale > 0.
double LaplaceSample(double scale, SeededRng& rng);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_GENERATORS_LAPLACE_HPP_
