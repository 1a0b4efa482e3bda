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

#include "synthaudit/generators/laplace.hpp"

#include <cmath>

#include "synthaudit/common/error.hpp"

namespace synthaudit {

double LaplaceInverseCdf(double u, double scale) {
  const double centered = u - 0.5;
  if (centered == 0.0) return 0.0;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(centered));
  return centered > 0.0 ? magnitude : -magnitude;
}

double LaplaceSample(double scale, SeededRng& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    Fail(ErrorCode::kNonPositiveScale, "Laplace scale must be positive");
  }
  return LaplaceInverseCdf(rng.UniformOpen01(), scale);
}

}  // namespace synthaudit
