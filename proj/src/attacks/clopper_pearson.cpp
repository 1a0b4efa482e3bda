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

#include "synthaudit/attacks/clopper_pearson.hpp"

#include <algorithm>
#include <cmath>

#include "synthaudit/common/error.hpp"

namespace synthaudit {

double BinomialCdf(std::size_t k, std::size_t n, double p) {
  if (k >= n) return 1.0;
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double nn = static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i <= k; ++i) {
    const double ii = static_cast<double>(i);
    const double log_pmf = std::lgamma(nn + 1.0) - std::lgamma(ii + 1.0) -
                           std::lgamma(nn - ii + 1.0) + ii * log_p +
                           (nn - ii) * log_q;
    sum += std::exp(log_pmf);
  }
  return std::min(sum, 1.0);
}

double ClopperPearsonUpper(std::size_t successes, std::size_t trials,
                           double level) {
  if (!(level > 0.0 && level < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "confidence level must lie in (0, 1)");
  }
  if (successes > trials) {
    Fail(ErrorCode::kInvalidArgument, "successes exceed trials");
  }
  if (trials == 0 || successes == trials) return 1.0;
  const double target = 1.0 - level;
  // The CDF is decreasing in p; the root lies above the point estimate.
  double lo = static_cast<double>(successes) / static_cast<double>(trials);
  double hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (BinomialCdf(successes, trials, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double EpsilonLowerBound(double alpha_upper, double beta_upper) {
  double eps = 0.0;
  if (beta_upper > 0.0 && alpha_upper < 1.0) {
    eps = std::max(eps, std::log((1.0 - alpha_upper) / beta_upper));
  }
  if (alpha_upper > 0.0 && beta_upper < 1.0) {
    eps = std::max(eps, std::log((1.0 - beta_upper) / alpha_upper));
  }
  return eps;
}

}  // namespace synthaudit
