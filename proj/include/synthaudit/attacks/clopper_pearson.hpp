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

#ifndef SYNTHAUDIT_ATTACKS_CLOPPER_PEARSON_HPP_
#define SYNTHAUDIT_ATTACKS_CLOPPER_PEARSON_HPP_

#include <cstddef>

namespace synthaudit {

// P[Binomial(n, p) <= k].
double BinomialCdf(std::size_t k, std::size_t n, double p);

// One-sided exact (Clopper-Pearson) upper confidence bound on a binomial
// proportion after observing `successes` out of `trials`: the p solving
// P[Binomial(trials, p) <= successes] = 1 - level. Returns 1 when
// successes == trials or trials == 0.
double ClopperPearsonUpper(std::size_t successes, std::size_t trials,
                           double level);

// Lower bound on epsilon implied by upper bounds on a distinguisher's
// false-positive rate (alpha) and false-negative rate (beta):
//   max(0, ln((1 - alpha) / beta), ln((1 - beta) / alpha))
// Any pure epsilon-DP mechanism satisfies alpha + e^eps * beta >= 1 and
// symmetrically, so when the true rates are below the bounds the result
// cannot exceed the mechanism's epsilon.
double EpsilonLowerBound(double alpha_upper, double beta_upper);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_CLOPPER_PEARSON_HPP_
