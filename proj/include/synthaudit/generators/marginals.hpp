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

#ifndef SYNTHAUDIT_GENERATORS_MARGINALS_HPP_
#define SYNTHAUDIT_GENERATORS_MARGINALS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/rng.hpp"
#include "synthaudit/generators/budget.hpp"

namespace synthaudit {

// Categorical columns: one probability per level, bin_edges empty.
// Numeric columns: one probability per equal-width bin over the schema
// [min, max]; bin_edges holds bins + 1 ascending edges.
struct ColumnDistribution {
  std::vector<double> probabilities;
  std::vector<double> bin_edges;

  friend bool operator==(const ColumnDistribution&,
                         const ColumnDistribution&) = default;
};

struct DpMeta {
  PrivacyBudget budget;
  double noise_scale = 0.0;

  friend bool operator==(const DpMeta&, const DpMeta&) = default;
};

// Independent per-column marginals. Trained models are immutable and may be
// sampled concurrently with independent rng streams.
struct GeneratorModel {
  TabularSchema schema;
  std::vector<ColumnDistribution> columns;
  std::optional<DpMeta> dp_meta;

  // Throws kInvalidModel if a probability vector is negative or does not sum
  // to 1 within 1e-9, or if bin edges do not span the schema range.
  void Validate() const;

  nlohmann::json ToJson() const;
  static GeneratorModel FromJson(const nlohmann::json& j);
  void Save(const std::filesystem::path& path) const;
  static GeneratorModel Load(const std::filesystem::path& path);

  friend bool operator==(const GeneratorModel&,
                         const GeneratorModel&) = default;
};

// Equal-width bin of v over [kind.min, kind.max]; values outside the range
// fall into the first or last bin, and a zero-width range maps to bin 0.
std::size_t BinIndex(double v, const NumericKind& kind, std::size_t bins);
std::vector<double> BinEdges(const NumericKind& kind, std::size_t bins);

// Raw per-column histogram counts (levels or bins).
std::vector<double> ColumnCounts(const Dataset& data, std::size_t column,
                                 std::size_t bins);

// ColumnCounts plus independent Laplace(scale) noise per cell, before any
// clamping. Exposed so the mechanism itself can be checked statistically.
std::vector<double> NoisyColumnCounts(const Dataset& data, std::size_t column,
                                      std::size_t bins, double scale,
                                      SeededRng& rng);

// Non-private empirical marginals. Requires train.n >= 1 and bins >= 1.
GeneratorModel FitMarginals(const Dataset& train, std::size_t bins);

// Laplace-noised marginals. Under add/remove-one neighbors every column
// histogram has L1 sensitivity 1, so each column receives epsilon / C with
// C columns, i.e. noise scale C / epsilon. Negative noisy counts are clamped
// to 0 and the rest renormalized (an all-zero column becomes uniform).
// `accountant` is charged exactly once with `budget`. Only delta == 0 is
// supported.
GeneratorModel FitMarginalsDp(const Dataset& train, std::size_t bins,
                              const PrivacyBudget& budget,
                              PrivacyAccountant& accountant, SeededRng& rng);

// n i.i.d. rows: categorical by level probability, numeric by bin choice
// followed by a uniform draw inside the bin. Pure post-processing.
Dataset SampleModel(const GeneratorModel& model, std::size_t n,
                    SeededRng& rng);

// Total-variation distance between two models' column marginals, maximized
// over columns. Models must share a schema and bin layout.
double MaxColumnTotalVariation(const GeneratorModel& a,
                               const GeneratorModel& b);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_GENERATORS_MARGINALS_HPP_
