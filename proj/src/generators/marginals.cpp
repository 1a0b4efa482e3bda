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

#include "synthaudit/generators/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/csv.hpp"
#include "synthaudit/generators/laplace.hpp"

namespace synthaudit {
namespace {

std::size_t CellCount(const Column& column, std::size_t bins) {
  return column.is_numeric() ? bins : column.categorical().levels.size();
}

std::vector<double> Normalize(std::vector<double> counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (!(total > 0.0)) {
    std::fill(counts.begin(), counts.end(), 1.0 / counts.size());
    return counts;
  }
  for (double& c : counts) c /= total;
  return counts;
}

std::size_t DrawIndex(const std::vector<double>& probabilities,
                      SeededRng& rng) {
  const double u = rng.Uniform01();
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    acc += probabilities[i];
    last_positive = i;
    if (u < acc) return i;
  }
  // Rounding left u above the accumulated mass.
  return last_positive;
}

void CheckBins(std::size_t bins) {
  if (bins == 0) Fail(ErrorCode::kInvalidArgument, "bins must be at least 1");
}

GeneratorModel FromCounts(const Dataset& data, std::size_t bins,
                          std::vector<std::vector<double>> counts) {
  GeneratorModel model;
  model.schema = data.schema();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    ColumnDistribution dist;
    dist.probabilities = Normalize(std::move(counts[c]));
    const Column& column = data.schema().column(c);
    if (column.is_numeric()) dist.bin_edges = BinEdges(column.numeric(), bins);
    model.columns.push_back(std::move(dist));
  }
  return model;
}

}  // namespace

std::size_t BinIndex(double v, const NumericKind& kind, std::size_t bins) {
  const double width = kind.max - kind.min;
  if (!(width > 0.0)) return 0;
  const double pos = (v - kind.min) / width * static_cast<double>(bins);
  if (!(pos > 0.0)) return 0;
  const auto idx = static_cast<std::size_t>(std::floor(pos));
  return std::min(idx, bins - 1);
}

std::vector<double> BinEdges(const NumericKind& kind, std::size_t bins) {
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    edges[i] = kind.min + (kind.max - kind.min) * static_cast<double>(i) /
                              static_cast<double>(bins);
  }
  edges.back() = kind.max;
  return edges;
}

std::vector<double> ColumnCounts(const Dataset& data, std::size_t column,
                                 std::size_t bins) {
  CheckBins(bins);
  const Column& col = data.schema().column(column);
  std::vector<double> counts(CellCount(col, bins), 0.0);
  for (const Record& r : data.rows()) {
    if (col.is_numeric()) {
      counts[BinIndex(AsNumeric(r[column]), col.numeric(), bins)] += 1.0;
    } else {
      counts[AsCategory(r[column])] += 1.0;
    }
  }
  return counts;
}

std::vector<double> NoisyColumnCounts(const Dataset& data, std::size_t column,
                                      std::size_t bins, double scale,
                                      SeededRng& rng) {
  std::vector<double> counts = ColumnCounts(data, column, bins);
  for (double& c : counts) c += LaplaceSample(scale, rng);
  return counts;
}

GeneratorModel FitMarginals(const Dataset& train, std::size_t bins) {
  RequireNonEmpty(train, "fit_marginals");
  CheckBins(bins);
  std::vector<std::vector<double>> counts;
  for (std::size_t c = 0; c < train.schema().size(); ++c) {
    counts.push_back(ColumnCounts(train, c, bins));
  }
  return FromCounts(train, bins, std::move(counts));
}

GeneratorModel FitMarginalsDp(const Dataset& train, std::size_t bins,
                              const PrivacyBudget& budget,
                              PrivacyAccountant& accountant, SeededRng& rng) {
  if (!(budget.epsilon > 0.0)) {
    Fail(ErrorCode::kZeroEpsilon, "epsilon must be positive");
  }
  if (budget.delta != 0.0) {
    Fail(ErrorCode::kUnsupportedDelta,
         "only pure (delta = 0) Laplace fitting is supported");
  }
  budget.Validate();
  CheckBins(bins);
  const std::size_t n_columns = train.schema().size();
  if (n_columns == 0) Fail(ErrorCode::kInvalidArgument, "schema has no columns");
  const double scale = static_cast<double>(n_columns) / budget.epsilon;

  std::vector<std::vector<double>> counts;
  for (std::size_t c = 0; c < n_columns; ++c) {
    SeededRng column_rng = rng.Substream("column", c);
    auto noisy = NoisyColumnCounts(train, c, bins, scale, column_rng);
    for (double& v : noisy) v = std::max(v, 0.0);
    counts.push_back(std::move(noisy));
  }
  GeneratorModel model = FromCounts(train, bins, std::move(counts));
  model.dp_meta = DpMeta{budget, scale};
  accountant.Charge("fit_marginals_dp", budget);
  return model;
}

Dataset SampleModel(const GeneratorModel& model, std::size_t n,
                    SeededRng& rng) {
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "sample size must be >= 1");
  std::vector<Record> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Record r(model.schema.size());
    for (std::size_t c = 0; c < model.schema.size(); ++c) {
      const ColumnDistribution& dist = model.columns[c];
      const std::size_t cell = DrawIndex(dist.probabilities, rng);
      if (model.schema.column(c).is_numeric()) {
        const double lo = dist.bin_edges[cell];
        const double hi = dist.bin_edges[cell + 1];
        r[c] = lo + rng.Uniform01() * (hi - lo);
      } else {
        r[c] = CategoryIndex{static_cast<std::uint32_t>(cell)};
      }
    }
    rows.push_back(std::move(r));
  }
  return Dataset(model.schema, std::move(rows));
}

double MaxColumnTotalVariation(const GeneratorModel& a,
                               const GeneratorModel& b) {
  if (!(a.schema == b.schema) || a.columns.size() != b.columns.size()) {
    Fail(ErrorCode::kSchemaMismatch, "models have different schemas");
  }
  double worst = 0.0;
  for (std::size_t c = 0; c < a.columns.size(); ++c) {
    const auto& p = a.columns[c].probabilities;
    const auto& q = b.columns[c].probabilities;
    if (p.size() != q.size()) {
      Fail(ErrorCode::kSchemaMismatch, "models have different bin layouts");
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
    worst = std::max(worst, 0.5 * tv);
  }
  return worst;
}

void GeneratorModel::Validate() const {
  if (columns.size() != schema.size()) {
    Fail(ErrorCode::kInvalidModel, "column count differs from schema");
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Column& col = schema.column(c);
    const auto& dist = columns[c];
    const std::string where = "column '" + col.name + "': ";
    if (dist.probabilities.empty()) {
      Fail(ErrorCode::kInvalidModel, where + "no probabilities");
    }
    double sum = 0.0;
    for (double p : dist.probabilities) {
      if (!(p >= 0.0)) Fail(ErrorCode::kInvalidModel, where + "negative mass");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      Fail(ErrorCode::kInvalidModel, where + "mass does not sum to 1");
    }
    if (col.is_numeric()) {
      const auto& e = dist.bin_edges;
      if (e.size() != dist.probabilities.size() + 1) {
        Fail(ErrorCode::kInvalidModel, where + "bin edge count mismatch");
      }
      if (e.front() != col.numeric().min || e.back() != col.numeric().max ||
          !std::is_sorted(e.begin(), e.end())) {
        Fail(ErrorCode::kInvalidModel, where + "bin edges do not span range");
      }
    } else {
      if (dist.probabilities.size() != col.categorical().levels.size()) {
        Fail(ErrorCode::kInvalidModel, where + "level count mismatch");
      }
      if (!dist.bin_edges.empty()) {
        Fail(ErrorCode::kInvalidModel, where + "categorical column has edges");
      }
    }
  }
}

nlohmann::json GeneratorModel::ToJson() const {
  nlohmann::json cols = nlohmann::json::array();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    nlohmann::json col = {{"name", schema.column(c).name},
                          {"probabilities", columns[c].probabilities}};
    if (schema.column(c).is_numeric()) col["bin_edges"] = columns[c].bin_edges;
    cols.push_back(std::move(col));
  }
  nlohmann::json j = {{"schema", schema.ToJson()}, {"columns", cols}};
  if (dp_meta) {
    j["dp_meta"] = {{"epsilon", dp_meta->budget.epsilon},
                    {"delta", dp_meta->budget.delta},
                    {"noise_scale", dp_meta->noise_scale}};
  } else {
    j["dp_meta"] = nullptr;
  }
  return j;
}

GeneratorModel GeneratorModel::FromJson(const nlohmann::json& j) {
  GeneratorModel model;
  try {
    model.schema = TabularSchema::FromJson(j.at("schema"));
    for (const auto& col : j.at("columns")) {
      ColumnDistribution dist;
      dist.probabilities = col.at("probabilities").get<std::vector<double>>();
      if (col.contains("bin_edges")) {
        dist.bin_edges = col.at("bin_edges").get<std::vector<double>>();
      }
      model.columns.push_back(std::move(dist));
    }
    if (j.contains("dp_meta") && !j.at("dp_meta").is_null()) {
      const auto& m = j.at("dp_meta");
      model.dp_meta = DpMeta{
          {m.at("epsilon").get<double>(), m.at("delta").get<double>()},
          m.at("noise_scale").get<double>()};
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidModel, e.what());
  }
  model.Validate();
  return model;
}

void GeneratorModel::Save(const std::filesystem::path& path) const {
  WriteFile(path, ToJson().dump(2) + "\n");
}

GeneratorModel GeneratorModel::Load(const std::filesystem::path& path) {
  try {
    return FromJson(nlohmann::json::parse(ReadFile(path)));
  } catch (const nlohmann::json::parse_error& e) {
    Fail(ErrorCode::kInvalidModel, e.what());
  }
}

}  // namespace synthaudit
