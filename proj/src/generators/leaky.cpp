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

#include "synthaudit/generators/leaky.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/sampling.hpp"

namespace synthaudit {
namespace {

Record Perturb(const Record& r, double sigma, SeededRng& rng) {
  Record out = r;
  if (sigma == 0.0) return out;
  for (Value& v : out) {
    if (IsNumeric(v)) v = AsNumeric(v) + sigma * rng.StandardNormal();
  }
  return out;
}

Record DefaultFiller(const TabularSchema& schema) {
  Record r(schema.size());
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (schema.column(c).is_numeric()) {
      r[c] = 0.0;
    } else {
      r[c] = CategoryIndex{0};
    }
  }
  return r;
}

[[noreturn]] void Precondition(const std::string& message) {
  Fail(ErrorCode::kVariantPreconditionFailed, message);
}

struct Generate {
  const Dataset& train;
  const Dataset& test;
  SeededRng& rng;

  Dataset operator()(const CopyTest&) const {
    if (test.empty()) Precondition("CopyTest needs a non-empty test set");
    RequireSameSchema(train, test, "CopyTest");
    return test;
  }

  Dataset operator()(const OutlierLeak& spec) const {
    if (spec.k < 1) Precondition("OutlierLeak needs k >= 1");
    if (!(spec.perturb_sigma >= 0.0)) {
      Precondition("OutlierLeak needs perturb_sigma >= 0");
    }
    if (train.n() < spec.k) Precondition("OutlierLeak needs train.n >= k");
    const Record filler =
        spec.filler_value ? *spec.filler_value : DefaultFiller(train.schema());
    try {
      train.schema().ValidateRecord(filler);
    } catch (const Error& e) {
      Precondition(std::string("filler_value: ") + e.what());
    }
    std::vector<Record> rows;
    rows.reserve(spec.k + spec.filler_count);
    for (std::size_t idx : CentroidOutliers(train, spec.k)) {
      rows.push_back(Perturb(train.row(idx), spec.perturb_sigma, rng));
    }
    for (std::size_t i = 0; i < spec.filler_count; ++i) rows.push_back(filler);
    return Dataset(train.shared_schema(), std::move(rows));
  }

  Dataset operator()(const Overfit& spec) const {
    if (!(spec.resample_sigma >= 0.0)) {
      Precondition("Overfit needs resample_sigma >= 0");
    }
    if (train.empty()) Precondition("Overfit needs a non-empty train set");
    const auto order = SampleWithoutReplacement(train.n(), train.n(), rng);
    std::vector<Record> rows;
    rows.reserve(order.size());
    for (std::size_t idx : order) {
      rows.push_back(Perturb(train.row(idx), spec.resample_sigma, rng));
    }
    return Dataset(train.shared_schema(), std::move(rows));
  }

  Dataset operator()(const TwoRecordWorstCase& spec) const {
    try {
      return Dataset(train.shared_schema(), {spec.target, spec.other});
    } catch (const Error& e) {
      Precondition(std::string("TwoRecordWorstCase: ") + e.what());
    }
  }
};

}  // namespace

Dataset GenerateLeaky(const LeakySpec& spec, const Dataset& train,
                      const Dataset& test, SeededRng& rng) {
  return std::visit(Generate{train, test, rng}, spec);
}

std::vector<std::size_t> CentroidOutliers(const Dataset& data, std::size_t k) {
  if (k > data.n()) {
    Fail(ErrorCode::kInvalidArgument, "more outliers requested than rows");
  }
  const TabularSchema& schema = data.schema();
  const double n = static_cast<double>(data.n());
  std::vector<double> mean(schema.size(), 0.0), sd(schema.size(), 0.0);
  std::vector<std::uint32_t> mode(schema.size(), 0);
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (schema.column(c).is_numeric()) {
      for (const Record& r : data.rows()) mean[c] += AsNumeric(r[c]);
      mean[c] /= n;
      for (const Record& r : data.rows()) {
        const double d = AsNumeric(r[c]) - mean[c];
        sd[c] += d * d;
      }
      sd[c] = std::sqrt(sd[c] / n);
    } else {
      std::vector<std::size_t> counts(
          schema.column(c).categorical().levels.size(), 0);
      for (const Record& r : data.rows()) ++counts[AsCategory(r[c])];
      mode[c] = static_cast<std::uint32_t>(
          std::max_element(counts.begin(), counts.end()) - counts.begin());
    }
  }
  std::vector<double> dist(data.n(), 0.0);
  for (std::size_t i = 0; i < data.n(); ++i) {
    double sq = 0.0;
    for (std::size_t c = 0; c < schema.size(); ++c) {
      const Value& v = data.row(i)[c];
      if (schema.column(c).is_numeric()) {
        if (sd[c] > 0.0) {
          const double z = (AsNumeric(v) - mean[c]) / sd[c];
          sq += z * z;
        }
      } else if (AsCategory(v) != mode[c]) {
        sq += 1.0;
      }
    }
    dist[i] = std::sqrt(sq);
  }
  std::vector<std::size_t> order(data.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dist[a] > dist[b];
  });
  order.resize(k);
  return order;
}

nlohmann::json LeakySpecToJson(const LeakySpec& spec,
                               const TabularSchema& schema) {
  struct Visitor {
    const TabularSchema& schema;
    nlohmann::json operator()(const CopyTest&) const {
      return {{"variant", "copy_test"}};
    }
    nlohmann::json operator()(const OutlierLeak& s) const {
      return {{"variant", "outlier_leak"},
              {"k", s.k},
              {"perturb_sigma", s.perturb_sigma},
              {"filler_count", s.filler_count},
              {"filler_value",
               s.filler_value ? nlohmann::json(schema.DescribeRecord(*s.filler_value))
                              : nlohmann::json("default")}};
    }
    nlohmann::json operator()(const Overfit& s) const {
      return {{"variant", "overfit"}, {"resample_sigma", s.resample_sigma}};
    }
    nlohmann::json operator()(const TwoRecordWorstCase& s) const {
      return {{"variant", "two_record_worst_case"},
              {"target", schema.DescribeRecord(s.target)},
              {"other", schema.DescribeRecord(s.other)}};
    }
  };
  return std::visit(Visitor{schema}, spec);
}

}  // namespace synthaudit
