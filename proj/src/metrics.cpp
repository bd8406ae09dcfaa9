// Copyright 2026 The qdml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdml/metrics.hpp"

#include <cmath>

namespace qdml {

ClassificationReport evaluate_classification(const std::vector<int>& predicted,
                                             const std::vector<int>& truth,
                                             int num_classes) {
  if (predicted.size() != truth.size() || predicted.empty()) {
    throw std::invalid_argument("evaluate: prediction and truth lists must align and be nonempty");
  }
  if (num_classes < 1) throw std::invalid_argument("evaluate: class count must be >= 1");

  ClassificationReport report;
  report.confusion = MatrixT<std::int64_t>::Zero(num_classes, num_classes);
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] < 0 || truth[i] >= num_classes || predicted[i] < 0 ||
        predicted[i] >= num_classes) {
      throw std::invalid_argument("evaluate: label outside 0..num_classes-1");
    }
    report.confusion(truth[i], predicted[i])++;
    if (truth[i] == predicted[i]) correct++;
  }
  report.accuracy = static_cast<Scalar>(correct) / static_cast<Scalar>(truth.size());

  report.precision.resize(num_classes);
  report.recall.resize(num_classes);
  for (int c = 0; c < num_classes; ++c) {
    const std::int64_t tp = report.confusion(c, c);
    const std::int64_t pred_total = report.confusion.col(c).sum();
    const std::int64_t true_total = report.confusion.row(c).sum();
    report.precision[c] =
        pred_total > 0 ? static_cast<Scalar>(tp) / static_cast<Scalar>(pred_total) : 0.0;
    report.recall[c] =
        true_total > 0 ? static_cast<Scalar>(tp) / static_cast<Scalar>(true_total) : 0.0;
  }
  return report;
}

Scalar pearson_correlation(const Eigen::Ref<const RVector>& a,
                           const Eigen::Ref<const RVector>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw std::invalid_argument("pearson: vectors must align with length >= 2");
  }
  const RVector da = a.array() - a.mean();
  const RVector db = b.array() - b.mean();
  const Scalar denom = da.norm() * db.norm();
  if (denom == 0.0) {
    throw std::invalid_argument("pearson: zero variance input");
  }
  return da.dot(db) / denom;
}

DensityReport evaluate_density(const Eigen::Ref<const RVector>& predicted,
                               const Eigen::Ref<const RVector>& reference) {
  DensityReport report;
  report.pearson = pearson_correlation(predicted, reference);
  report.mean_abs_error = (predicted - reference).cwiseAbs().mean();
  return report;
}

}  // namespace qdml
