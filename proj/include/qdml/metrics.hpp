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

#pragma once

#include <cstdint>
#include <vector>

#include "qdml/types.hpp"

namespace qdml {

// Classification quality summary. confusion(t, p) counts samples of true
// class t predicted as p, so each row sums to that class's sample count.
// Precision/recall for a class with no predicted/true samples is reported
// as zero.
struct ClassificationReport {
  Scalar accuracy = 0.0;
  MatrixT<std::int64_t> confusion;
  RVector precision;
  RVector recall;
};

ClassificationReport evaluate_classification(const std::vector<int>& predicted,
                                             const std::vector<int>& truth,
                                             int num_classes);

// Density-estimate quality against a reference curve evaluated on the same
// points: Pearson correlation and mean absolute error.
struct DensityReport {
  Scalar pearson = 0.0;
  Scalar mean_abs_error = 0.0;
};

DensityReport evaluate_density(const Eigen::Ref<const RVector>& predicted,
                               const Eigen::Ref<const RVector>& reference);

Scalar pearson_correlation(const Eigen::Ref<const RVector>& a,
                           const Eigen::Ref<const RVector>& b);

}  // namespace qdml
