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

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qdml/types.hpp"

namespace qdml {

// Numeric samples, one row per point, with optional integer labels. The
// params string carries the generator name and arguments as JSON so outputs
// can be reproduced from their sidecar files.
struct Dataset {
  RMatrix samples;
  std::vector<int> labels;  // empty when unlabeled
  std::string params;

  Index size() const { return samples.rows(); }
  Index point_dim() const { return samples.cols(); }
  bool labeled() const { return !labels.empty(); }
};

// Two-component 1-d Gaussian mixture with closed-form density, used as a
// ground-truth target for density estimation.
struct GaussianMixture1d {
  std::array<Scalar, 2> weights{0.4, 0.6};
  std::array<Scalar, 2> means{-1.0, 1.5};
  std::array<Scalar, 2> stddevs{0.6, 0.4};

  Scalar pdf(Scalar x) const;
};

// Samples n points: component k with probability weights[k], then
// N(means[k], stddevs[k]^2). The result is unlabeled; component identity is
// deliberately not recorded since density estimation never sees it.
Dataset sample_gaussian_mixture_1d(Index n, const GaussianMixture1d& mix,
                                   std::uint64_t seed);

// n evenly spaced points on [lo, hi] inclusive, unlabeled.
Dataset make_grid_1d(Scalar lo, Scalar hi, Index n);

// Two interleaving half-circles with additive Gaussian noise. The first
// floor(n/2) points trace (cos t, sin t) and the rest (1 - cos t, 1/2 - sin t)
// for t evenly spaced on [0, pi] inclusive; labels are 0 and 1.
Dataset make_moons(Index n, Scalar noise, std::uint64_t seed);

// Concentric circles with additive Gaussian noise: outer unit circle
// (label 0, floor(n/2) points) and inner circle scaled by `factor` (label 1),
// angles evenly spaced on [0, 2 pi) excluding the endpoint.
Dataset make_circles(Index n, Scalar noise, Scalar factor, std::uint64_t seed);

// Seeded shuffle, then the first train_count rows form the first part.
std::pair<Dataset, Dataset> train_test_split(const Dataset& data, Index train_count,
                                             std::uint64_t seed);

}  // namespace qdml
