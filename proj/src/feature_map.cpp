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

#include "qdml/feature_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdml/rng.hpp"

namespace qdml {

RffMap make_rff_map(int input_dim, int output_dim, Scalar gamma, std::uint64_t seed) {
  if (input_dim < 1) throw std::invalid_argument("rff: input dimension must be >= 1");
  if (output_dim < 2) throw std::invalid_argument("rff: output dimension must be >= 2");
  if (!(gamma > 0.0)) throw std::invalid_argument("rff: gamma must be positive");

  RffMap map;
  map.input_dim = input_dim;
  map.output_dim = output_dim;
  map.gamma = gamma;
  map.seed = seed;
  map.weights.resize(output_dim, input_dim);
  map.offsets.resize(output_dim);

  // Row-major fill order is part of the seed contract.
  Rng rng(seed);
  const Scalar stddev = std::sqrt(2.0 * gamma);
  for (int i = 0; i < output_dim; ++i) {
    for (int j = 0; j < input_dim; ++j) {
      map.weights(i, j) = rng.normal(0.0, stddev);
    }
  }
  for (int i = 0; i < output_dim; ++i) {
    map.offsets[i] = rng.uniform(0.0, 2.0 * std::numbers::pi_v<Scalar>);
  }
  return map;
}

SoftmaxMap make_softmax_map(RMatrix anchors, Scalar beta) {
  if (anchors.rows() < 2) throw std::invalid_argument("softmax map: needs >= 2 anchors");
  if (anchors.cols() < 1) throw std::invalid_argument("softmax map: anchors need >= 1 column");
  if (!(beta > 0.0)) throw std::invalid_argument("softmax map: beta must be positive");
  for (Index i = 0; i < anchors.rows(); ++i) {
    for (Index j = i + 1; j < anchors.rows(); ++j) {
      if ((anchors.row(i) - anchors.row(j)).norm() == 0.0) {
        throw std::invalid_argument("softmax map: anchors must be pairwise distinct");
      }
    }
  }
  return SoftmaxMap{std::move(anchors), beta};
}

RMatrix make_anchor_grid(const std::vector<std::pair<Scalar, Scalar>>& bounds,
                         const std::vector<int>& counts) {
  if (bounds.empty() || bounds.size() != counts.size()) {
    throw std::invalid_argument("anchor grid: bounds and counts must align and be nonempty");
  }
  Index total = 1;
  for (std::size_t a = 0; a < bounds.size(); ++a) {
    if (counts[a] < 1) throw std::invalid_argument("anchor grid: count must be >= 1");
    if (!(bounds[a].first < bounds[a].second)) {
      throw std::invalid_argument("anchor grid: bounds must satisfy lo < hi");
    }
    total *= counts[a];
  }

  const auto axis_value = [&](std::size_t a, int k) -> Scalar {
    const auto [lo, hi] = bounds[a];
    if (counts[a] == 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<Scalar>(k) / static_cast<Scalar>(counts[a] - 1);
  };

  RMatrix grid(total, static_cast<Index>(bounds.size()));
  for (Index row = 0; row < total; ++row) {
    Index rest = row;
    for (std::size_t a = bounds.size(); a-- > 0;) {
      const int k = static_cast<int>(rest % counts[a]);
      rest /= counts[a];
      grid(row, static_cast<Index>(a)) = axis_value(a, k);
    }
  }
  return grid;
}

namespace {

void check_input(const char* what, int expected, Index got) {
  if (got != expected) {
    throw std::invalid_argument(std::string(what) + ": expected input of length " +
                                std::to_string(expected) + ", got " + std::to_string(got));
  }
}

}  // namespace

QuditState apply_feature_map(const RffMap& map, const Eigen::Ref<const RVector>& x) {
  check_input("rff", map.input_dim, x.size());
  RVector z = (map.weights * x + map.offsets).array().cos();
  const Scalar n = z.norm();
  if (n < 1e-12) {
    throw NumericError("rff: mapped vector has vanishing norm");
  }
  z /= n;
  return QuditState::unchecked({map.output_dim}, z.cast<Complex>());
}

QuditState apply_feature_map(const SoftmaxMap& map, const Eigen::Ref<const RVector>& x) {
  check_input("softmax map", static_cast<int>(map.anchors.cols()), x.size());
  RVector logits(map.anchors.rows());
  for (Index i = 0; i < map.anchors.rows(); ++i) {
    logits[i] = -map.beta * (x.transpose() - map.anchors.row(i)).squaredNorm();
  }
  // Max-shifted softmax keeps the exponentials in range for any beta.
  const RVector weights = (logits.array() - logits.maxCoeff()).exp();
  const RVector amps = (weights / weights.sum()).cwiseSqrt();
  return QuditState::unchecked({static_cast<int>(map.anchors.rows())}, amps.cast<Complex>());
}

QuditState apply_feature_map(const FeatureMap& map, const Eigen::Ref<const RVector>& x) {
  return std::visit([&](const auto& m) { return apply_feature_map(m, x); }, map);
}

int feature_input_dim(const FeatureMap& map) {
  return std::visit(
      [](const auto& m) -> int {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, RffMap>) {
          return m.input_dim;
        } else {
          return static_cast<int>(m.anchors.cols());
        }
      },
      map);
}

int feature_output_dim(const FeatureMap& map) {
  return std::visit(
      [](const auto& m) -> int {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, RffMap>) {
          return m.output_dim;
        } else {
          return static_cast<int>(m.anchors.rows());
        }
      },
      map);
}

}  // namespace qdml
