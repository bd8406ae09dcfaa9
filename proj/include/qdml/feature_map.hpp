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
#include <utility>
#include <variant>
#include <vector>

#include "qdml/state.hpp"

namespace qdml {

// Random Fourier feature map for the Gaussian kernel exp(-gamma |x - y|^2):
// z_i(x) = cos(w_i . x + b_i) with w_i ~ N(0, 2 gamma I) and b_i ~ U[0, 2 pi),
// then normalized to unit length. Inner products of mapped vectors
// approximate the kernel up to the normalization. Weights and offsets are a
// pure function of (dims, gamma, seed), so storing the seed reproduces them.
struct RffMap {
  int input_dim = 0;
  int output_dim = 0;
  Scalar gamma = 0.0;
  std::uint64_t seed = 0;
  RMatrix weights;  // output_dim x input_dim
  RVector offsets;  // output_dim
};

RffMap make_rff_map(int input_dim, int output_dim, Scalar gamma, std::uint64_t seed);

// Distance-softmax map over fixed anchor points: amplitude i is
// sqrt(softmax_i(-beta |x - anchor_i|^2)). Always exactly unit norm, and
// concentrates on the anchor nearest to x as beta grows.
struct SoftmaxMap {
  RMatrix anchors;  // output_dim x input_dim, rows pairwise distinct
  Scalar beta = 1.0;
};

SoftmaxMap make_softmax_map(RMatrix anchors, Scalar beta);

// Anchor points on the inclusive axis-aligned grid bounds[a].first ..
// bounds[a].second with counts[a] points per axis, in row-major order
// (last axis fastest). A single-point axis uses the interval midpoint.
RMatrix make_anchor_grid(const std::vector<std::pair<Scalar, Scalar>>& bounds,
                         const std::vector<int>& counts);

using FeatureMap = std::variant<RffMap, SoftmaxMap>;

// Encodes x as a single-qudit pure state of the map's output dimension.
QuditState apply_feature_map(const FeatureMap& map, const Eigen::Ref<const RVector>& x);
QuditState apply_feature_map(const RffMap& map, const Eigen::Ref<const RVector>& x);
QuditState apply_feature_map(const SoftmaxMap& map, const Eigen::Ref<const RVector>& x);

int feature_input_dim(const FeatureMap& map);
int feature_output_dim(const FeatureMap& map);

}  // namespace qdml
