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

#include <doctest.h>

#include "oracles.hpp"
#include "qdml/feature_map.hpp"

using namespace qdml;
using namespace qdml::testing;

namespace {

// Encoded amplitudes are cosines or softmax roots, so the imaginary part must
// vanish; extraction asserts that before handing back the real vector.
RVector features(const FeatureMap& map, const Eigen::Ref<const RVector>& x) {
  const CVector amps = apply_feature_map(map, x).amplitudes();
  REQUIRE(amps.imag().cwiseAbs().maxCoeff() == 0.0);
  return amps.real();
}

}  // namespace

TEST_CASE("rff map: unit norm for arbitrary inputs") {
  const RffMap map = make_rff_map(3, 32, 1.0, 42);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    RVector x(3);
    x << rng.normal(0, 3), rng.normal(0, 3), rng.normal(0, 3);
    const RVector z = features(map, x);
    REQUIRE(z.size() == 32);
    CHECK(std::abs(z.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("rff map: 18 components from a scalar input") {
  const RffMap map = make_rff_map(1, 18, 2.0, 11);
  CHECK(map.weights.rows() == 18);
  CHECK(map.weights.cols() == 1);
  CHECK(map.offsets.size() == 18);
  RVector x(1);
  x << 0.37;
  const RVector z = features(map, x);
  CHECK(z.size() == 18);
  CHECK(std::abs(z.norm() - 1.0) < 1e-12);

  // Pre-normalization components are cos(w_i x + b_i); verify one directly.
  const Scalar raw0 = std::cos(map.weights(0, 0) * 0.37 + map.offsets[0]);
  RVector raw(18);
  for (Index i = 0; i < 18; ++i) {
    raw[i] = std::cos(map.weights(i, 0) * 0.37 + map.offsets[i]);
  }
  CHECK(raw[0] == raw0);
  const RVector expected = raw / raw.norm();
  CHECK(max_abs_diff_real(z, expected) == 0.0);
}

TEST_CASE("rff map: identical seed reproduces weights and offsets bit for bit") {
  const RffMap a = make_rff_map(2, 64, 0.5, 2026);
  const RffMap b = make_rff_map(2, 64, 0.5, 2026);
  CHECK(a.weights == b.weights);
  CHECK(a.offsets == b.offsets);

  const RffMap c = make_rff_map(2, 64, 0.5, 2027);
  CHECK(a.weights != c.weights);
}

TEST_CASE("rff map: weight scale follows the bandwidth parameter") {
  // W entries are N(0, 2*gamma); the empirical variance of 4096 draws should
  // sit within 10 percent of the target.
  const Scalar gamma = 3.0;
  const RffMap map = make_rff_map(8, 512, gamma, 97);
  const Scalar var = map.weights.reshaped().squaredNorm() / (512.0 * 8.0);
  CHECK(var == doctest::Approx(2.0 * gamma).epsilon(0.1));

  // Offsets live in [0, 2*pi).
  CHECK(map.offsets.minCoeff() >= 0.0);
  CHECK(map.offsets.maxCoeff() < 2.0 * 3.14159265358979323846);
}

TEST_CASE("rff map: induced kernel decreases with distance (rank correlation)") {
  // Pairs at controlled distances: the normalized-feature inner product must
  // track exp(-gamma*|x-y|^2) monotonically. Spearman rho above 0.9.
  const int dim = 256;
  const RffMap map = make_rff_map(2, dim, 1.0, 314);
  Rng rng(2718);

  const int pairs = 500;
  std::vector<Scalar> neg_dist2(pairs), similarity(pairs);
  for (int i = 0; i < pairs; ++i) {
    RVector x(2);
    x << rng.normal(), rng.normal();
    const Scalar r = rng.uniform(0.0, 2.5);
    const Scalar theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    RVector y(2);
    y << x[0] + r * std::cos(theta), x[1] + r * std::sin(theta);

    neg_dist2[i] = -(x - y).squaredNorm();
    similarity[i] = features(map, x).dot(features(map, y));
  }
  CHECK(spearman_correlation(neg_dist2, similarity) > 0.9);
}

TEST_CASE("rff map: validation and dimension mismatch") {
  CHECK_THROWS_AS(make_rff_map(0, 8, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_rff_map(2, 1, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_rff_map(2, 8, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_rff_map(2, 8, -1.0, 1), std::invalid_argument);

  const RffMap map = make_rff_map(2, 8, 1.0, 1);
  CHECK_THROWS_AS(apply_feature_map(map, RVector::Zero(3)), std::invalid_argument);
}

TEST_CASE("softmax map: exact unit norm by construction") {
  RMatrix anchors(3, 2);
  anchors << 0, 0, 1, 0, 0, 1;
  const SoftmaxMap map = make_softmax_map(anchors, 4.0);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RVector x(2);
    x << rng.uniform(-5, 5), rng.uniform(-5, 5);
    const RVector z = features(map, x);
    REQUIRE(z.size() == 3);
    // Components are square roots of a softmax, so the squared norm is the
    // softmax total: exactly 1 up to rounding in the final sum.
    CHECK(std::abs(z.squaredNorm() - 1.0) < 1e-14);
    CHECK(z.minCoeff() > 0.0);
  }
}

TEST_CASE("softmax map: input at an anchor dominates at high sharpness") {
  RMatrix anchors(4, 2);
  anchors << 0, 0, 2, 0, 0, 2, 2, 2;
  const SoftmaxMap map = make_softmax_map(anchors, 100.0);
  for (Index k = 0; k < 4; ++k) {
    const RVector z = features(map, RVector(anchors.row(k)));
    CHECK(z[k] > 0.99);
  }
}

TEST_CASE("softmax map: invariant under a common shift of all squared distances") {
  // Translating the input and anchors together leaves every pairwise distance
  // unchanged, so the features match to rounding.
  RMatrix anchors(3, 2);
  anchors << 0, 0, 1, 2, -1, 1;
  const SoftmaxMap map = make_softmax_map(anchors, 2.0);

  RVector shift(2);
  shift << 13.5, -7.25;
  RMatrix moved = anchors;
  moved.rowwise() += shift.transpose();
  const SoftmaxMap map2 = make_softmax_map(moved, 2.0);

  RVector x(2);
  x << 0.3, 0.9;
  const RVector z1 = features(map, x);
  const RVector z2 = features(map2, RVector(x + shift));
  CHECK(max_abs_diff_real(z1, z2) < 1e-12);
}

TEST_CASE("softmax map: max-shifted exponentials survive extreme sharpness") {
  RMatrix anchors(2, 1);
  anchors << -100.0, 100.0;
  const SoftmaxMap map = make_softmax_map(anchors, 50.0);
  RVector x(1);
  x << -100.0;
  const RVector z = features(map, x);
  CHECK(z[0] > 0.999);
  CHECK(std::isfinite(z[1]));
  CHECK(z[1] >= 0.0);
}

TEST_CASE("softmax map: validation") {
  RMatrix anchors(3, 2);
  anchors << 0, 0, 1, 0, 0, 1;
  CHECK_THROWS_AS(make_softmax_map(anchors, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_softmax_map(anchors, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_softmax_map(RMatrix::Zero(1, 2), 1.0), std::invalid_argument);

  RMatrix dup(2, 2);
  dup << 1, 1, 1, 1;
  CHECK_THROWS_AS(make_softmax_map(dup, 1.0), std::invalid_argument);

  const SoftmaxMap map = make_softmax_map(anchors, 1.0);
  CHECK_THROWS_AS(apply_feature_map(map, RVector::Zero(3)), std::invalid_argument);
}

TEST_CASE("anchor grid: inclusive endpoints in row-major, last axis fastest") {
  const RMatrix grid =
      make_anchor_grid({{0.0, 1.0}, {0.0, 1.0}}, {3, 3});
  REQUIRE(grid.rows() == 9);
  REQUIRE(grid.cols() == 2);
  CHECK(grid(0, 0) == 0.0);
  CHECK(grid(0, 1) == 0.0);
  CHECK(grid(1, 0) == 0.0);
  CHECK(grid(1, 1) == 0.5);
  CHECK(grid(4, 0) == 0.5);
  CHECK(grid(4, 1) == 0.5);
  CHECK(grid(8, 0) == 1.0);
  CHECK(grid(8, 1) == 1.0);
}

TEST_CASE("anchor grid: single count collapses an axis to its midpoint") {
  const RMatrix grid = make_anchor_grid({{-2.0, 4.0}, {0.0, 1.0}}, {1, 2});
  REQUIRE(grid.rows() == 2);
  CHECK(grid(0, 0) == 1.0);
  CHECK(grid(1, 0) == 1.0);
  CHECK(grid(0, 1) == 0.0);
  CHECK(grid(1, 1) == 1.0);
}

TEST_CASE("anchor grid: validation") {
  CHECK_THROWS_AS(make_anchor_grid({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_anchor_grid({{0.0, 1.0}}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_anchor_grid({{0.0, 1.0}}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_anchor_grid({{1.0, 0.0}}, {2}), std::invalid_argument);
}

TEST_CASE("feature map variant reports dimensions for both kinds") {
  const FeatureMap rff = make_rff_map(2, 16, 1.0, 3);
  CHECK(feature_input_dim(rff) == 2);
  CHECK(feature_output_dim(rff) == 16);

  RMatrix anchors(3, 2);
  anchors << 0, 0, 1, 0, 0, 1;
  const FeatureMap sm = make_softmax_map(anchors, 1.0);
  CHECK(feature_input_dim(sm) == 2);
  CHECK(feature_output_dim(sm) == 3);

  RVector x(2);
  x << 0.5, 0.5;
  CHECK(apply_feature_map(sm, x).size() == 3);
  CHECK(apply_feature_map(rff, x).size() == 16);
}
